// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass. Time limits are wall-clock seconds.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "isospec/oracle.hpp"
#include "isospec/verify.hpp"

using namespace isospec;

namespace {
  using Clock = std::chrono::steady_clock;

  double since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  std::string secs(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << " s";
    return os.str();
  }

  bool report(unsigned id, bool ok, std::string const& detail) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  "
              << detail << std::endl;
    return ok;
  }

  // Failed claims of a report list, for diagnostics.
  std::string failures(std::vector<CheckReport> const& reports) {
    std::string out;
    for (auto const& r : reports) {
      for (auto const& c : r.claims) {
        if (c.verdict == Verdict::fail) {
          out += "\n    " + r.check + " " + r.params.dump() + ": " + c.statement;
        }
      }
    }
    return out;
  }

  bool enumeration_matches(unsigned            id,
                           char const*         name,
                           unsigned            q,
                           Integer const&      expected_elements,
                           Integer const&      expected_centre,
                           SpectrumGens const& closed,
                           double              limit) {
    auto const start = Clock::now();
    auto const e     = enumerate(make_oracle_group(name, q));
    double const t   = since(start);
    bool const   ok  = e.elements == expected_elements
                    && e.centre_size == expected_centre
                    && equals(e.spectrum, closed) && t < limit;
    std::ostringstream os;
    os << e.group.label() << ": " << e.elements << " elements, centre "
       << e.centre_size << ", enumerated generators " << gens_text(e.spectrum.gens)
       << " vs closed form " << gens_text(closed.gens) << " for " << closed.label
       << " (" << secs(t) << ", limit " << secs(limit) << ")";
    return report(id, ok, os.str());
  }

  bool criterion4() {
    bool               ok = true;
    std::ostringstream os;
    for (unsigned q : {2u, 4u, 8u, 16u}) {
      auto const  start = Clock::now();
      auto const  r     = check_go8_equality(q);
      double const t    = since(start);
      bool const  pass  = r.overall() == Verdict::pass && t < 1.0
                         && std::none_of(r.claims.begin(), r.claims.end(),
                                         [](auto const& c) {
                                           return c.verdict == Verdict::info;
                                         });
      ok = ok && pass;
      os << "q=" << q << " " << (pass ? "ok" : "failed") << " (" << secs(t)
         << "); ";
      if (!pass) {
        os << failures({r});
      }
    }
    auto const b = twisted_order_b_gamma(32);
    ok           = ok && b.unitary && b.order == 8;
    os << "B gamma order at q=32: " << b.order << "; ";
    auto const go4 = enumerate(make_oracle_group("GO4+", 2));
    bool const four = go4.elements == 72 && contains(go4.spectrum, 4);
    ok              = ok && four;
    os << "GO+4(2): " << go4.elements << " elements, 4 in spectrum: "
       << (four ? "yes" : "no");
    return report(4, ok, os.str());
  }

  bool criterion5() {
    using Json = nlohmann::ordered_json;
    Json const odd = {3, 5, 7, 9, 11, 13, 25, 27};
    Json const all = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
    Json config    = {
        {"checks",
            {{{"check", "diff"}, {"item", "i"}, {"n", {3, 4, 5, 6}}, {"q", odd}},
             {{"check", "diff"}, {"item", "v"}, {"n", {2, 3, 4, 5, 6}}, {"q", odd}},
             {{"check", "diff"}, {"item", "iii"},
              {"q", {4, 5, 7, 8, 9, 11, 13, 16, 25, 27}}},
             {{"check", "diff"}, {"item", "iv"}, {"q", odd}},
             {{"check", "diff"}, {"item", "vi"}, {"n", {4, 5, 6}}, {"q", all}},
             {{"check", "diff"}, {"item", "ii"}, {"n", {4, 5, 6}}, {"q", all},
              {"skip_invalid", true}}}}};
    auto const start   = Clock::now();
    auto const reports = run_suite(config);
    bool       ok      = all_passed(reports);
    std::size_t conditional = 0, full_ii = 0;
    for (auto const& r : reports) {
      if (r.params["item"] == "ii" && r.params["n"] == 4
          && Integer(r.params["q"].get<std::string>()) % 2 == 0) {
        ++full_ii;
        ok = ok && r.overall() == Verdict::pass;
      }
      if (r.params["item"] != "ii") {
        ok = ok && r.overall() == Verdict::pass;
      }
      conditional += r.overall() == Verdict::conditional;
    }
    ok = ok && full_ii == 3;

    // negative controls: swapped memberships must fail with the witness
    std::size_t controls = 0, caught = 0;
    auto        control  = [&](Integer const& x, bool member, SpectrumGens const& s) {
      ++controls;
      auto const r = check_claim(x, member, s);
      caught += r.overall() == Verdict::fail && r.claims[0].witness.size() == 1
                && r.claims[0].witness[0] == x && contains(s, x) != member;
    };
    for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
      Integer const p = prime_power(q)->first;
      for (unsigned n = 3; n <= 6; ++n) {
        auto const i = check_diff("i", n, q);
        unsigned   k = i.params["k"].get<unsigned>();
        for (auto const& x : primitive_prime_divisors(q, k)) {
          control(2 * p * x, true, spectrum(GroupId::make(Family::Bn, n, q)));
          control(2 * p * x, false, spectrum(GroupId::make(Family::Sp, n, q)));
        }
      }
      control(p * (q * q + 1), true, spectrum(GroupId::make(Family::O8plus, 4, q)));
      control(p * (q * q + 1), false, spectrum(GroupId::make(Family::Sp, 3, q)));
    }
    for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u}) {
      Integer const d = q % 2 == 0 ? 1 : 2;
      Integer const a = (ipow(Integer(q), 4) - 1) / (d * d);
      control(a, true, spectrum(GroupId::make(Family::Sp, 3, q)));
      control(a, false, spectrum(GroupId::make(Family::O8plus, 4, q)));
    }
    ok = ok && caught == controls;
    std::ostringstream os;
    os << reports.size() << " reports (" << conditional
       << " conditional on adj_p, " << full_ii
       << " full diff ii checks at n=4), negative controls failing as expected: "
       << caught << "/" << controls << " (" << secs(since(start)) << ")";
    if (!ok) {
      os << failures(reports);
    }
    return report(5, ok, os.str());
  }

  bool criterion6() {
    auto const   start = Clock::now();
    auto const   r     = check_zsigmondy({});
    double const t     = since(start);
    bool const   ok    = r.overall() == Verdict::pass && t < 30.0;
    std::ostringstream os;
    os << "existence for 2<=q<=50, 3<=n<=40 except (2,6) and both containments "
          "for q<=9, n,k<=8: "
       << verdict_name(r.overall()) << " (" << secs(t) << ", limit 30.00 s)";
    if (!ok) {
      os << failures({r});
    }
    return report(6, ok, os.str());
  }

  bool criterion7() {
    std::vector<CheckReport> reports;
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      for (unsigned n : {5u, 6u}) {
        for (auto fam : {Family::Sp, Family::Bn}) {
          auto const g = GroupId::make(fam, n, q);
          for (unsigned k : adjacency_branches("adj_s", g)) {
            reports.push_back(check_adjacency("adj_s", g, k));
          }
        }
      }
    }
    for (unsigned q : {2u, 3u}) {
      auto const g = GroupId::make(Family::Dplus, 6, q);
      for (unsigned k : adjacency_branches("adj_o", g)) {
        reports.push_back(check_adjacency("adj_o", g, k));
      }
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](auto const& r) {
      return r.overall() == Verdict::pass;
    });
    std::size_t claims = 0;
    for (auto const& r : reports) {
      claims += r.claims.size();
    }
    std::ostringstream os;
    os << reports.size() << " (group, k) pairs, " << claims
       << " generator-level claims";
    if (!ok) {
      os << failures(reports);
    }
    return report(7, ok, os.str());
  }

  bool criterion8() {
    struct Case {
      unsigned n, q;
    };
    std::vector<CheckReport> reports;
    for (auto [n, q] : {Case{5, 2}, Case{5, 3}, Case{7, 2}, Case{6, 2},
                        Case{6, 3}, Case{8, 2}}) {
      if (n % 2 == 1) {
        reports.push_back(check_coclique_witness("n_odd", n, q));
      } else {
        reports.push_back(check_coclique_witness("n_even", n, q));
        reports.push_back(check_coclique_witness("dplus", n, q));
      }
    }
    std::size_t triples = 0;
    bool        ok      = true;
    for (auto const& r : reports) {
      ok = ok && r.overall() == Verdict::pass;
      for (auto const& c : r.claims) {
        bool const triple = c.statement.find("is a coclique") != std::string::npos;
        triples += triple;
        // a vacuous claim would hide an absent primitive divisor
        ok = ok && c.note.find("vacuous") == std::string::npos;
      }
    }
    std::ostringstream os;
    os << reports.size() << " reports, " << triples
       << " triples pairwise nonadjacent";
    if (!ok) {
      os << failures(reports);
    }
    return report(8, ok, os.str());
  }
}  // namespace

int main() {
  bool ok    = true;
  auto guard = [&ok](unsigned id, auto&& f) {
    try {
      ok = f() && ok;
    } catch (std::exception const& e) {
      ok = report(id, false, std::string("error: ") + e.what()) && ok;
    }
  };
  guard(1, [] {
    return enumeration_matches(1, "Sp4", 3, 51840, 2,
                               spectrum(GroupId::make(Family::Sp, 2, 3)), 60.0);
  });
  guard(2, [] {
    return enumeration_matches(2, "Sp4", 4, 979200, 1,
                               spectrum(GroupId::make(Family::Sp, 2, 4)), 300.0);
  });
  guard(3, [] {
    return enumeration_matches(3, "Sp6", 2, 1451520, 1,
                               spectrum(GroupId::make(Family::Sp, 3, 2)), 600.0);
  });
  guard(4, criterion4);
  guard(5, criterion5);
  guard(6, criterion6);
  guard(7, criterion7);
  guard(8, criterion8);
  std::cout << "criterion 9: NOTE  the classification statements built on these "
               "facts are not computed; acceptance rests on criteria 1-8"
            << std::endl;
  std::cout << (ok ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
  return ok ? 0 : 1;
}
