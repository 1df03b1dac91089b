// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Parameterized checks of arithmetic facts about spectra, prime graphs and
// primitive prime divisors. Each check returns a CheckReport listing its
// claims with verdicts and, for every failed claim, a concrete witness.

#ifndef ISOSPEC_VERIFY_HPP_
#define ISOSPEC_VERIFY_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "oracle.hpp"
#include "primegraph.hpp"
#include "spectra.hpp"
#include "zsigmondy.hpp"

namespace isospec {

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  // conditional: holds under a hypothesis that is evaluated but whose
  // conclusion is not computed here. info: recorded, never affects the
  // overall verdict.
  enum class Verdict { pass, fail, conditional, info };

  inline std::string_view verdict_name(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::conditional:
        return "conditional";
      case Verdict::info:
        return "info";
    }
    throw InternalError("verdict_name: unknown verdict");
  }

  inline Verdict parse_verdict(std::string_view s) {
    for (auto v : {Verdict::pass, Verdict::fail, Verdict::conditional,
                   Verdict::info}) {
      if (verdict_name(v) == s) {
        return v;
      }
    }
    throw UsageError("unknown verdict '" + std::string(s) + "'");
  }

  struct Claim {
    std::string          statement;
    Verdict              verdict = Verdict::pass;
    std::vector<Integer> witness;
    std::string          note;

    bool operator==(Claim const&) const = default;
  };

  struct CheckReport {
    std::string            check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Claim>     claims;
    std::optional<double>  seconds;

    // fail if any claim fails, else conditional if any claim is, else pass
    Verdict overall() const {
      bool conditional = false;
      for (auto const& c : claims) {
        if (c.verdict == Verdict::fail) {
          return Verdict::fail;
        }
        conditional = conditional || c.verdict == Verdict::conditional;
      }
      return conditional ? Verdict::conditional : Verdict::pass;
    }

    bool operator==(CheckReport const& other) const {
      return check == other.check && params == other.params
             && claims == other.claims;
    }
  };

  inline nlohmann::ordered_json to_json(Claim const& c) {
    nlohmann::ordered_json j;
    j["statement"] = c.statement;
    j["verdict"]   = verdict_name(c.verdict);
    auto witness   = nlohmann::ordered_json::array();
    for (auto const& w : c.witness) {
      witness.push_back(w.str());
    }
    j["witness"] = std::move(witness);
    j["note"]    = c.note;
    return j;
  }

  // Timing is omitted unless requested, so that identical inputs serialize
  // identically.
  inline nlohmann::ordered_json to_json(CheckReport const& r,
                                        bool include_timing = false) {
    nlohmann::ordered_json j;
    j["check"]   = r.check;
    j["params"]  = r.params;
    j["verdict"] = verdict_name(r.overall());
    auto claims  = nlohmann::ordered_json::array();
    for (auto const& c : r.claims) {
      claims.push_back(to_json(c));
    }
    j["claims"] = std::move(claims);
    if (include_timing && r.seconds) {
      j["seconds"] = *r.seconds;
    }
    return j;
  }

  inline nlohmann::ordered_json to_json(std::vector<CheckReport> const& reports,
                                        bool include_timing = false) {
    auto j = nlohmann::ordered_json::array();
    for (auto const& r : reports) {
      j.push_back(to_json(r, include_timing));
    }
    return j;
  }

  inline CheckReport report_from_json(nlohmann::ordered_json const& j) {
    try {
      CheckReport r;
      r.check  = j.at("check").get<std::string>();
      r.params = j.at("params");
      for (auto const& c : j.at("claims")) {
        Claim claim;
        claim.statement = c.at("statement").get<std::string>();
        claim.verdict   = parse_verdict(c.at("verdict").get<std::string>());
        for (auto const& w : c.at("witness")) {
          claim.witness.push_back(parse_integer(w.get<std::string>()));
        }
        claim.note = c.at("note").get<std::string>();
        r.claims.push_back(std::move(claim));
      }
      if (j.contains("seconds")) {
        r.seconds = j.at("seconds").get<double>();
      }
      if (parse_verdict(j.at("verdict").get<std::string>()) != r.overall()) {
        throw UsageError("report verdict disagrees with its claims");
      }
      return r;
    } catch (nlohmann::json::exception const& e) {
      throw UsageError(std::string("malformed report: ") + e.what());
    }
  }

  inline std::vector<CheckReport>
  reports_from_json(nlohmann::ordered_json const& j) {
    if (!j.is_array()) {
      throw UsageError("malformed report list: expected an array");
    }
    std::vector<CheckReport> out;
    for (auto const& r : j) {
      out.push_back(report_from_json(r));
    }
    return out;
  }

  // One line per report, one indented line per claim that is not a plain
  // pass, and a closing tally.
  inline std::string summary(std::vector<CheckReport> const& reports) {
    std::ostringstream os;
    std::size_t        tally[3] = {0, 0, 0};
    for (auto const& r : reports) {
      Verdict const v = r.overall();
      ++tally[v == Verdict::pass ? 0 : v == Verdict::conditional ? 1 : 2];
      std::string upper(verdict_name(v));
      std::transform(upper.begin(), upper.end(), upper.begin(),
                     [](unsigned char c) { return std::toupper(c); });
      os << upper << ' ' << r.check;
      for (auto const& [key, value] : r.params.items()) {
        os << ' ' << key << '=' << (value.is_string() ? value.get<std::string>()
                                                       : value.dump());
      }
      os << " (" << r.claims.size() << " claims)\n";
      for (auto const& c : r.claims) {
        if (c.verdict == Verdict::pass) {
          continue;
        }
        os << "  [" << verdict_name(c.verdict) << "] " << c.statement;
        if (!c.witness.empty()) {
          os << " witness:";
          for (auto const& w : c.witness) {
            os << ' ' << w;
          }
        }
        if (!c.note.empty()) {
          os << " (" << c.note << ')';
        }
        os << '\n';
      }
    }
    os << "reports: " << reports.size() << ", pass: " << tally[0]
       << ", conditional: " << tally[1] << ", fail: " << tally[2] << '\n';
    return os.str();
  }

  inline bool all_passed(std::vector<CheckReport> const& reports) {
    return std::none_of(reports.begin(), reports.end(), [](auto const& r) {
      return r.overall() == Verdict::fail;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Claim builders
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string omega_name(SpectrumGens const& s) {
      return (s.part == Part::full ? "omega(" : "omega_p'(") + s.label + ")";
    }

    inline std::string set_text(std::vector<Integer> const& v) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].str();
      }
      return out + "}";
    }

    inline std::string first_generator_divisible(SpectrumGens const& s,
                                                 Integer const&      x) {
      for (auto const& g : s.gens) {
        if (g % x == 0) {
          return g.str();
        }
      }
      return "";
    }

    inline Claim member(std::string const& name,
                        Integer const&     x,
                        SpectrumGens const& s) {
      Claim c;
      c.statement = name + " = " + x.str() + " in " + omega_name(s);
      if (!contains(s, x)) {
        c.verdict = Verdict::fail;
        c.witness = {x};
        c.note    = "divides no generator of " + gens_text(s.gens);
      }
      return c;
    }

    inline Claim non_member(std::string const&  name,
                            Integer const&      x,
                            SpectrumGens const& s) {
      Claim c;
      c.statement = name + " = " + x.str() + " not in " + omega_name(s);
      if (contains(s, x)) {
        c.verdict = Verdict::fail;
        c.witness = {x};
        c.note    = "divides the generator " + first_generator_divisible(s, x);
      }
      return c;
    }

    inline Claim inclusion(SpectrumGens const& a, SpectrumGens const& b) {
      Claim c;
      c.statement = omega_name(a) + " is contained in " + omega_name(b);
      if (auto inc = is_sub_spectrum(a, b); !inc) {
        c.verdict = Verdict::fail;
        c.witness = {*inc.witness};
        c.note    = "generator outside " + omega_name(b);
      }
      return c;
    }

    inline Claim vacuous(std::string const& statement, std::string const& absent) {
      Claim c;
      c.statement = statement;
      c.note      = "vacuous: " + absent + " is absent";
      return c;
    }

    inline std::string rk(unsigned k, Integer const& q) {
      return "R_" + std::to_string(k) + "(" + q.str() + ")";
    }

    // S_{2n}(q) including the non-simple S4(2).
    inline SpectrumGens symplectic(unsigned n, Integer const& q) {
      if (n == 2 && q == 2) {
        SpectrumGens s;
        s.label = "S4(2)";
        s.gens  = formula::even_characteristic(2, 1);
        return s;
      }
      return spectrum(GroupId::make(Family::Sp, n, q));
    }

    // O_{2n+1}(q) including O5(q), q odd; equal to S_{2n}(q) for even q.
    inline SpectrumGens orthogonal_odd(unsigned n, Integer const& q) {
      if (n == 2) {
        auto pm = prime_power(q);
        if (!pm) {
          throw DomainError("q = " + q.str() + " is not a prime power");
        }
        if (pm->first == 2) {
          return symplectic(2, q);
        }
        SpectrumGens s;
        s.label = "O5(" + q.str() + ")";
        s.gens  = formula::odd_characteristic(2, pm->first, pm->second, true);
        return s;
      }
      return spectrum(GroupId::make(Family::Bn, n, q));
    }

    inline std::pair<Integer, unsigned> require_prime_power(Integer const& q) {
      auto pm = prime_power(q);
      if (!pm) {
        throw DomainError("q = " + q.str() + " is not a prime power");
      }
      return {pm->first, pm->second};
    }

    // The adj_p hypothesis on k relative to the rank n.
    inline bool adj_p_hypothesis(unsigned n, unsigned k) {
      return k % 2 == 1 ? k + 2 > n : k / 2 + 2 > n;
    }

    inline std::string adj_p_text(unsigned n, unsigned k) {
      std::string const ks = std::to_string(k);
      std::string const b  = std::to_string(n) + "-2";
      return k % 2 == 1 ? "k = " + ks + " is odd and k > " + b
                        : "k = " + ks + " is even and k/2 = "
                              + std::to_string(k / 2) + " > " + b;
    }

    using Clock = std::chrono::steady_clock;

    inline CheckReport timed(std::function<CheckReport()> const& f) {
      auto const  start = Clock::now();
      CheckReport r     = f();
      r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return r;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Differences and inclusions between spectra
  ////////////////////////////////////////////////////////////////////////

  // item is one of i, ii, iii, iv, v, vi; n is ignored by iii and iv.
  inline CheckReport check_diff(std::string_view item, unsigned n, Integer const& q) {
    using detail::member;
    using detail::non_member;
    static constexpr std::array<std::string_view, 6> items
        = {"i", "ii", "iii", "iv", "v", "vi"};
    if (std::find(items.begin(), items.end(), item) == items.end()) {
      throw UsageError("unknown diff item '" + std::string(item)
                       + "' (expected i, ii, iii, iv, v or vi)");
    }
    auto const [p, m] = detail::require_prime_power(q);
    bool const  odd   = p != 2;
    CheckReport r;
    r.check             = "diff";
    r.params["item"]    = item;
    bool const uses_n   = item != "iii" && item != "iv";
    if (uses_n) {
      r.params["n"] = n;
    }
    r.params["q"] = q.str();

    if (item == "i") {
      if (!odd || n < 3) {
        throw DomainError("diff i requires q odd and n >= 3");
      }
      int const  eps    = ipow(q, n - 1) % 4 == 1 ? 1 : -1;
      unsigned   k      = eps == 1 ? 2 * n - 2 : n - 1;
      unsigned   other  = eps == 1 ? n - 1 : 2 * n - 2;
      auto const s      = detail::symplectic(n, q);
      auto const o      = detail::orthogonal_odd(n, q);
      r.params["eps"]   = eps;
      r.params["k"]     = k;
      auto const primes = primitive_prime_divisors(q, k);
      if (primes.empty()) {
        r.claims.push_back(detail::vacuous(
            "2pr in omega(" + s.label + ") minus omega(" + o.label + ")",
            detail::rk(k, q)));
      }
      for (auto const& rr : primes) {
        Integer const x = 2 * p * rr;
        r.claims.push_back(member("2pr", x, s));
        r.claims.push_back(non_member("2pr", x, o));
      }
      for (auto const& rr : primitive_prime_divisors(q, other)) {
        Integer const x = 2 * p * rr;
        Claim         c;
        c.statement = "other branch r in " + detail::rk(other, q) + ": 2pr = "
                      + x.str();
        c.verdict   = Verdict::info;
        c.note      = std::string(contains(s, x) ? "in " : "not in ")
                 + detail::omega_name(s) + ", "
                 + (contains(o, x) ? "in " : "not in ") + detail::omega_name(o);
        r.claims.push_back(c);
      }
      return r;
    }

    if (item == "ii") {
      if (n < 4) {
        throw DomainError("diff ii requires n >= 4");
      }
      if (n == 4 && q == 2) {
        throw DomainError("diff ii excludes (n,q) = (4,2)");
      }
      auto const o     = detail::orthogonal_odd(n, q);
      auto const minus = GroupId::make(Family::Dminus, n, q);
      std::optional<SpectrumGens> full;
      if (n == 4 && !odd) {
        full = spectrum(GroupId::make(Family::O8minus, 4, q));
      }
      auto const minus_primes = group_order(minus).primes();
      std::vector<unsigned> ks = {2 * n - 2};
      if (n % 2 == 0) {
        ks.push_back(n - 1);
      }
      for (unsigned k : ks) {
        auto const primes = primitive_prime_divisors(q, k);
        if (primes.empty()) {
          r.claims.push_back(detail::vacuous(
              "pr in omega(" + o.label + ") minus omega(" + minus.label() + ")",
              detail::rk(k, q)));
        }
        for (auto const& rr : primes) {
          Integer const x = p * rr;
          r.claims.push_back(member("p*" + rr.str(), x, o));
          if (full) {
            r.claims.push_back(non_member("p*" + rr.str(), x, *full));
            continue;
          }
          Claim c;
          c.statement = "p*" + rr.str() + " = " + x.str() + " not in omega("
                        + minus.label() + ")";
          if (!std::binary_search(minus_primes.begin(), minus_primes.end(), rr)) {
            c.note = rr.str() + " does not divide |" + minus.label() + "|";
          } else if (detail::adj_p_hypothesis(n, k)) {
            c.verdict = Verdict::conditional;
            c.note    = "conditional on adj_p: " + detail::adj_p_text(n, k);
          } else {
            c.verdict = Verdict::fail;
            c.witness = {x};
            c.note    = "adj_p hypothesis fails: not " + detail::adj_p_text(n, k);
          }
          r.claims.push_back(c);
        }
      }
      return r;
    }

    if (item == "iii") {
      if (q <= 3) {
        throw DomainError("diff iii requires q > 3");
      }
      Integer const d = odd ? 2 : 1;
      Integer const a = (ipow(q, 4) - 1) / (d * d);
      r.claims.push_back(member("(q^4-1)/(2,q-1)^2", a,
                                spectrum(GroupId::make(Family::O8plus, 4, q))));
      r.claims.push_back(non_member("(q^4-1)/(2,q-1)^2", a, detail::symplectic(3, q)));
      return r;
    }

    if (item == "iv") {
      if (!odd) {
        throw DomainError("diff iv requires q odd");
      }
      Integer const a = p * (q * q + 1);
      r.claims.push_back(member("p(q^2+1)", a, detail::symplectic(3, q)));
      r.claims.push_back(
          non_member("p(q^2+1)", a, spectrum(GroupId::make(Family::O8plus, 4, q))));
      return r;
    }

    if (item == "v") {
      if (n < 2) {
        throw DomainError("diff v requires n >= 2");
      }
      r.claims.push_back(
          detail::inclusion(detail::orthogonal_odd(n, q), detail::symplectic(n, q)));
      return r;
    }

    // vi
    if (n < 4) {
      throw UnsupportedError(
          "diff vi is checked for n >= 4 only (orthogonal spectra of even "
          "dimension need n >= 4)");
    }
    auto const lower   = GroupId::make(Family::Bn, n - 1, q);
    auto const upper   = GroupId::make(Family::Bn, n, q);
    auto const lower_p = spectrum_p_prime(lower);
    auto const upper_p = spectrum_p_prime(upper);
    for (auto fam : {Family::Dplus, Family::Dminus}) {
      auto const mid = GroupId::make(fam, n, q);
      auto const mid_p = spectrum_p_prime(mid);
      r.claims.push_back(detail::inclusion(lower_p, mid_p));
      r.claims.push_back(detail::inclusion(mid_p, upper_p));
      if (n == 4 && (fam == Family::Dplus || !odd)) {
        auto const mid_full = spectrum(GroupId::make(
            fam == Family::Dplus ? Family::O8plus : Family::O8minus, 4, q));
        r.claims.push_back(detail::inclusion(spectrum(lower), mid_full));
        r.claims.push_back(detail::inclusion(mid_full, spectrum(upper)));
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Adjacency criteria
  ////////////////////////////////////////////////////////////////////////

  // The k covered by adj_s / adj_o for the group g.
  inline std::vector<unsigned> adjacency_branches(std::string_view which,
                                                  GroupId const&   g) {
    if (which == "adj_s") {
      std::vector<unsigned> ks = {2 * g.n, 2 * g.n - 2};
      if (g.n % 2 == 0) {
        ks.push_back(g.n - 1);
      }
      return ks;
    }
    if (which == "adj_o") {
      return {2 * g.n - 2, g.n - 1};
    }
    throw UsageError("adjacency_branches: adj_s or adj_o expected, got '"
                     + std::string(which) + "'");
  }

  inline CheckReport check_adjacency(std::string_view which,
                                     GroupId const&   g,
                                     unsigned         k) {
    Integer const q = g.q();
    CheckReport   r;
    r.check            = std::string(which);
    r.params["group"]  = g.label();
    r.params["k"]      = k;
    auto const primes  = group_order(g).primes();
    std::vector<Integer> rs;
    for (auto const& x : primitive_prime_divisors(q, k)) {
      if (std::binary_search(primes.begin(), primes.end(), x)) {
        rs.push_back(x);
      }
    }

    if (which == "adj_p") {
      bool const d_family = g.family == Family::Dplus || g.family == Family::Dminus
                            || g.family == Family::O8plus
                            || g.family == Family::O8minus;
      if (!d_family || g.n < 4) {
        throw DomainError("adj_p requires an orthogonal group O+-2n(q) with n >= 4");
      }
      if (!detail::adj_p_hypothesis(g.n, k)) {
        throw DomainError("adj_p hypothesis violated: need k odd and k > n-2, or "
                          "k even and k/2 > n-2 (n = "
                          + std::to_string(g.n) + ", k = " + std::to_string(k) + ")");
      }
      std::optional<SpectrumGens> full;
      bool const even = g.p == 2;
      if (g.family == Family::O8plus || g.family == Family::O8minus
          || (g.n == 4 && g.family == Family::Dplus)
          || (g.n == 4 && g.family == Family::Dminus && even)) {
        full = spectrum(GroupId::make(
            g.family == Family::Dplus || g.family == Family::O8plus
                ? Family::O8plus
                : Family::O8minus,
            4, q));
      }
      if (rs.empty()) {
        r.claims.push_back(detail::vacuous("rp not in omega(" + g.label() + ")",
                                           detail::rk(k, q) + " within pi(L)"));
      }
      for (auto const& x : rs) {
        if (full) {
          r.claims.push_back(detail::non_member(x.str() + "p", x * g.p, *full));
          continue;
        }
        Claim c;
        c.statement = x.str() + "p = " + Integer(x * g.p).str() + " not in omega("
                      + g.label() + ")";
        c.verdict   = Verdict::conditional;
        c.note      = "assumed: hypothesis holds (" + detail::adj_p_text(g.n, k)
                 + "); the conclusion is not computed for this group";
        r.claims.push_back(c);
      }
      return r;
    }

    std::vector<std::vector<Integer>> bounds;
    std::string                       bound_text;
    Integer const                     qn1p = ipow(q, g.n - 1) + 1;
    Integer const                     qn1m = ipow(q, g.n - 1) - 1;
    if (which == "adj_s") {
      if ((g.family != Family::Sp && g.family != Family::Bn) || g.n < 5) {
        throw DomainError("adj_s requires S2n(q) or O2n+1(q) with n >= 5");
      }
      Integer const d = g.p == 2 ? 1 : 2;
      if (k == 2 * g.n) {
        bounds     = {{(ipow(q, g.n) + 1) / d}};
        bound_text = "(q^n+1)/(2,q-1)";
      } else if (k == 2 * g.n - 2) {
        bounds     = {{lcm(qn1p, q + 1), lcm(qn1p, q - 1)}};
        bound_text = "[q^(n-1)+1, q+1] or [q^(n-1)+1, q-1]";
      } else if (k == g.n - 1 && g.n % 2 == 0) {
        bounds     = {{lcm(qn1m, q + 1), lcm(qn1m, q - 1)}};
        bound_text = "[q^(n-1)-1, q+1] or [q^(n-1)-1, q-1]";
      } else {
        throw DomainError("adj_s covers k = 2n, 2n-2 and (n even) n-1; got k = "
                          + std::to_string(k));
      }
    } else if (which == "adj_o") {
      if (g.family != Family::Dplus || g.n < 6 || g.n % 2 != 0) {
        throw DomainError("adj_o requires O+2n(q) with n >= 6 even");
      }
      if (k == 2 * g.n - 2) {
        bounds     = {{qn1p}};
        bound_text = "q^(n-1)+1";
      } else if (k == g.n - 1) {
        bounds     = {{qn1m}};
        bound_text = "q^(n-1)-1";
      } else {
        throw DomainError("adj_o covers k = 2n-2 and n-1; got k = "
                          + std::to_string(k));
      }
    } else {
      throw UsageError("unknown adjacency criterion '" + std::string(which)
                       + "' (expected adj_s, adj_o or adj_p)");
    }

    auto const pp = spectrum_p_prime(g);
    r.params["bound"] = bound_text;
    if (rs.empty()) {
      r.claims.push_back(detail::vacuous(
          "generators of " + detail::omega_name(pp) + " divisible by r divide "
              + bound_text,
          detail::rk(k, q)));
    }
    for (auto const& x : rs) {
      Claim c;
      c.statement = "every generator of " + detail::omega_name(pp)
                    + " divisible by " + x.str() + " divides " + bound_text;
      std::vector<Integer> checked;
      for (auto const& b : pp.gens) {
        if (b % x != 0) {
          continue;
        }
        checked.push_back(b);
        bool ok = std::any_of(bounds[0].begin(), bounds[0].end(),
                              [&b](auto const& t) { return t % b == 0; });
        if (!ok && c.verdict != Verdict::fail) {
          c.verdict = Verdict::fail;
          c.witness = {b};
          c.note    = b.str() + " divides none of " + detail::set_text(bounds[0]);
        }
      }
      if (c.verdict == Verdict::pass) {
        c.note = "generators " + detail::set_text(checked) + " divide "
                 + detail::set_text(bounds[0]);
      }
      r.claims.push_back(c);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coclique witnesses
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // r1 and r2 for the even-rank cases, with the (n, q) = (8, 2)
    // substitution R3(2), R5(2).
    inline std::pair<unsigned, unsigned>
    even_rank_levels(unsigned n, Integer const& q, unsigned m) {
      if (n == 8 && q == 2) {
        return {3, 5};
      }
      return {(n - 2) * m, (n + 2) * m};
    }

    inline Claim coclique_claim(PrimeGraph const&           graph,
                                std::vector<Integer> const& triple,
                                std::string const&          names) {
      Claim c;
      c.statement = names + " = " + set_text(triple) + " is a coclique in GK("
                    + graph.label() + ")";
      for (std::size_t a = 0; a < triple.size(); ++a) {
        for (std::size_t b = a + 1; b < triple.size(); ++b) {
          if (triple[a] != triple[b] && graph.adjacent(triple[a], triple[b])) {
            c.verdict = Verdict::fail;
            c.witness = {triple[a] * triple[b]};
            c.note    = triple[a].str() + " and " + triple[b].str()
                     + " are adjacent: their product lies in "
                     + omega_name(graph.source());
            return c;
          }
        }
      }
      return c;
    }

    inline void all_triples(PrimeGraph const&                  graph,
                            std::array<std::vector<Integer>, 3> const& sets,
                            std::array<std::string, 3> const&   labels,
                            std::string const&                  names,
                            std::vector<Claim>&                 out) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (sets[i].empty()) {
          out.push_back(vacuous(names + " is a coclique in GK(" + graph.label() + ")",
                                labels[i]));
          return;
        }
      }
      for (auto const& a : sets[0]) {
        for (auto const& b : sets[1]) {
          for (auto const& c : sets[2]) {
            out.push_back(coclique_claim(graph, {a, b, c}, names));
          }
        }
      }
    }

    inline std::vector<Integer> set_union(std::vector<Integer> a,
                                          std::vector<Integer> const& b) {
      a.insert(a.end(), b.begin(), b.end());
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      return a;
    }
  }  // namespace detail

  // case is n_odd or n_even (L = S2n(q), and O2n+1(q) for odd q) or dplus
  // (L = O+2n(q) over the primes other than p).
  inline CheckReport check_coclique_witness(std::string_view kase,
                                            unsigned         n,
                                            Integer const&   q) {
    auto const [p, m] = detail::require_prime_power(q);
    CheckReport r;
    r.check          = "coclique";
    r.params["case"] = kase;
    r.params["n"]    = n;
    r.params["q"]    = q.str();

    std::vector<GroupId> ls;
    if (kase == "n_odd" || kase == "n_even") {
      bool const n_odd = kase == "n_odd";
      if (n_odd ? (n < 5 || n % 2 == 0) : (n < 6 || n % 2 != 0)) {
        throw DomainError(std::string(kase) + " requires n "
                          + (n_odd ? "odd >= 5" : "even >= 6"));
      }
      ls.push_back(GroupId::make(Family::Sp, n, q));
      if (p != 2) {
        ls.push_back(GroupId::make(Family::Bn, n, q));
      }
    } else if (kase == "dplus") {
      if (n < 6 || n % 2 != 0) {
        throw DomainError("dplus requires n even >= 6");
      }
      ls.push_back(GroupId::make(Family::Dplus, n, q));
    } else {
      throw UsageError("unknown coclique case '" + std::string(kase)
                       + "' (expected n_odd, n_even or dplus)");
    }

    auto const s_set   = primitive_prime_divisors(q, 2 * n - 2);
    auto const s_label = detail::rk(2 * n - 2, q);
    if (kase == "n_odd") {
      auto const mid = primitive_prime_divisors(p, n * m);
      auto const top = primitive_prime_divisors(q, 2 * n);
      for (auto const& g : ls) {
        detail::all_triples(build_graph(g), {s_set, mid, top},
                            {s_label, detail::rk(n * m, p), detail::rk(2 * n, q)},
                            "{s, r, w}", r.claims);
      }
      return r;
    }

    auto const [l1, l2] = detail::even_rank_levels(n, q, m);
    auto const r1       = primitive_prime_divisors(p, l1);
    auto const r2       = primitive_prime_divisors(p, l2);
    auto const mid      = detail::set_union(r1, r2);
    auto const w_set    = primitive_prime_divisors(q, n - 1);
    std::string const mid_label
        = detail::rk(l1, p) + " u " + detail::rk(l2, p);

    // r1 r2 lies in omega(L) but not in omega(S) for each smaller group S
    auto product_claims = [&](SpectrumGens const&              big,
                              std::vector<SpectrumGens> const& smaller) {
      if (r1.empty() || r2.empty()) {
        r.claims.push_back(detail::vacuous("r1*r2 separates the spectra",
                                           r1.empty() ? detail::rk(l1, p)
                                                      : detail::rk(l2, p)));
        return;
      }
      for (auto const& a : r1) {
        for (auto const& b : r2) {
          std::string const name = a.str() + "*" + b.str();
          r.claims.push_back(detail::member(name, a * b, big));
          for (auto const& s : smaller) {
            r.claims.push_back(detail::non_member(name, a * b, s));
          }
        }
      }
    };

    if (kase == "n_even") {
      auto const minus = spectrum_p_prime(GroupId::make(Family::Dminus, n, q));
      for (auto const& g : ls) {
        auto const graph = build_graph(g);
        detail::all_triples(graph, {s_set, mid, w_set},
                            {s_label, mid_label, detail::rk(n - 1, q)},
                            "{s, r, w}", r.claims);
        product_claims(graph.source(), {minus});
      }
      return r;
    }

    // dplus: s in R_{n-1}(q), w in R_{2n-2}(q)
    auto const graph = build_graph_p_prime(ls.front());
    detail::all_triples(graph, {w_set, mid, s_set},
                        {detail::rk(n - 1, q), mid_label, s_label}, "{s, r, w}",
                        r.claims);
    std::vector<SpectrumGens> smaller = {detail::symplectic(n - 1, q)};
    if (p != 2) {
      smaller.push_back(spectrum(GroupId::make(Family::Bn, n - 1, q)));
    }
    product_claims(graph.source(), smaller);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sp8(q) and GO-8(q)
  ////////////////////////////////////////////////////////////////////////

  inline CheckReport check_go8_equality(Integer const& q) {
    auto const [p, m] = detail::require_prime_power(q);
    if (p != 2) {
      throw DomainError("go8 requires q even");
    }
    CheckReport r;
    r.check       = "go8";
    r.params["q"] = q.str();

    auto const l      = spectrum(GroupId::make(Family::Sp, 4, q));
    auto const s      = spectrum(GroupId::make(Family::O8minus, 4, q));
    auto const g      = spectrum(GroupId::make(Family::GO8minus, 4, q));
    auto const extras = formula::go8minus_extras(q);

    // (a)
    for (auto const& x : extras) {
      r.claims.push_back(detail::member("extra order", x, l));
    }
    // (b)
    std::vector<Integer> pool = s.gens;
    pool.insert(pool.end(), extras.begin(), extras.end());
    Claim b;
    b.statement = "every generator of " + detail::omega_name(l)
                  + " divides a generator of " + detail::omega_name(s)
                  + " or one of " + detail::set_text(extras);
    for (auto const& x : l.gens) {
      bool ok = std::any_of(pool.begin(), pool.end(),
                            [&x](auto const& y) { return y % x == 0; });
      if (!ok) {
        b.verdict = Verdict::fail;
        b.witness = {x};
        b.note    = "generator " + x.str() + " is not covered";
        break;
      }
    }
    r.claims.push_back(b);
    // (c)
    Claim c;
    c.statement = detail::omega_name(g) + " equals " + detail::omega_name(l);
    if (auto inc = is_sub_spectrum(g, l); !inc) {
      c.verdict = Verdict::fail;
      c.witness = {*inc.witness};
      c.note    = "generator of " + g.label + " outside " + detail::omega_name(l);
    } else if (auto inc2 = is_sub_spectrum(l, g); !inc2) {
      c.verdict = Verdict::fail;
      c.witness = {*inc2.witness};
      c.note    = "generator of " + l.label + " outside " + detail::omega_name(g);
    }
    r.claims.push_back(c);

    // 8 in omega(GO-6(q)) via the twisted element B gamma
    Claim bg;
    bg.statement = "B gamma has order 8 in SU4(" + q.str() + "):<gamma>";
    if (q * q <= Field::max_order) {
      auto const rep = twisted_order_b_gamma(static_cast<unsigned>(q));
      if (!rep.unitary || rep.order != 8) {
        bg.verdict = Verdict::fail;
        bg.witness = {rep.order};
        bg.note    = rep.unitary ? "order differs from 8" : "B is not unitary";
      } else {
        bg.note = "(B gamma)^4 = I + (t^2 + t^(2q)) E14: "
                  + std::string(rep.fourth_power_matches ? "yes" : "no");
      }
    } else {
      bg.verdict = Verdict::info;
      bg.note = "not computed: GF(q^2) exceeds the field table limit "
                + std::to_string(Field::max_order);
    }
    r.claims.push_back(bg);

    if (q == 2) {
      auto const e = enumerate(make_oracle_group("GO4+", 2));
      r.claims.push_back(detail::member("4", 4, e.spectrum));
      r.claims.back().note = std::to_string(static_cast<unsigned>(e.elements))
                             + " elements enumerated";
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primitive prime divisors
  ////////////////////////////////////////////////////////////////////////

  struct ZsigmondyGrid {
    unsigned q_min = 2, q_max = 50;
    unsigned n_min = 3, n_max = 40;
    // containment grid: q <= containment_q_max, n, k <= containment_nk_max
    unsigned containment_q_max  = 9;
    unsigned containment_nk_max = 8;
  };

  inline CheckReport check_zsigmondy(ZsigmondyGrid const& grid = {}) {
    if (grid.q_min < 2 || grid.n_min < 1 || grid.q_min > grid.q_max
        || grid.n_min > grid.n_max || grid.containment_q_max < 2
        || grid.containment_nk_max < 1) {
      throw UsageError("zsigmondy: empty or invalid grid");
    }
    CheckReport r;
    r.check                        = "zsigmondy";
    r.params["q_min"]              = grid.q_min;
    r.params["q_max"]              = grid.q_max;
    r.params["n_min"]              = grid.n_min;
    r.params["n_max"]              = grid.n_max;
    r.params["containment_q_max"]  = grid.containment_q_max;
    r.params["containment_nk_max"] = grid.containment_nk_max;

    // existence away from (2, 6) and the q + 1 = 2^a cases at n = 2
    Claim exist;
    exist.statement = "R_n(q) is nonempty for " + std::to_string(grid.q_min)
                      + " <= q <= " + std::to_string(grid.q_max) + ", "
                      + std::to_string(grid.n_min) + " <= n <= "
                      + std::to_string(grid.n_max) + " except (q,n) = (2,6)";
    Claim exception;
    exception.statement = "R_6(2) is empty";
    exception.verdict   = Verdict::info;
    exception.note      = "outside the grid";
    std::size_t checked = 0;
    for (unsigned q = grid.q_min; q <= grid.q_max; ++q) {
      for (unsigned n = std::max(grid.n_min, 3u); n <= grid.n_max; ++n) {
        ++checked;
        bool const has = has_primitive_prime_divisor(q, n);
        if (q == 2 && n == 6) {
          exception.verdict = has ? Verdict::fail : Verdict::pass;
          exception.witness = has ? std::vector<Integer>{2, 6} : std::vector<Integer>{};
          exception.note    = has ? "R_6(2) is nonempty" : "";
        } else if (!has && exist.verdict == Verdict::pass) {
          exist.verdict = Verdict::fail;
          exist.witness = {q, n};
        }
      }
    }
    exist.note = std::to_string(checked) + " pairs";
    r.claims.push_back(exist);
    r.claims.push_back(exception);

    Claim c1;
    c1.statement = "R_n(q) is contained in R_n(q^k) when gcd(n,k) = 1, q <= "
                   + std::to_string(grid.containment_q_max) + ", n, k <= "
                   + std::to_string(grid.containment_nk_max);
    Claim c2;
    c2.statement = "R_nk(q) is contained in R_n(q^k), q <= "
                   + std::to_string(grid.containment_q_max) + ", n, k <= "
                   + std::to_string(grid.containment_nk_max);
    for (unsigned q = 2; q <= grid.containment_q_max; ++q) {
      for (unsigned n = 1; n <= grid.containment_nk_max; ++n) {
        for (unsigned k = 1; k <= grid.containment_nk_max; ++k) {
          Integer const qk = ipow(Integer(q), k);
          if (std::gcd(n, k) == 1 && c1.verdict == Verdict::pass) {
            for (auto const& x : primitive_prime_divisors(q, n)) {
              if (!is_primitive_prime_divisor(x, qk, n)) {
                c1.verdict = Verdict::fail;
                c1.witness = {q, n, k, x};
                c1.note    = "witness is (q, n, k, r)";
                break;
              }
            }
          }
          if (c2.verdict == Verdict::pass) {
            for (auto const& x : primitive_prime_divisors(q, n * k)) {
              if (!is_primitive_prime_divisor(x, qk, n)) {
                c2.verdict = Verdict::fail;
                c2.witness = {q, n, k, x};
                c2.note    = "witness is (q, n, k, r)";
                break;
              }
            }
          }
        }
      }
    }
    r.claims.push_back(c1);
    r.claims.push_back(c2);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracle agreement and single membership claims
  ////////////////////////////////////////////////////////////////////////

  // Enumerated spectrum against the closed form: Sp_{2n}(q) modulo its
  // centre against S_{2n}(q), and SU4(2) against S4(3).
  inline CheckReport check_oracle(OracleGroup const&                   g,
                                  std::size_t                          cap = default_cap,
                                  std::optional<std::filesystem::path> cache = {}) {
    SpectrumGens closed;
    if (g.family == OracleFamily::Sp) {
      closed = detail::symplectic(g.dim / 2, g.q);
    } else if (g.family == OracleFamily::SU && g.dim == 4 && g.q == 2) {
      closed = spectrum(GroupId::make(Family::Sp, 2, 3));
    } else {
      throw UnsupportedError("no closed-form spectrum to compare with for "
                             + g.label());
    }
    CheckReport r;
    r.check           = "oracle";
    r.params["group"] = g.label();
    auto const e      = enumerate(g, cap, std::move(cache));
    Claim      c;
    c.statement = "enumerated spectrum of " + g.label() + " modulo its centre equals "
                  + detail::omega_name(closed);
    c.note = "elements " + e.elements.str() + ", centre " + e.centre_size.str()
             + ", enumerated generators " + gens_text(e.spectrum.gens);
    if (auto inc = is_sub_spectrum(e.spectrum, closed); !inc) {
      c.verdict = Verdict::fail;
      c.witness = {*inc.witness};
    } else if (auto inc2 = is_sub_spectrum(closed, e.spectrum); !inc2) {
      c.verdict = Verdict::fail;
      c.witness = {*inc2.witness};
    }
    r.claims.push_back(c);
    return r;
  }

  // A single membership statement, as used for negative controls.
  inline CheckReport check_claim(Integer const&      value,
                                 bool                expect_member,
                                 SpectrumGens const& s) {
    CheckReport r;
    r.check              = "claim";
    r.params["value"]    = value.str();
    r.params["relation"] = expect_member ? "in" : "not_in";
    r.params["spectrum"] = detail::omega_name(s);
    r.claims.push_back(expect_member ? detail::member("x", value, s)
                                     : detail::non_member("x", value, s));
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<unsigned> const& default_q_grid() {
    static std::vector<unsigned> const grid
        = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
    return grid;
  }

  namespace detail {
    using Json = nlohmann::ordered_json;

    // The keys each check accepts and which of them are grid axes.
    struct CheckSpec {
      std::string_view              name;
      std::vector<std::string_view> axes;
      std::vector<std::string_view> required;
    };

    inline std::vector<CheckSpec> const& check_specs() {
      static std::vector<CheckSpec> const specs = {
          {"diff", {"item", "n", "q"}, {"item", "q"}},
          {"adj_s", {"family", "n", "q", "k"}, {"n", "q"}},
          {"adj_o", {"n", "q", "k"}, {"n", "q"}},
          {"adj_p", {"family", "n", "q", "k"}, {"family", "n", "q", "k"}},
          {"coclique", {"case", "n", "q"}, {"case", "n", "q"}},
          {"go8", {"q"}, {"q"}},
          {"zsigmondy", {}, {}},
          {"oracle", {"group", "q"}, {"group", "q"}},
          {"claim", {}, {"value", "relation", "group"}},
      };
      return specs;
    }

    inline std::vector<std::string_view> const& zsigmondy_keys() {
      static std::vector<std::string_view> const keys
          = {"q_min", "q_max", "n_min", "n_max", "containment_q_max",
             "containment_nk_max"};
      return keys;
    }

    inline unsigned get_unsigned(Json const& v, std::string const& where) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0
          || v.get<std::int64_t>() > std::numeric_limits<unsigned>::max()) {
        throw UsageError(where + ": expected a nonnegative integer");
      }
      return v.get<unsigned>();
    }

    inline std::string get_string(Json const& v, std::string const& where) {
      if (!v.is_string()) {
        throw UsageError(where + ": expected a string");
      }
      return v.get<std::string>();
    }

    inline Integer get_integer(Json const& v, std::string const& where) {
      if (v.is_number_integer() && v.get<std::int64_t>() > 0) {
        return Integer(v.get<std::int64_t>());
      }
      if (v.is_string()) {
        try {
          Integer x = parse_integer(v.get<std::string>());
          if (x > 0) {
            return x;
          }
        } catch (UsageError const&) {
        }
      }
      throw UsageError(where + ": expected a positive integer");
    }

    // One grid point of one config entry.
    struct Job {
      std::string                  where;
      std::function<CheckReport()> run;
      bool                         skip_invalid = false;
    };

    inline Job make_job(std::string const& check,
                        Json const&        point,
                        Json const&        entry,
                        std::string const& where) {
      auto at = [&](char const* key) -> Json const& { return point.at(key); };
      auto loc = [&](char const* key) { return where + "." + key; };
      Job job;
      job.where = where;
      if (check == "diff") {
        std::string item = get_string(at("item"), loc("item"));
        unsigned    n    = point.contains("n") ? get_unsigned(at("n"), loc("n")) : 0;
        if (n == 0 && item != "iii" && item != "iv") {
          throw UsageError(where + ": diff " + item + " requires 'n'");
        }
        Integer q = get_integer(at("q"), loc("q"));
        job.run   = [=] { return check_diff(item, n, q); };
      } else if (check == "adj_s" || check == "adj_o" || check == "adj_p") {
        Family fam = check == "adj_o" ? Family::Dplus : Family::Sp;
        if (point.contains("family")) {
          fam = parse_family(get_string(at("family"), loc("family")));
        }
        unsigned n = get_unsigned(at("n"), loc("n"));
        Integer  q = get_integer(at("q"), loc("q"));
        std::optional<unsigned> k;
        if (point.contains("k")) {
          k = get_unsigned(at("k"), loc("k"));
        }
        if (!k && check == "adj_p") {
          throw UsageError(where + ": adj_p requires 'k'");
        }
        if (k) {
          job.run = [=] {
            return check_adjacency(check, GroupId::make(fam, n, q), *k);
          };
        } else {
          // all branches as one report
          job.run = [=] {
            auto const  g = GroupId::make(fam, n, q);
            CheckReport all;
            all.check            = check;
            all.params["group"]  = g.label();
            all.params["k"]      = "all";
            for (unsigned kk : adjacency_branches(check, g)) {
              auto part = check_adjacency(check, g, kk);
              for (auto& c : part.claims) {
                c.statement = "k = " + std::to_string(kk) + ": " + c.statement;
                all.claims.push_back(std::move(c));
              }
            }
            return all;
          };
        }
      } else if (check == "coclique") {
        std::string kase = get_string(at("case"), loc("case"));
        unsigned    n    = get_unsigned(at("n"), loc("n"));
        Integer     q    = get_integer(at("q"), loc("q"));
        job.run          = [=] { return check_coclique_witness(kase, n, q); };
      } else if (check == "go8") {
        Integer q = get_integer(at("q"), loc("q"));
        job.run   = [=] { return check_go8_equality(q); };
      } else if (check == "zsigmondy") {
        ZsigmondyGrid grid;
        unsigned* fields[] = {&grid.q_min, &grid.q_max, &grid.n_min, &grid.n_max,
                              &grid.containment_q_max, &grid.containment_nk_max};
        auto const& keys   = zsigmondy_keys();
        for (std::size_t i = 0; i < keys.size(); ++i) {
          std::string key(keys[i]);
          if (entry.contains(key)) {
            *fields[i] = get_unsigned(entry.at(key), where + "." + key);
          }
        }
        job.run = [=] { return check_zsigmondy(grid); };
      } else if (check == "oracle") {
        std::string name = get_string(at("group"), loc("group"));
        unsigned    q    = get_unsigned(at("q"), loc("q"));
        std::size_t cap  = default_cap;
        if (entry.contains("cap")) {
          cap = get_unsigned(entry.at("cap"), where + ".cap");
        }
        job.run = [=] { return check_oracle(make_oracle_group(name, q), cap); };
      } else if (check == "claim") {
        Integer     value = get_integer(entry.at("value"), where + ".value");
        std::string rel   = get_string(entry.at("relation"), where + ".relation");
        if (rel != "in" && rel != "not_in") {
          throw UsageError(where + ".relation: expected in or not_in");
        }
        Json const& grp = entry.at("group");
        if (!grp.is_object()) {
          throw UsageError(where + ".group: expected an object");
        }
        for (auto const& [key, v] : grp.items()) {
          if (key != "family" && key != "n" && key != "q") {
            throw UsageError(where + ".group: unknown key '" + key + "'");
          }
        }
        if (!grp.contains("family") || !grp.contains("q")) {
          throw UsageError(where + ".group: requires 'family' and 'q'");
        }
        Family   fam = parse_family(get_string(grp.at("family"), where + ".group.family"));
        unsigned n = grp.contains("n") ? get_unsigned(grp.at("n"), where + ".group.n") : 0;
        Integer  q = get_integer(grp.at("q"), where + ".group.q");
        Part     part = Part::full;
        if (entry.contains("part")) {
          part = parse_part(get_string(entry.at("part"), where + ".part"));
        }
        job.run = [=] {
          return check_claim(value, rel == "in",
                             spectrum(GroupId::make(fam, n, q), part));
        };
      }
      return job;
    }

    inline std::vector<Job> expand(Json const& config) {
      std::vector<Job> jobs;
      if (config.is_null()) {
        return jobs;
      }
      if (!config.is_object()) {
        throw UsageError("config: expected an object");
      }
      for (auto const& [key, v] : config.items()) {
        if (key != "checks") {
          throw UsageError("config: unknown key '" + key + "'");
        }
      }
      if (!config.contains("checks")) {
        return jobs;
      }
      Json const& checks = config.at("checks");
      if (!checks.is_array()) {
        throw UsageError("config.checks: expected an array");
      }
      for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string const where = "checks[" + std::to_string(i) + "]";
        Json const&       entry = checks[i];
        if (!entry.is_object() || !entry.contains("check")) {
          throw UsageError(where + ": expected an object with a 'check' key");
        }
        std::string const check = get_string(entry.at("check"), where + ".check");
        auto const&       specs = check_specs();
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](auto const& s) { return s.name == check; });
        if (it == specs.end()) {
          throw UsageError(where + ".check: unknown check '" + check + "'");
        }
        bool skip_invalid = false;
        for (auto const& [key, v] : entry.items()) {
          bool known = key == "check" || key == "skip_invalid"
                       || std::find(it->axes.begin(), it->axes.end(), key)
                              != it->axes.end()
                       || std::find(it->required.begin(), it->required.end(), key)
                              != it->required.end()
                       || (check == "zsigmondy"
                           && std::find(zsigmondy_keys().begin(),
                                        zsigmondy_keys().end(), key)
                                  != zsigmondy_keys().end())
                       || (check == "oracle" && key == "cap")
                       || (check == "claim" && key == "part");
          if (!known) {
            throw UsageError(where + ": unknown key '" + key + "' for check '"
                             + check + "'");
          }
        }
        for (auto key : it->required) {
          if (!entry.contains(std::string(key))) {
            throw UsageError(where + ": missing '" + std::string(key) + "'");
          }
        }
        if (entry.contains("skip_invalid")) {
          if (!entry.at("skip_invalid").is_boolean()) {
            throw UsageError(where + ".skip_invalid: expected a boolean");
          }
          skip_invalid = entry.at("skip_invalid").get<bool>();
        }
        // cartesian product over list-valued axes, in key order
        std::vector<Json> points = {Json::object()};
        for (auto axis : it->axes) {
          std::string const key(axis);
          if (!entry.contains(key)) {
            continue;
          }
          Json values = entry.at(key);
          if (key == "q" && values == "default") {
            values = Json(default_q_grid());
          }
          if (!values.is_array()) {
            values = Json::array({values});
          }
          if (values.empty()) {
            throw UsageError(where + "." + key + ": empty list");
          }
          std::vector<Json> next;
          for (auto const& pt : points) {
            for (auto const& v : values) {
              Json p = pt;
              p[key] = v;
              next.push_back(std::move(p));
            }
          }
          points = std::move(next);
        }
        for (auto const& pt : points) {
          std::string here = where;
          if (points.size() > 1) {
            here += pt.dump();
          }
          Job job          = make_job(check, pt, entry, here);
          job.skip_invalid = skip_invalid;
          jobs.push_back(std::move(job));
        }
      }
      return jobs;
    }

    template <typename E>
    [[noreturn]] void rethrow_located(std::string const& where, E const& e) {
      throw E(where + ": " + e.what());
    }
  }  // namespace detail

  // Runs every check of the config. Entries are expanded into grid points
  // (cartesian product over list-valued axes); points are evaluated on up to
  // `threads` worker threads and reported in config order. Points violating
  // a hypothesis raise DomainError unless the entry sets skip_invalid.
  inline std::vector<CheckReport> run_suite(nlohmann::ordered_json const& config,
                                            unsigned threads = 1) {
    auto jobs = detail::expand(config);
    std::vector<std::optional<CheckReport>> results(jobs.size());
    std::vector<std::exception_ptr>         errors(jobs.size());
    std::atomic<std::size_t>                next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        try {
          results[i] = detail::timed(jobs[i].run);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    threads = std::max(1u, std::min<unsigned>(threads, jobs.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    std::vector<CheckReport> out;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (errors[i]) {
        try {
          std::rethrow_exception(errors[i]);
        } catch (DomainError const& e) {
          if (jobs[i].skip_invalid) {
            continue;
          }
          detail::rethrow_located(jobs[i].where, e);
        } catch (UnsupportedError const& e) {
          if (jobs[i].skip_invalid) {
            continue;
          }
          detail::rethrow_located(jobs[i].where, e);
        } catch (UsageError const& e) {
          detail::rethrow_located(jobs[i].where, e);
        } catch (ResourceError const& e) {
          detail::rethrow_located(jobs[i].where, e);
        }
      }
      out.push_back(std::move(*results[i]));
    }
    return out;
  }

  // The desk-scale grid over every check.
  inline nlohmann::ordered_json default_suite() {
    using Json = nlohmann::ordered_json;
    Json odd_q = Json::array();
    for (unsigned q : default_q_grid()) {
      if (q % 2 == 1) {
        odd_q.push_back(q);
      }
    }
    Json checks = Json::array();
    checks.push_back({{"check", "diff"}, {"item", "i"}, {"n", {3, 4, 5, 6}},
                      {"q", odd_q}});
    checks.push_back({{"check", "diff"}, {"item", "ii"}, {"n", {4, 5, 6}},
                      {"q", "default"}, {"skip_invalid", true}});
    checks.push_back({{"check", "diff"}, {"item", "iii"}, {"q", "default"},
                      {"skip_invalid", true}});
    checks.push_back({{"check", "diff"}, {"item", "iv"}, {"q", odd_q}});
    checks.push_back({{"check", "diff"}, {"item", "v"}, {"n", {2, 3, 4, 5, 6}},
                      {"q", odd_q}});
    checks.push_back({{"check", "diff"}, {"item", "vi"}, {"n", {4, 5, 6}},
                      {"q", "default"}});
    checks.push_back({{"check", "adj_s"}, {"family", {"Sp", "Bn"}},
                      {"n", {5, 6}}, {"q", {2, 3, 4, 5}}});
    checks.push_back({{"check", "adj_o"}, {"n", {6, 8}}, {"q", {2, 3, 4, 5}}});
    checks.push_back({{"check", "adj_p"}, {"family", {"Dplus", "Dminus"}},
                      {"n", {4, 5, 6}}, {"q", {2, 3}}, {"k", {5, 6, 7, 8, 10}},
                      {"skip_invalid", true}});
    checks.push_back({{"check", "coclique"}, {"case", "n_odd"}, {"n", {5, 7}},
                      {"q", {2, 3, 4, 5}}});
    checks.push_back({{"check", "coclique"}, {"case", "n_even"}, {"n", {6, 8}},
                      {"q", {2, 3, 4}}});
    checks.push_back({{"check", "coclique"}, {"case", "dplus"}, {"n", {6, 8}},
                      {"q", {2, 3, 4}}});
    checks.push_back({{"check", "go8"}, {"q", {2, 4, 8, 16, 32, 64}}});
    checks.push_back({{"check", "zsigmondy"}});
    checks.push_back({{"check", "oracle"}, {"group", "Sp4"}, {"q", {2, 3}}});
    checks.push_back({{"check", "oracle"}, {"group", "SU4"}, {"q", 2}});
    return Json{{"checks", std::move(checks)}};
  }

}  // namespace isospec

#endif  // ISOSPEC_VERIFY_HPP_
