// isospec - element-order spectra of finite symplectic and orthogonal groups

#include "catch_amalgamated.hpp"

#include "isospec/verify.hpp"

using isospec::CheckReport;
using isospec::Family;
using isospec::GroupId;
using isospec::Integer;
using isospec::Verdict;
using Json   = nlohmann::ordered_json;
using Primes = std::vector<Integer>;

namespace {
  bool any_statement_contains(CheckReport const& r, std::string const& text) {
    return std::any_of(r.claims.begin(), r.claims.end(), [&](auto const& c) {
      return c.statement.find(text) != std::string::npos;
    });
  }

  std::size_t count(CheckReport const& r, Verdict v) {
    return std::count_if(r.claims.begin(), r.claims.end(),
                         [v](auto const& c) { return c.verdict == v; });
  }

  isospec::SpectrumGens sp(unsigned n, unsigned q) {
    return isospec::spectrum(GroupId::make(Family::Sp, n, q));
  }

  isospec::SpectrumGens bn(unsigned n, unsigned q) {
    return isospec::spectrum(GroupId::make(Family::Bn, n, q));
  }

  // Independent adjacency: some generator is divisible by both primes.
  bool adjacent_by_generators(isospec::SpectrumGens const& s,
                              Integer const&               a,
                              Integer const&               b) {
    return std::any_of(s.gens.begin(), s.gens.end(),
                       [&](auto const& g) { return g % (a * b) == 0; });
  }

  Json claim_entry(std::string const& value,
                   std::string const& relation,
                   std::string const& family,
                   unsigned           n,
                   unsigned           q) {
    return {{"check", "claim"},
            {"value", value},
            {"relation", relation},
            {"group", {{"family", family}, {"n", n}, {"q", q}}}};
  }
}  // namespace

TEST_CASE("diff examples", "[verify]") {
  auto i33 = isospec::check_diff("i", 3, 3);
  CHECK(i33.overall() == Verdict::pass);
  CHECK(i33.params["k"] == 4);
  CHECK(any_statement_contains(i33, "2pr = 30 in omega(S6(3))"));
  CHECK(any_statement_contains(i33, "2pr = 30 not in omega(O7(3))"));

  auto iii4 = isospec::check_diff("iii", 0, 4);
  CHECK(iii4.overall() == Verdict::pass);
  CHECK(any_statement_contains(iii4, "= 255 in omega(O+8(4))"));
  CHECK(any_statement_contains(iii4, "= 255 not in omega(S6(4))"));

  auto iv3 = isospec::check_diff("iv", 0, 3);
  CHECK(iv3.overall() == Verdict::pass);
  CHECK(any_statement_contains(iv3, "= 30 in omega(S6(3))"));
  CHECK(any_statement_contains(iv3, "= 30 not in omega(O+8(3))"));

  CHECK(isospec::check_diff("v", 2, 5).overall() == Verdict::pass);
  CHECK(isospec::check_diff("v", 2, 4).overall() == Verdict::pass);
}

TEST_CASE("diff ii is a full check at n = 4, q even and conditional elsewhere",
          "[verify]") {
  for (unsigned q : {4u, 8u, 16u}) {
    auto r = isospec::check_diff("ii", 4, q);
    INFO(q);
    CHECK(r.overall() == Verdict::pass);
    CHECK(count(r, Verdict::conditional) == 0);
  }
  auto five = isospec::check_diff("ii", 5, 3);
  CHECK(five.overall() == Verdict::conditional);
  for (auto const& c : five.claims) {
    if (c.verdict == Verdict::conditional) {
      CHECK(c.note.find("conditional on adj_p") != std::string::npos);
    }
  }
  // membership halves are genuine checks even when the verdict is conditional
  CHECK(count(five, Verdict::pass) > 0);
  CHECK(count(five, Verdict::fail) == 0);
}

TEST_CASE("diff hypotheses", "[verify]") {
  CHECK_THROWS_AS(isospec::check_diff("i", 3, 4), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_diff("i", 2, 3), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_diff("ii", 4, 2), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_diff("ii", 3, 3), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_diff("iii", 0, 3), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_diff("iv", 0, 4), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_diff("v", 1, 3), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_diff("vi", 3, 3), isospec::UnsupportedError);
  CHECK_THROWS_AS(isospec::check_diff("vii", 3, 3), isospec::UsageError);
  CHECK_THROWS_AS(isospec::check_diff("i", 3, 6), isospec::DomainError);
}

TEST_CASE("diff grid", "[verify][property]") {
  for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
    for (unsigned n = 3; n <= 6; ++n) {
      INFO("q=" << q << " n=" << n);
      REQUIRE(isospec::check_diff("i", n, q).overall() == Verdict::pass);
    }
    for (unsigned n = 2; n <= 6; ++n) {
      INFO("q=" << q << " n=" << n);
      REQUIRE(isospec::check_diff("v", n, q).overall() == Verdict::pass);
    }
    REQUIRE(isospec::check_diff("iv", 0, q).overall() == Verdict::pass);
  }
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u}) {
    INFO(q);
    REQUIRE(isospec::check_diff("iii", 0, q).overall() == Verdict::pass);
  }
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u}) {
    for (unsigned n = 4; n <= 6; ++n) {
      INFO("q=" << q << " n=" << n);
      auto vi = isospec::check_diff("vi", n, q);
      REQUIRE(vi.overall() == Verdict::pass);
      // p'-level claims for both signs, full-spectrum claims at n = 4
      std::size_t expected = 4 + (n == 4 ? (q % 2 == 0 ? 4 : 2) : 0);
      REQUIRE(vi.claims.size() == expected);
      if (n != 4 || q != 2) {
        REQUIRE(isospec::check_diff("ii", n, q).overall() != Verdict::fail);
      }
    }
  }
}

TEST_CASE("swapped diff memberships fail with their witnesses",
          "[verify][negative]") {
  for (unsigned q : {3u, 5u, 7u, 9u}) {
    for (unsigned n = 3; n <= 5; ++n) {
      auto const  r   = isospec::check_diff("i", n, q);
      unsigned    k   = r.params["k"].get<unsigned>();
      auto const  s   = sp(n, q);
      auto const  o   = bn(n, q);
      Integer const p = isospec::prime_power(q)->first;
      for (auto const& x : isospec::primitive_prime_divisors(q, k)) {
        INFO("q=" << q << " n=" << n << " r=" << x);
        auto in_o = isospec::check_claim(2 * p * x, true, o);
        REQUIRE(in_o.overall() == Verdict::fail);
        REQUIRE(in_o.claims[0].witness == Primes{2 * p * x});
        REQUIRE_FALSE(isospec::contains(o, in_o.claims[0].witness[0]));
        auto out_s = isospec::check_claim(2 * p * x, false, s);
        REQUIRE(out_s.overall() == Verdict::fail);
        REQUIRE(isospec::contains(s, out_s.claims[0].witness[0]));
      }
    }
  }
  auto swapped_iii = isospec::check_claim(255, true, sp(3, 4));
  CHECK(swapped_iii.overall() == Verdict::fail);
  CHECK(swapped_iii.claims[0].witness == Primes{255});
  auto swapped_iv
      = isospec::check_claim(30, true, isospec::spectrum(GroupId::make(Family::O8plus, 4, 3)));
  CHECK(swapped_iv.claims[0].witness == Primes{30});
  auto swapped_v = isospec::check_claim(24, true, bn(3, 3));
  CHECK(swapped_v.overall() == Verdict::fail);
}

TEST_CASE("adjacency examples", "[verify]") {
  auto s10 = isospec::check_adjacency("adj_s", GroupId::make(Family::Sp, 5, 2), 10);
  CHECK(s10.overall() == Verdict::pass);
  REQUIRE(s10.claims.size() == 1);
  CHECK(s10.claims[0].statement.find("divisible by 11") != std::string::npos);
  CHECK(s10.claims[0].note == "generators {33} divide {33}");

  auto o12 = isospec::check_adjacency("adj_o", GroupId::make(Family::Dplus, 6, 2), 10);
  CHECK(o12.overall() == Verdict::pass);
  CHECK(o12.claims[0].note.find("divide {33}") != std::string::npos);

  auto p8 = isospec::check_adjacency("adj_p", GroupId::make(Family::Dminus, 4, 3), 6);
  CHECK(p8.overall() == Verdict::conditional);
  REQUIRE(p8.claims.size() == 1);
  CHECK(p8.claims[0].statement == "7p = 21 not in omega(O-8(3))");
  CHECK(p8.claims[0].note.find("assumed") == 0);

  // with a full spectrum available the conclusion is checked
  auto p8e = isospec::check_adjacency("adj_p", GroupId::make(Family::O8minus, 4, 4), 6);
  CHECK(p8e.overall() == Verdict::pass);
}

TEST_CASE("adjacency hypotheses", "[verify]") {
  CHECK_THROWS_AS(isospec::check_adjacency("adj_s", GroupId::make(Family::Sp, 4, 2), 8),
                  isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_adjacency("adj_s", GroupId::make(Family::Sp, 5, 2), 4),
                  isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_adjacency("adj_s", GroupId::make(Family::Sp, 5, 2), 4),
                  isospec::DomainError);
  CHECK_THROWS_AS(
      isospec::check_adjacency("adj_o", GroupId::make(Family::Dplus, 5, 2), 8),
      isospec::DomainError);
  CHECK_THROWS_AS(
      isospec::check_adjacency("adj_p", GroupId::make(Family::Dminus, 4, 3), 2),
      isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_adjacency("adj_p", GroupId::make(Family::Sp, 4, 3), 6),
                  isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_adjacency("adj_x", GroupId::make(Family::Sp, 5, 3), 6),
                  isospec::UsageError);
}

TEST_CASE("adjacency grid", "[verify][property]") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (unsigned n : {5u, 6u}) {
      for (auto fam : {Family::Sp, Family::Bn}) {
        auto g = GroupId::make(fam, n, q);
        for (unsigned k : isospec::adjacency_branches("adj_s", g)) {
          INFO(g.label() << " k=" << k);
          REQUIRE(isospec::check_adjacency("adj_s", g, k).overall() == Verdict::pass);
        }
      }
    }
  }
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (unsigned n : {6u, 8u}) {
      auto g = GroupId::make(Family::Dplus, n, q);
      for (unsigned k : isospec::adjacency_branches("adj_o", g)) {
        INFO(g.label() << " k=" << k);
        REQUIRE(isospec::check_adjacency("adj_o", g, k).overall() == Verdict::pass);
      }
    }
  }
}

TEST_CASE("coclique examples", "[verify]") {
  auto odd = isospec::check_coclique_witness("n_odd", 5, 2);
  CHECK(odd.overall() == Verdict::pass);
  REQUIRE(odd.claims.size() == 1);
  CHECK(odd.claims[0].statement == "{s, r, w} = {17, 31, 11} is a coclique in GK(S10(2))");

  auto even = isospec::check_coclique_witness("n_even", 6, 2);
  CHECK(even.overall() == Verdict::pass);
  CHECK(any_statement_contains(even, "{11, 5, 31}"));
  CHECK(any_statement_contains(even, "{11, 17, 31}"));
  CHECK(any_statement_contains(even, "5*17 = 85 not in omega_p'(O-12(2))"));

  auto sub = isospec::check_coclique_witness("n_even", 8, 2);
  CHECK(sub.overall() == Verdict::pass);
  CHECK(any_statement_contains(sub, "7*31 = 217 in omega(S16(2))"));

  auto dplus = isospec::check_coclique_witness("dplus", 6, 3);
  CHECK(dplus.overall() == Verdict::pass);
  CHECK(any_statement_contains(dplus, "GK(O+12(3))"));

  CHECK_THROWS_AS(isospec::check_coclique_witness("n_odd", 6, 2), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_coclique_witness("n_even", 5, 2), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_coclique_witness("dplus", 4, 2), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_coclique_witness("x", 5, 2), isospec::UsageError);
}

TEST_CASE("coclique triples agree with a direct generator search",
          "[verify][oracle]") {
  struct Case {
    char const* kase;
    unsigned    n, q;
  };
  for (auto [kase, n, q] : {Case{"n_odd", 5, 2}, Case{"n_odd", 5, 3},
                            Case{"n_odd", 7, 2}, Case{"n_even", 6, 2},
                            Case{"n_even", 6, 3}, Case{"n_even", 8, 2}}) {
    INFO(kase << " n=" << n << " q=" << q);
    auto r = isospec::check_coclique_witness(kase, n, q);
    REQUIRE(r.overall() == Verdict::pass);
    std::size_t triples = 0;
    for (auto const& c : r.claims) {
      triples += c.statement.find("is a coclique") != std::string::npos;
    }
    // every choice from each primitive-divisor set is covered, per group
    auto const    pm  = *isospec::prime_power(q);
    Integer const p   = pm.first;
    unsigned      m   = pm.second;
    auto          s   = isospec::primitive_prime_divisors(q, 2 * n - 2);
    Primes        mid;
    Primes        w;
    if (std::string(kase) == "n_odd") {
      mid = isospec::primitive_prime_divisors(p, n * m);
      w   = isospec::primitive_prime_divisors(q, 2 * n);
    } else {
      unsigned l1 = n == 8 && q == 2 ? 3 : (n - 2) * m;
      unsigned l2 = n == 8 && q == 2 ? 5 : (n + 2) * m;
      mid         = isospec::primitive_prime_divisors(p, l1);
      auto more   = isospec::primitive_prime_divisors(p, l2);
      mid.insert(mid.end(), more.begin(), more.end());
      w = isospec::primitive_prime_divisors(q, n - 1);
    }
    std::size_t groups = q % 2 == 0 ? 1 : 2;
    REQUIRE(triples == groups * s.size() * mid.size() * w.size());
    auto L = sp(n, q);
    for (auto const& a : s) {
      for (auto const& b : mid) {
        for (auto const& c : w) {
          REQUIRE_FALSE(adjacent_by_generators(L, a, b));
          REQUIRE_FALSE(adjacent_by_generators(L, a, c));
          REQUIRE_FALSE(adjacent_by_generators(L, b, c));
        }
      }
    }
  }
}

TEST_CASE("go8 examples", "[verify]") {
  for (unsigned q : {2u, 4u, 8u, 16u}) {
    INFO(q);
    auto r = isospec::check_go8_equality(q);
    CHECK(r.overall() == Verdict::pass);
    CHECK(count(r, Verdict::info) == 0);
  }
  auto four = isospec::check_go8_equality(4);
  for (char const* x : {"130", "126", "68", "40", "24"}) {
    CHECK(any_statement_contains(four, std::string("extra order = ") + x + " in"));
  }
  auto two = isospec::check_go8_equality(2);
  CHECK(any_statement_contains(two, "4 = 4 in omega(oracle:GO+4(2))"));
  auto big = isospec::check_go8_equality(64);
  CHECK(big.overall() == Verdict::pass);
  CHECK(count(big, Verdict::info) == 1);
  CHECK_THROWS_AS(isospec::check_go8_equality(9), isospec::DomainError);
  CHECK_THROWS_AS(isospec::check_go8_equality(6), isospec::DomainError);
}

TEST_CASE("zsigmondy check", "[verify]") {
  auto r = isospec::check_zsigmondy({});
  CHECK(r.overall() == Verdict::pass);
  REQUIRE(r.claims.size() == 4);
  CHECK(r.claims[1].verdict == Verdict::pass);  // R_6(2) empty, inside the grid
  CHECK(r.claims[0].note == "1862 pairs");

  isospec::ZsigmondyGrid small;
  small.q_min = 3;
  small.n_max = 10;
  auto s = isospec::check_zsigmondy(small);
  CHECK(s.overall() == Verdict::pass);
  CHECK(s.claims[1].verdict == Verdict::info);

  isospec::ZsigmondyGrid bad;
  bad.q_min = 1;
  CHECK_THROWS_AS(isospec::check_zsigmondy(bad), isospec::UsageError);
}

TEST_CASE("oracle check", "[verify][oracle]") {
  auto r = isospec::check_oracle(isospec::make_oracle_group("Sp4", 3));
  CHECK(r.overall() == Verdict::pass);
  CHECK(r.claims[0].note.find("elements 51840, centre 2") == 0);
  CHECK(isospec::check_oracle(isospec::make_oracle_group("SU4", 2)).overall()
        == Verdict::pass);
  CHECK_THROWS_AS(isospec::check_oracle(isospec::make_oracle_group("GO4+", 2)),
                  isospec::UnsupportedError);
}

TEST_CASE("run_suite basics", "[verify][suite]") {
  CHECK(isospec::run_suite(Json::object()).empty());
  CHECK(isospec::run_suite(Json{{"checks", Json::array()}}).empty());

  Json neg  = {{"checks", {claim_entry("30", "in", "Bn", 3, 3)}}};
  auto reps = isospec::run_suite(neg);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].overall() == Verdict::fail);
  CHECK(reps[0].claims[0].witness == Primes{30});
  CHECK_FALSE(isospec::contains(bn(3, 3), reps[0].claims[0].witness[0]));
  CHECK_FALSE(isospec::all_passed(reps));

  Json grid = {{"checks",
                {{{"check", "diff"}, {"item", "i"}, {"n", {3, 4}}, {"q", {3, 5}}},
                 {{"check", "go8"}, {"q", 4}}}}};
  auto g = isospec::run_suite(grid);
  REQUIRE(g.size() == 5);
  CHECK(g[0].params["n"] == 3);
  CHECK(g[0].params["q"] == "3");
  CHECK(g[1].params["q"] == "5");
  CHECK(g[2].params["n"] == 4);
  CHECK(g[4].check == "go8");
  CHECK(isospec::all_passed(g));
  CHECK(g[0].seconds.has_value());
}

TEST_CASE("run_suite config errors carry their location", "[verify][suite]") {
  auto message = [](Json const& config) {
    try {
      isospec::run_suite(config);
    } catch (isospec::UsageError const& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(Json::array()) == "config: expected an object");
  CHECK(message({{"tests", Json::array()}}) == "config: unknown key 'tests'");
  CHECK(message({{"checks", {{{"check", "nope"}}}}})
        == "checks[0].check: unknown check 'nope'");
  CHECK(message({{"checks", {{{"check", "go8"}, {"q", 2}}, {{"check", "go8"}}}}})
        == "checks[1]: missing 'q'");
  CHECK(message({{"checks", {{{"check", "go8"}, {"q", -2}}}}})
        == "checks[0].q: expected a positive integer");
  CHECK(message({{"checks", {{{"check", "diff"}, {"item", "i"}, {"q", 3}}}}})
        == "checks[0]: diff i requires 'n'");
  CHECK(message({{"checks", {{{"check", "go8"}, {"q", 2}, {"x", 1}}}}})
        == "checks[0]: unknown key 'x' for check 'go8'");
  CHECK(message({{"checks", {{{"check", "go8"}, {"q", Json::array()}}}}})
        == "checks[0].q: empty list");
  CHECK(message({{"checks", {{{"check", "diff"}, {"item", "ix"}, {"n", 3}, {"q", 3}}}}})
            .find("checks[0]: unknown diff item") == 0);

  Json invalid = {{"checks", {{{"check", "go8"}, {"q", {2, 3}}}}}};
  CHECK_THROWS_WITH(isospec::run_suite(invalid),
                    Catch::Matchers::StartsWith("checks[0]{\"q\":3}: go8 requires q even"));
  invalid["checks"][0]["skip_invalid"] = true;
  CHECK(isospec::run_suite(invalid).size() == 1);
}

TEST_CASE("default suite passes, deterministically and in config order",
          "[verify][suite]") {
  auto const config = isospec::default_suite();
  auto const one    = isospec::run_suite(config, 1);
  auto const four   = isospec::run_suite(config, 4);
  REQUIRE(one.size() > 100);
  CHECK(isospec::all_passed(one));
  CHECK(isospec::to_json(one).dump() == isospec::to_json(four).dump());
  auto round = isospec::reports_from_json(Json::parse(isospec::to_json(one).dump()));
  CHECK(round == one);
  CHECK(isospec::to_json(round).dump() == isospec::to_json(one).dump());

  std::set<std::string> checks;
  for (auto const& r : one) {
    checks.insert(r.check);
    for (auto const& c : r.claims) {
      REQUIRE((c.verdict != Verdict::fail || !c.witness.empty()));
    }
  }
  CHECK(checks
        == std::set<std::string>{"adj_o", "adj_p", "adj_s", "coclique", "diff",
                                 "go8", "oracle", "zsigmondy"});
  auto text = isospec::summary(one);
  CHECK(text.find("fail: 0\n") != std::string::npos);
}

TEST_CASE("report serialization", "[verify]") {
  auto r = isospec::check_diff("iv", 0, 3);
  CHECK(isospec::to_json(r).dump()
        == R"j({"check":"diff","params":{"item":"iv","q":"3"},"verdict":"pass",)j"
           R"j("claims":[{"statement":"p(q^2+1) = 30 in omega(S6(3))","verdict":"pass",)j"
           R"j("witness":[],"note":""},{"statement":"p(q^2+1) = 30 not in omega(O+8(3))",)j"
           R"j("verdict":"pass","witness":[],"note":""}]})j");
  auto bad = isospec::to_json(r);
  bad["verdict"] = "fail";
  CHECK_THROWS_AS(isospec::report_from_json(bad), isospec::UsageError);
  CHECK_THROWS_AS(isospec::report_from_json(Json::object()), isospec::UsageError);
  auto neg = isospec::check_claim(30, true, bn(3, 3));
  CHECK(isospec::summary({neg})
        == "FAIL claim value=30 relation=in spectrum=omega(O7(3)) (1 claims)\n"
           "  [fail] x = 30 in omega(O7(3)) witness: 30 (divides no generator of "
           "8 12 13 14 15 18 20)\n"
           "reports: 1, pass: 0, conditional: 0, fail: 1\n");
}
