// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// The command-line front end: spectra, prime graphs, cocliques, checks and
// oracle runs, rendered as plain text or JSON.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 domain error or
// unsupported request, 4 resource cap hit, 5 internal error.

#ifndef ISOSPEC_CLI_HPP_
#define ISOSPEC_CLI_HPP_

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "oracle.hpp"
#include "primegraph.hpp"
#include "spectra.hpp"
#include "verify.hpp"

namespace isospec::cli {

  enum ExitCode : int {
    ok           = 0,
    check_failed = 1,
    usage        = 2,
    domain       = 3,
    resource     = 4,
    internal     = 5
  };

  struct Options {
    std::string family;
    std::string n = "-";
    std::string q;
    std::string part   = "full";
    std::string format = "text";
    std::size_t size   = 3;
    std::uint64_t seed = 1;
    std::size_t   cap  = default_cap;
    std::size_t   count = 2000;
    // verify
    std::string              item, which = "adj_s", kase, suite, grid;
    std::vector<unsigned>    k;
    unsigned                 threads = 1;
    bool                     timing  = false;
    std::string              group;
  };

  namespace detail {
    // Rank-4 families accept "-", "0" or "4" for n.
    inline GroupId group_from(Options const& o) {
      Family const f = parse_family(o.family);
      unsigned     n = 0;
      if (o.n != "-") {
        try {
          std::size_t used = 0;
          n                = static_cast<unsigned>(std::stoul(o.n, &used));
          if (used != o.n.size()) {
            throw std::invalid_argument(o.n);
          }
        } catch (std::logic_error const&) {
          throw UsageError("n must be a nonnegative integer or '-', got '" + o.n
                           + "'");
        }
      } else if (!is_fixed_rank(f)) {
        throw UsageError("n is required for family " + o.family);
      }
      return GroupId::make(f, n, parse_integer(o.q));
    }

    inline std::string braces(std::vector<Integer> const& v) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + v[i].str();
      }
      return out + "}";
    }

    inline void render_spectrum(Options const& o, std::ostream& out) {
      auto const s = spectrum(group_from(o), parse_part(o.part));
      if (o.format == "structured") {
        out << serialize(s) << '\n';
      } else {
        out << gens_text(s.gens) << '\n';
      }
    }

    inline PrimeGraph graph_for(Options const& o) {
      auto const g = group_from(o);
      return parse_part(o.part) == Part::full ? build_graph(g)
                                              : build_graph_p_prime(g);
    }

    inline void render_graph(Options const& o, std::ostream& out) {
      auto const graph = graph_for(o);
      if (o.format == "structured") {
        out << to_json(graph).dump() << '\n';
        return;
      }
      out << "vertices: " << gens_text(graph.vertices()) << '\n' << "edges:";
      for (auto const& [r, s] : graph.edges()) {
        out << ' ' << r << '-' << s;
      }
      out << '\n';
    }

    inline void render_cocliques(Options const& o, std::ostream& out) {
      auto const graph = graph_for(o);
      auto const found = find_cocliques(graph, o.size);
      if (o.format == "structured") {
        auto j = nlohmann::ordered_json::array();
        for (auto const& c : found) {
          auto row = nlohmann::ordered_json::array();
          for (auto const& r : c) {
            row.push_back(r.str());
          }
          j.push_back(std::move(row));
        }
        out << j.dump() << '\n';
        return;
      }
      for (auto const& c : found) {
        out << braces(c) << '\n';
      }
    }

    inline int render_reports(Options const& o,
                              nlohmann::ordered_json const& config,
                              std::ostream& out) {
      auto const reports = run_suite(config, o.threads);
      if (o.format == "structured") {
        out << to_json(reports, o.timing).dump(2) << '\n';
      } else {
        out << summary(reports);
      }
      return all_passed(reports) ? ok : check_failed;
    }

    inline nlohmann::ordered_json read_grid(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot read grid file '" + path + "'");
      }
      try {
        return nlohmann::ordered_json::parse(in);
      } catch (nlohmann::json::parse_error const& e) {
        throw UsageError("grid file '" + path + "': " + e.what());
      }
    }

    inline void render_enumeration(Options const& o, std::ostream& out) {
      auto const e = enumerate(make_oracle_group(o.group, static_cast<unsigned>(
                                                              parse_integer(o.q))),
                               o.cap, cache_dir_from_env());
      if (o.format == "structured") {
        out << to_json(e).dump() << '\n';
        return;
      }
      out << "order=" << e.elements << " spectrum=" << gens_text(e.spectrum.gens)
          << '\n';
    }

    inline void render_sample(Options const& o, std::ostream& out) {
      unsigned const dim = static_cast<unsigned>(parse_integer(o.n));
      unsigned const q   = static_cast<unsigned>(parse_integer(o.q));
      auto [space, gens] = symplectic_sampling_generators(dim, q);
      auto const orders  = sample_orders(space, gens, o.count, o.seed,
                                         plus_minus_identity(space));
      std::vector<Integer> values(orders.begin(), orders.end());
      if (o.format == "structured") {
        nlohmann::ordered_json j;
        j["group"] = "Sp" + std::to_string(dim) + "(" + std::to_string(q) + ")";
        j["count"] = o.count;
        j["seed"]  = o.seed;
        auto arr   = nlohmann::ordered_json::array();
        for (auto const& v : values) {
          arr.push_back(v.str());
        }
        j["orders"] = std::move(arr);
        out << j.dump() << '\n';
        return;
      }
      out << "orders=" << gens_text(values) << '\n';
    }

    inline void render_bgamma(Options const& o, std::ostream& out) {
      auto const r   = twisted_order_b_gamma(
          static_cast<unsigned>(parse_integer(o.q)));
      auto       yes = [](bool b) { return b ? "yes" : "no"; };
      if (o.format == "structured") {
        nlohmann::ordered_json j;
        j["q"]                       = r.q;
        j["t"]                       = r.t;
        j["order"]                   = r.order;
        j["unitary"]                 = r.unitary;
        j["square_is_b_bbar"]        = r.square_is_b_bbar;
        j["fourth_power_matches"]    = r.fourth_power_matches;
        j["fourth_power_involution"] = r.fourth_power_involution;
        j["literal_unitary"]         = r.literal_unitary;
        j["literal_order"]           = r.literal_order;
        out << j.dump() << '\n';
        return;
      }
      out << "order=" << r.order << " unitary=" << yes(r.unitary)
          << " fourth_power_matches=" << yes(r.fourth_power_matches)
          << " literal_unitary=" << yes(r.literal_unitary)
          << " literal_order=" << r.literal_order << '\n';
    }
  }  // namespace detail

  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    using Json = nlohmann::ordered_json;
    Options  o;
    CLI::App app{"isospec: element-order spectra of finite symplectic and "
                 "orthogonal groups"};
    app.require_subcommand(1);
    auto format = [&o](CLI::App* sub) {
      sub->add_option("--format", o.format, "Output format")
          ->check(CLI::IsMember({"text", "structured"}));
    };
    auto group_args = [&o](CLI::App* sub) {
      sub->add_option("family", o.family,
                      "Sp, Bn, Dplus, Dminus, O8plus, O8minus or GO8minus")
          ->required();
      sub->add_option("n", o.n, "Rank n ('-' for the rank-4 families)")->required();
      sub->add_option("q", o.q, "Field order")->required();
      sub->add_option("--part", o.part, "full or p-prime")
          ->check(CLI::IsMember({"full", "p-prime"}));
    };

    auto* spec = app.add_subcommand("spectrum", "Generators of the spectrum");
    group_args(spec);
    format(spec);

    auto* graph = app.add_subcommand("graph", "Prime graph");
    group_args(graph);
    format(graph);

    auto* cocl = app.add_subcommand("coclique", "Cocliques of the prime graph");
    group_args(cocl);
    format(cocl);
    cocl->add_option("--size", o.size, "Coclique size")->required();

    auto* verify = app.add_subcommand("verify", "Run checks");
    verify->require_subcommand(0, 1);
    verify->add_option("--suite", o.suite, "Named suite")
        ->check(CLI::IsMember({"default"}));
    verify->add_option("--grid", o.grid, "JSON config file");
    verify->add_option("--threads", o.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--timing", o.timing, "Include timings in structured output");
    format(verify);
    auto* v_diff = verify->add_subcommand("diff", "Spectrum differences");
    v_diff->add_option("--item", o.item, "i, ii, iii, iv, v or vi")->required();
    v_diff->add_option("--n", o.n, "Rank");
    v_diff->add_option("--q", o.q, "Field order")->required();
    auto* v_adj = verify->add_subcommand("adj", "Adjacency criteria");
    v_adj->add_option("--which", o.which, "adj_s, adj_o or adj_p")
        ->check(CLI::IsMember({"adj_s", "adj_o", "adj_p"}));
    v_adj->add_option("--family", o.family, "Group family");
    v_adj->add_option("--n", o.n, "Rank")->required();
    v_adj->add_option("--q", o.q, "Field order")->required();
    v_adj->add_option("--k", o.k, "Primitive-divisor level(s); all branches if omitted");
    auto* v_cocl = verify->add_subcommand("coclique", "Coclique witnesses");
    v_cocl->add_option("--case", o.kase, "n_odd, n_even or dplus")->required();
    v_cocl->add_option("--n", o.n, "Rank")->required();
    v_cocl->add_option("--q", o.q, "Field order")->required();
    auto* v_go8 = verify->add_subcommand("go8", "Sp8(q) against GO-8(q)");
    v_go8->add_option("--q", o.q, "Field order")->required();
    auto* v_zsig = verify->add_subcommand("zsigmondy", "Primitive prime divisors");
    for (auto* sub : {v_diff, v_adj, v_cocl, v_go8, v_zsig}) {
      format(sub);
    }

    auto* oracle = app.add_subcommand("oracle", "Matrix-group computations");
    oracle->require_subcommand(1);
    auto* o_enum = oracle->add_subcommand("enumerate", "Enumerate a group");
    o_enum->add_option("group", o.group, "Sp4, Sp6, SU4 or GO4+")->required();
    o_enum->add_option("q", o.q, "Field order")->required();
    o_enum->add_option("--cap", o.cap, "Element cap")->check(CLI::PositiveNumber);
    format(o_enum);
    auto* o_sample = oracle->add_subcommand("sample", "Sample element orders of Sp_dim(q)");
    o_sample->add_option("dim", o.n, "Even dimension")->required();
    o_sample->add_option("q", o.q, "Field order")->required();
    o_sample->add_option("--count", o.count, "Samples")->check(CLI::PositiveNumber);
    o_sample->add_option("--seed", o.seed, "Random seed");
    format(o_sample);
    auto* o_bg = oracle->add_subcommand("bgamma", "Order of the twisted element B gamma");
    o_bg->add_option("q", o.q, "Even field order")->required();
    format(o_bg);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : usage;
    }

    try {
      if (spec->parsed()) {
        detail::render_spectrum(o, out);
      } else if (graph->parsed()) {
        detail::render_graph(o, out);
      } else if (cocl->parsed()) {
        detail::render_cocliques(o, out);
      } else if (verify->parsed()) {
        Json entry;
        if (v_diff->parsed()) {
          entry = {{"check", "diff"}, {"item", o.item}, {"q", o.q}};
          if (o.n != "-") {
            entry["n"] = std::stoul(o.n);
          }
        } else if (v_adj->parsed()) {
          entry = {{"check", o.which}, {"n", std::stoul(o.n)}, {"q", o.q}};
          if (!o.family.empty()) {
            entry["family"] = o.family;
          }
          if (!o.k.empty()) {
            entry["k"] = o.k;
          }
        } else if (v_cocl->parsed()) {
          entry = {{"check", "coclique"}, {"case", o.kase}, {"n", std::stoul(o.n)},
                   {"q", o.q}};
        } else if (v_go8->parsed()) {
          entry = {{"check", "go8"}, {"q", o.q}};
        } else if (v_zsig->parsed()) {
          entry = {{"check", "zsigmondy"}};
        }
        Json config;
        int  sources = !entry.is_null() + !o.suite.empty() + !o.grid.empty();
        if (sources != 1) {
          throw UsageError("verify needs exactly one of a check subcommand, "
                           "--suite or --grid");
        }
        if (!entry.is_null()) {
          config = {{"checks", Json::array({entry})}};
        } else if (!o.suite.empty()) {
          config = default_suite();
        } else {
          config = detail::read_grid(o.grid);
        }
        return detail::render_reports(o, config, out);
      } else if (o_enum->parsed()) {
        detail::render_enumeration(o, out);
      } else if (o_sample->parsed()) {
        detail::render_sample(o, out);
      } else if (o_bg->parsed()) {
        detail::render_bgamma(o, out);
      }
      return ok;
    } catch (UsageError const& e) {
      err << "usage error: " << e.what() << '\n';
      return usage;
    } catch (DomainError const& e) {
      err << "domain error: " << e.what() << '\n';
      return domain;
    } catch (UnsupportedError const& e) {
      err << "unsupported: " << e.what() << '\n';
      return domain;
    } catch (ResourceError const& e) {
      err << "resource limit: " << e.what() << '\n';
      return resource;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return internal;
    } catch (std::logic_error const& e) {
      // numeric conversion of an argument
      err << "usage error: invalid argument (" << e.what() << ")\n";
      return usage;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return internal;
    }
  }

}  // namespace isospec::cli

#endif  // ISOSPEC_CLI_HPP_
