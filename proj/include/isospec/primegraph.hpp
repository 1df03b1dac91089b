// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Group orders, prime graphs and cocliques. The vertex set of a prime graph
// is the set of prime divisors of the group order; two distinct primes r, s
// are adjacent when r*s lies in the spectrum.

#ifndef ISOSPEC_PRIMEGRAPH_HPP_
#define ISOSPEC_PRIMEGRAPH_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "arith.hpp"
#include "group_id.hpp"
#include "spectra.hpp"

namespace isospec {

  ////////////////////////////////////////////////////////////////////////
  // Orders
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Factorization of q^e * prod_{i=1..k} (q^{2i} - 1), factoring each
    // bracket separately.
    inline Factorization classical_core(Integer const& q,
                                        unsigned       e,
                                        unsigned       k) {
      Factorization f = factorize(q);
      for (auto& [r, mult] : f.factors) {
        mult *= e;
      }
      f.value = ipow(q, e);
      for (unsigned i = 1; i <= k; ++i) {
        f *= factorize(ipow(q, 2 * i) - 1);
      }
      return f;
    }
  }  // namespace detail

  // |S_{2n}(q)| = q^{n^2} prod_{i=1..n} (q^{2i} - 1) / (2, q - 1), without
  // any simplicity restriction, so |S_4(2)| = 720 is available.
  inline Factorization symplectic_order(unsigned n, Integer const& q) {
    if (n < 1 || !prime_power(q)) {
      throw DomainError("symplectic_order: needs n >= 1 and q a prime power");
    }
    Factorization f = detail::classical_core(q, n * n, n);
    f /= factorize(gcd(Integer(2), q - 1));
    return f;
  }

  // |O^eps_{2n}(q)| = q^{n(n-1)} (q^n - eps) prod_{i=1..n-1} (q^{2i} - 1)
  //                   / (4, q^n - eps)
  inline Factorization orthogonal_even_order(unsigned       n,
                                             Integer const& q,
                                             int            eps) {
    if (n < 1 || !prime_power(q) || (eps != 1 && eps != -1)) {
      throw DomainError(
          "orthogonal_even_order: needs n >= 1, q a prime power, eps = +-1");
    }
    Integer const top = ipow(q, n) - eps;
    Factorization f   = detail::classical_core(q, n * (n - 1), n - 1);
    f *= factorize(top);
    f /= factorize(gcd(Integer(4), top));
    return f;
  }

  // Order of the group labelled by g; for GO8minus this is 2 |O^-_8(q)|.
  inline Factorization group_order(GroupId const& g) {
    Integer const q = g.q();
    switch (g.family) {
      case Family::Sp:
      case Family::Bn:
        return symplectic_order(g.n, q);
      case Family::Dplus:
      case Family::O8plus:
        return orthogonal_even_order(g.n, q, 1);
      case Family::Dminus:
      case Family::O8minus:
        return orthogonal_even_order(g.n, q, -1);
      case Family::GO8minus: {
        auto f = orthogonal_even_order(4, q, -1);
        f *= factorize(2);
        return f;
      }
    }
    throw InternalError("group_order: unknown family");
  }

  // Primes that may divide |Out S| for a simple classical group S over
  // GF(p^m): a subset of {2, 3} together with the primes dividing m.
  inline bool may_divide_out(Integer const& r, GroupId const& s) {
    return r == 2 || r == 3 || Integer(s.m) % r == 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prime graphs
  ////////////////////////////////////////////////////////////////////////

  class PrimeGraph {
   public:
    PrimeGraph(SpectrumGens source, std::vector<Integer> vertices)
        : _source(std::move(source)), _vertices(std::move(vertices)) {
      std::sort(_vertices.begin(), _vertices.end());
      _vertices.erase(std::unique(_vertices.begin(), _vertices.end()),
                      _vertices.end());
      std::size_t const k = _vertices.size();
      _adjacent.assign(k, std::vector<char>(k, 0));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          bool adj = contains(_source, _vertices[i] * _vertices[j]);
          _adjacent[i][j] = _adjacent[j][i] = adj;
        }
      }
    }

    std::string const& label() const {
      return _source.label;
    }

    SpectrumGens const& source() const {
      return _source;
    }

    std::vector<Integer> const& vertices() const {
      return _vertices;
    }

    bool is_vertex(Integer const& r) const {
      return std::binary_search(_vertices.begin(), _vertices.end(), r);
    }

    std::size_t index_of(Integer const& r) const {
      auto it = std::lower_bound(_vertices.begin(), _vertices.end(), r);
      if (it == _vertices.end() || *it != r) {
        throw DomainError(r.str() + " is not a vertex of GK(" + label()
                          + ")");
      }
      return static_cast<std::size_t>(it - _vertices.begin());
    }

    bool adjacent(Integer const& r, Integer const& s) const {
      return _adjacent[index_of(r)][index_of(s)];
    }

    bool adjacent_at(std::size_t i, std::size_t j) const {
      return _adjacent[i][j];
    }

    std::vector<std::pair<Integer, Integer>> edges() const {
      std::vector<std::pair<Integer, Integer>> out;
      for (std::size_t i = 0; i < _vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < _vertices.size(); ++j) {
          if (_adjacent[i][j]) {
            out.emplace_back(_vertices[i], _vertices[j]);
          }
        }
      }
      return out;
    }

   private:
    SpectrumGens                   _source;
    std::vector<Integer>           _vertices;
    std::vector<std::vector<char>> _adjacent;
  };

  // GK(L) from the full spectrum, over the primes of |L|.
  inline PrimeGraph build_graph(GroupId const& g) {
    return PrimeGraph(spectrum(g), group_order(g).primes());
  }

  // The subgraph on primes other than p, built from the p-prime spectrum.
  // Available for every D-family rank.
  inline PrimeGraph build_graph_p_prime(GroupId const& g) {
    std::vector<Integer> vertices;
    for (auto const& r : group_order(g).primes()) {
      if (r != g.p) {
        vertices.push_back(r);
      }
    }
    return PrimeGraph(spectrum_p_prime(g), std::move(vertices));
  }

  inline bool is_coclique(PrimeGraph const& graph,
                          std::vector<Integer> const& primes) {
    std::vector<std::size_t> idx;
    for (auto const& r : primes) {
      idx.push_back(graph.index_of(r));
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] != idx[b] && graph.adjacent_at(idx[a], idx[b])) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<Integer> neighbourhood(PrimeGraph const& graph,
                                            Integer const&    r) {
    std::size_t const    i = graph.index_of(r);
    std::vector<Integer> out;
    for (std::size_t j = 0; j < graph.vertices().size(); ++j) {
      if (graph.adjacent_at(i, j)) {
        out.push_back(graph.vertices()[j]);
      }
    }
    return out;
  }

  inline constexpr std::size_t coclique_search_bound = 64;

  // All cocliques of the given size, each ascending, in lexicographic order.
  inline std::vector<std::vector<Integer>> find_cocliques(PrimeGraph const& graph,
                                                          unsigned size) {
    if (size < 1) {
      throw UsageError("find_cocliques: size must be at least 1");
    }
    std::size_t const k = graph.vertices().size();
    if (k > coclique_search_bound) {
      throw UnsupportedError("find_cocliques: " + std::to_string(k)
                             + " vertices exceed the exhaustive bound of "
                             + std::to_string(coclique_search_bound));
    }
    // bit j of non_adjacent[i] is set when j > i and j is not adjacent to i
    std::vector<std::uint64_t> non_adjacent(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!graph.adjacent_at(i, j)) {
          non_adjacent[i] |= std::uint64_t(1) << j;
        }
      }
    }
    std::vector<std::vector<Integer>> out;
    std::vector<Integer>              current;
    auto rec = [&](auto& self, std::uint64_t candidates) -> void {
      if (current.size() == size) {
        out.push_back(current);
        return;
      }
      while (candidates != 0) {
        auto i = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= candidates - 1;
        current.push_back(graph.vertices()[i]);
        self(self, candidates & non_adjacent[i]);
        current.pop_back();
      }
    };
    std::uint64_t all = k == 64 ? ~std::uint64_t(0)
                                : (std::uint64_t(1) << k) - 1;
    rec(rec, all);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  inline nlohmann::ordered_json to_json(PrimeGraph const& graph) {
    nlohmann::ordered_json j;
    j["label"]    = graph.label();
    j["part"]     = part_name(graph.source().part);
    auto vertices = nlohmann::ordered_json::array();
    for (auto const& v : graph.vertices()) {
      vertices.push_back(v.str());
    }
    j["vertices"] = std::move(vertices);
    auto edges    = nlohmann::ordered_json::array();
    for (auto const& [r, s] : graph.edges()) {
      edges.push_back({r.str(), s.str()});
    }
    j["edges"] = std::move(edges);
    return j;
  }

}  // namespace isospec

#endif  // ISOSPEC_PRIMEGRAPH_HPP_
