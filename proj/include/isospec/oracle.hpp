// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Brute-force ground truth: matrix generators for a few small classical
// groups, breadth-first closure, element orders modulo a computed centre,
// random sampling for groups too large to enumerate, and the order of the
// twisted element B gamma in SU_4(q):2.

#ifndef ISOSPEC_ORACLE_HPP_
#define ISOSPEC_ORACLE_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "arith.hpp"
#include "matrix.hpp"
#include "primegraph.hpp"
#include "spectra.hpp"

namespace isospec {

  ////////////////////////////////////////////////////////////////////////
  // Supported groups
  ////////////////////////////////////////////////////////////////////////

  // Sp:     Sp_dim(q)
  // SU:     SU_4(q), realized over GF(q^2), q even
  // GOplus: GO^+_4(2)
  enum class OracleFamily { Sp, SU, GOplus };

  struct OracleGroup {
    OracleFamily family = OracleFamily::Sp;
    unsigned     dim    = 4;
    unsigned     q      = 2;

    // e.g. Sp4(3), SU4(8), GO+4(2)
    std::string label() const {
      std::string const d = std::to_string(dim);
      std::string const f = family == OracleFamily::Sp   ? "Sp" + d
                            : family == OracleFamily::SU ? "SU" + d
                                                         : "GO+" + d;
      return f + "(" + std::to_string(q) + ")";
    }

    bool operator==(OracleGroup const&) const = default;
  };

  inline std::vector<OracleGroup> const& supported_oracle_groups() {
    static std::vector<OracleGroup> const groups = {
        {OracleFamily::Sp, 4, 2},
        {OracleFamily::Sp, 4, 3},
        {OracleFamily::Sp, 4, 4},
        {OracleFamily::Sp, 6, 2},
        {OracleFamily::SU, 4, 2},
        {OracleFamily::SU, 4, 4},
        {OracleFamily::SU, 4, 8},
        {OracleFamily::SU, 4, 16},
        {OracleFamily::SU, 4, 32},
        {OracleFamily::GOplus, 4, 2}};
    return groups;
  }

  // Parses "Sp4", "Sp6", "SU4" or "GO4+" together with q.
  inline OracleGroup make_oracle_group(std::string const& name, unsigned q) {
    OracleGroup g;
    if (name == "Sp4" || name == "Sp6") {
      g = {OracleFamily::Sp, name == "Sp4" ? 4u : 6u, q};
    } else if (name == "SU4") {
      g = {OracleFamily::SU, 4, q};
    } else if (name == "GO4+") {
      g = {OracleFamily::GOplus, 4, q};
    } else {
      throw UsageError("unknown oracle group '" + name
                       + "' (expected Sp4, Sp6, SU4 or GO4+)");
    }
    auto const& supported = supported_oracle_groups();
    if (std::find(supported.begin(), supported.end(), g) == supported.end()) {
      throw UnsupportedError(g.label() + " is not in the supported oracle set");
    }
    return g;
  }

  // Order of the matrix group generated by standard_generators(g).
  inline Integer oracle_group_order(OracleGroup const& g) {
    Integer const q = g.q;
    switch (g.family) {
      case OracleFamily::Sp:
        return symplectic_order(g.dim / 2, q).value * gcd(Integer(2), q - 1);
      case OracleFamily::SU:
        return ipow(q, 6) * (q * q - 1) * (ipow(q, 3) + 1) * (ipow(q, 4) - 1);
      case OracleFamily::GOplus:
        return 72;
    }
    throw InternalError("oracle_group_order: unknown family");
  }

  struct GeneratorSet {
    OracleGroup           group;
    MatrixSpace           space;
    std::vector<MatrixGF> gens;
  };

  namespace detail {
    // Symplectic form [[0, I], [-I, 0]] on e_1..e_n, f_1..f_n.
    inline MatrixGF symplectic_form(MatrixSpace const& s) {
      unsigned const n = s.dim() / 2;
      MatrixGF       j = s.zero();
      for (unsigned i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = s.field().neg(1);
      }
      return j;
    }

    // Root elements for the simple roots and their negatives, with the
    // parameter running over a basis of GF(q) over the prime field.
    inline std::vector<MatrixGF> symplectic_generators(MatrixSpace const& s) {
      unsigned const        n = s.dim() / 2;
      Field const&          f = s.field();
      std::vector<MatrixGF> out;
      for (FieldElement t : f.basis()) {
        for (unsigned i = 0; i + 1 < n; ++i) {
          MatrixGF x         = s.identity();
          x(i, i + 1)         = t;
          x(n + i + 1, n + i) = f.neg(t);
          out.push_back(x);
          out.push_back(s.transpose(x));
        }
        MatrixGF x          = s.identity();
        x(n - 1, 2 * n - 1) = t;
        out.push_back(x);
        out.push_back(s.transpose(x));
      }
      return out;
    }

    // Antidiagonal J; H = {A : A J conj(A)^T = J}.
    inline MatrixGF antidiagonal(MatrixSpace const& s) {
      MatrixGF j = s.zero();
      for (unsigned i = 0; i < s.dim(); ++i) {
        j(i, s.dim() - 1 - i) = 1;
      }
      return j;
    }

    // SU_4(q) over GF(q^2) for even q: x1(a) = I + a E12 + conj(a) E34 and
    // x2(c) = I + c E23 with c in GF(q), plus transposes.
    inline std::vector<MatrixGF> unitary_generators(MatrixSpace const& s,
                                                    unsigned           q) {
      Field const&          f = s.field();
      std::vector<MatrixGF> out;
      for (FieldElement a : f.basis()) {
        MatrixGF x = s.identity();
        x(0, 1)    = a;
        x(2, 3)    = f.neg(f.pow(a, q));
        out.push_back(x);
        out.push_back(s.transpose(x));
      }
      // basis of GF(q) over GF(2): powers of a generator of the subfield
      FieldElement const g = f.pow(f.generator(), q + 1);
      FieldElement       c = 1;
      for (unsigned k = 0; k < f.degree() / 2; ++k, c = f.mul(c, g)) {
        MatrixGF x = s.identity();
        x(1, 2)    = c;
        out.push_back(x);
        out.push_back(s.transpose(x));
      }
      return out;
    }

    // GO^+_4(2) acting on 2x2 matrices X = (x11, x12, x21, x22):
    // X -> AX, X -> XB^T for generators A, B of SL_2(2), and X -> X^T. The
    // invariant quadratic form is the determinant.
    inline std::vector<MatrixGF> go4plus_generators(MatrixSpace const& s) {
      using M2 = std::array<unsigned, 4>;  // row-major 2x2 over GF(2)
      auto mul2 = [](M2 const& a, M2 const& b) {
        return M2{(a[0] * b[0] + a[1] * b[2]) % 2, (a[0] * b[1] + a[1] * b[3]) % 2,
                  (a[2] * b[0] + a[3] * b[2]) % 2, (a[2] * b[1] + a[3] * b[3]) % 2};
      };
      auto tr = [](M2 const& a) { return M2{a[0], a[2], a[1], a[3]}; };
      auto as_matrix = [&](auto const& map) {
        MatrixGF m = s.zero();
        for (unsigned j = 0; j < 4; ++j) {
          M2 e{};
          e[j]     = 1;
          M2 image = map(e);
          for (unsigned i = 0; i < 4; ++i) {
            m(i, j) = static_cast<FieldElement>(image[i]);
          }
        }
        return m;
      };
      M2 const u{1, 1, 0, 1};  // SL_2(2) = <u, u^T>
      M2 const l{1, 0, 1, 1};
      std::vector<MatrixGF> out;
      for (M2 const& a : {u, l}) {
        out.push_back(as_matrix([&](M2 const& x) { return mul2(a, x); }));
        out.push_back(as_matrix([&](M2 const& x) { return mul2(x, tr(a)); }));
      }
      out.push_back(as_matrix(tr));
      return out;
    }
  }  // namespace detail

  inline GeneratorSet standard_generators(OracleGroup const& g) {
    auto const& supported = supported_oracle_groups();
    if (std::find(supported.begin(), supported.end(), g) == supported.end()) {
      throw UnsupportedError(g.label() + " is not in the supported oracle set");
    }
    switch (g.family) {
      case OracleFamily::Sp: {
        MatrixSpace s(g.q, g.dim);
        auto        gens = detail::symplectic_generators(s);
        return {g, std::move(s), std::move(gens)};
      }
      case OracleFamily::SU: {
        MatrixSpace s(g.q * g.q, 4);
        auto        gens = detail::unitary_generators(s, g.q);
        return {g, std::move(s), std::move(gens)};
      }
      case OracleFamily::GOplus: {
        MatrixSpace s(2, 4);
        auto        gens = detail::go4plus_generators(s);
        return {g, std::move(s), std::move(gens)};
      }
    }
    throw InternalError("standard_generators: unknown family");
  }

  // Root-element generators of Sp_dim(q) for any even dim <= 8, without the
  // enumeration restriction; used for sampling larger groups.
  inline std::pair<MatrixSpace, std::vector<MatrixGF>> symplectic_sampling_generators(
      unsigned dim,
      unsigned q) {
    if (dim < 2 || dim % 2 != 0) {
      throw DomainError("Sp_dim needs an even dimension >= 2");
    }
    MatrixSpace s(q, dim);
    auto        gens = detail::symplectic_generators(s);
    return {std::move(s), std::move(gens)};
  }

  // The scalar matrices lambda I with lambda^2 = 1, that is the centre
  // {I, -I} of Sp_dim(q).
  inline std::vector<MatrixGF> plus_minus_identity(MatrixSpace const& s) {
    std::vector<MatrixGF> out{s.identity()};
    if (s.field().characteristic() != 2) {
      out.push_back(s.scalar(s.field().neg(1)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_cap = 2'000'000;

  // Elements of a finite matrix group as canonical keys, in discovery order.
  class ElementSet {
   public:
    ElementSet() = default;

    std::size_t size() const {
      return _keys.size();
    }

    std::vector<std::uint64_t> const& keys() const {
      return _keys;
    }

    bool contains(std::uint64_t key) const {
      return _index.contains(key);
    }

    std::size_t index_of(std::uint64_t key) const {
      return _index.at(key);
    }

    bool insert(std::uint64_t key) {
      auto [it, fresh] = _index.emplace(key, _keys.size());
      if (fresh) {
        _keys.push_back(key);
      }
      return fresh;
    }

    void reserve(std::size_t n) {
      _keys.reserve(n);
      _index.reserve(n);
    }

   private:
    std::vector<std::uint64_t>                      _keys;
    std::unordered_map<std::uint64_t, std::uint32_t> _index;
  };

  // The group generated by gens, by breadth-first right multiplication by
  // generators starting from the identity.
  inline ElementSet close_group(MatrixSpace const&           space,
                                std::vector<MatrixGF> const& gens,
                                std::size_t                  cap = default_cap) {
    if (cap < 1) {
      throw UsageError("close_group: cap must be positive");
    }
    for (auto const& g : gens) {
      if (g.dim != space.dim()) {
        throw UsageError("close_group: generator of the wrong dimension");
      }
      if (!space.invertible(g)) {
        throw DomainError("close_group: generator is not invertible");
      }
    }
    ElementSet set;
    set.insert(space.encode(space.identity()));
    for (std::size_t next = 0; next < set.size(); ++next) {
      MatrixGF const x = space.decode(set.keys()[next]);
      for (auto const& g : gens) {
        if (set.insert(space.encode(space.mul(x, g))) && set.size() > cap) {
          throw ResourceError("closure exceeded the cap of "
                              + std::to_string(cap) + " elements");
        }
      }
    }
    return set;
  }

  // Elements of the closure commuting with every generator.
  inline std::vector<MatrixGF> centre(MatrixSpace const&           space,
                                      ElementSet const&            set,
                                      std::vector<MatrixGF> const& gens) {
    std::vector<MatrixGF> out;
    for (auto key : set.keys()) {
      MatrixGF const x       = space.decode(key);
      bool           central = true;
      for (auto const& g : gens) {
        if (!(space.mul(x, g) == space.mul(g, x))) {
          central = false;
          break;
        }
      }
      if (central) {
        out.push_back(x);
      }
    }
    return out;
  }

  namespace detail {
    inline void require_central(MatrixSpace const&           space,
                                std::vector<MatrixGF> const& centre,
                                std::vector<MatrixGF> const& gens) {
      for (auto const& z : centre) {
        for (auto const& g : gens) {
          if (!(space.mul(z, g) == space.mul(g, z))) {
            throw DomainError("given centre element is not central");
          }
        }
      }
    }

    // Full order of x and the least k with x^k in the centre (the identity
    // alone when centre is empty). Calls visit(k, x^k) for k = 1..order.
    template <typename Visit>
    std::pair<std::uint64_t, std::uint64_t> orders_mod(
        MatrixSpace const&           space,
        MatrixGF const&              x,
        std::vector<MatrixGF> const& centre,
        Visit&&                      visit) {
      MatrixGF const id    = space.identity();
      MatrixGF       y     = x;
      std::uint64_t  coset = 0;
      y.twist              = false;
      for (std::uint64_t k = 1; k <= (std::uint64_t(1) << 24); ++k) {
        visit(k, y);
        if (coset == 0
            && (centre.empty()
                    ? y == id
                    : std::find(centre.begin(), centre.end(), y) != centre.end())) {
          coset = k;
        }
        if (y == id) {
          return {k, coset};
        }
        y = space.mul(y, x);
      }
      throw InternalError("element order exceeds 2^24");
    }
  }  // namespace detail

  // Orders of the elements of set modulo the central subgroup centre (empty
  // for the trivial quotient), reduced to divisor-maximal generators.
  inline SpectrumGens element_orders(MatrixSpace const&           space,
                                     ElementSet const&            set,
                                     std::vector<MatrixGF> const& gens,
                                     std::vector<MatrixGF> const& centre = {}) {
    detail::require_central(space, centre, gens);
    std::vector<char>             done(set.size(), 0);
    std::set<Integer>             orders;
    std::vector<std::uint64_t>    powers;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (done[i]) {
        continue;
      }
      powers.clear();
      auto [full, coset] = detail::orders_mod(
          space, space.decode(set.keys()[i]), centre,
          [&](std::uint64_t, MatrixGF const& y) {
            powers.push_back(space.encode(y));
          });
      orders.insert(Integer(coset));
      // x^k has the same full and coset orders whenever gcd(k, full) = 1
      for (std::uint64_t k = 1; k <= full; ++k) {
        if (std::gcd(k, full) == 1 && set.contains(powers[k - 1])) {
          done[set.index_of(powers[k - 1])] = 1;
        }
      }
    }
    SpectrumGens s;
    s.gens = reduce(std::vector<Integer>(orders.begin(), orders.end()));
    return s;
  }

  // Orders (modulo centre) of count pseudo-random elements produced by the
  // product replacement algorithm seeded with seed.
  inline std::set<std::uint64_t> sample_orders(
      MatrixSpace const&                space,
      std::vector<MatrixGF> const&      gens,
      std::size_t                       count,
      std::uint64_t                     seed,
      std::vector<MatrixGF> const&      centre = {}) {
    if (count < 1) {
      throw UsageError("sample_orders: count must be positive");
    }
    if (gens.empty()) {
      throw UsageError("sample_orders: no generators");
    }
    detail::require_central(space, centre, gens);
    std::mt19937_64               rng(seed);
    std::vector<MatrixGF>         state;
    std::size_t const             slots = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < slots; ++i) {
      state.push_back(gens[i % gens.size()]);
    }
    MatrixGF accumulator = space.identity();
    auto     step        = [&] {
      std::uniform_int_distribution<std::size_t> pick(0, slots - 1);
      std::size_t                                i = pick(rng), j = pick(rng);
      while (j == i) {
        j = pick(rng);
      }
      state[i]    = rng() & 1 ? space.mul(state[i], state[j])
                              : space.mul(state[j], state[i]);
      accumulator = space.mul(accumulator, state[i]);
      return accumulator;
    };
    for (int warm = 0; warm < 60; ++warm) {
      step();
    }
    std::set<std::uint64_t> out;
    for (std::size_t s = 0; s < count; ++s) {
      out.insert(
          detail::orders_mod(space, step(), centre,
                             [](std::uint64_t, MatrixGF const&) {})
              .second);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The twisted element B gamma
  ////////////////////////////////////////////////////////////////////////

  struct BGammaReport {
    unsigned     q     = 0;
    FieldElement t     = 0;  // encoded in GF(q^2)
    unsigned     order = 0;
    bool         unitary                 = false;  // B J conj(B)^T = J
    bool         square_is_b_bbar        = false;  // (B gamma)^2 = (B conj(B), 1)
    bool         fourth_power_matches    = false;  // I + (t^2 + t^{2q}) E14
    bool         fourth_power_involution = false;
    // The matrix I + t E12 + E23 + t^q E34 without the (1,3) entry.
    bool     literal_unitary = false;
    unsigned literal_order   = 0;
  };

  namespace detail {
    inline MatrixSpace b_gamma_space(unsigned q) {
      if (q < 2 || q % 2 != 0 || !prime_power(q) || q * q > Field::max_order) {
        throw DomainError("B gamma needs an even prime power q with q^2 <= "
                          + std::to_string(Field::max_order));
      }
      return MatrixSpace(q * q, 4);
    }

    inline unsigned twisted_order(MatrixSpace const& s, MatrixGF x, unsigned q) {
      x.twist                = true;
      MatrixGF const id      = s.identity();
      MatrixGF       power   = x;
      for (unsigned k = 1; k <= 1024; ++k) {
        if (power == id) {
          return k;
        }
        power = s.twisted_mul(power, x, q);
      }
      throw InternalError("twisted element has order above 1024");
    }
  }  // namespace detail

  // B = I + t E12 + t E13 + E23 + t^q E34 = x1(t) x2(1), an element of
  // SU_4(q) over GF(q^2), and its order in SU_4(q):<gamma>.
  inline BGammaReport twisted_order_b_gamma(unsigned q, FieldElement t) {
    MatrixSpace const s = detail::b_gamma_space(q);
    Field const&      f = s.field();
    if (t >= f.order()) {
      throw UsageError("t is not an element of GF(q^2)");
    }
    FieldElement const tq = f.pow(t, q);
    if (tq == t) {
      throw DomainError("t must lie outside GF(q)");
    }
    BGammaReport r;
    r.q = q;
    r.t = t;

    MatrixGF const j        = detail::antidiagonal(s);
    auto           in_h     = [&](MatrixGF const& a) {
      return s.mul(s.mul(a, j), s.transpose(s.entrywise_power(a, q))) == j;
    };
    MatrixGF literal = s.identity();
    literal(0, 1)    = t;
    literal(1, 2)    = 1;
    literal(2, 3)    = tq;
    r.literal_unitary = in_h(literal);
    r.literal_order   = detail::twisted_order(s, literal, q);

    MatrixGF b = literal;
    b(0, 2)    = t;
    r.unitary  = in_h(b);

    MatrixGF bg = b;
    bg.twist    = true;
    MatrixGF const sq  = s.twisted_mul(bg, bg, q);
    r.square_is_b_bbar = !sq.twist && sq == s.mul(b, s.entrywise_power(b, q));

    MatrixGF const fourth    = s.twisted_mul(sq, sq, q);
    MatrixGF       displayed = s.identity();
    displayed(0, 3)           = f.add(f.mul(t, t), f.mul(tq, tq));
    r.fourth_power_matches    = fourth == displayed;
    r.fourth_power_involution = s.mul(fourth, fourth) == s.identity();
    r.order                   = detail::twisted_order(s, b, q);
    return r;
  }

  // The deterministic choice t = x, the polynomial-basis generator of
  // GF(q^2), which lies outside GF(q).
  inline BGammaReport twisted_order_b_gamma(unsigned q) {
    MatrixSpace const s = detail::b_gamma_space(q);
    for (FieldElement t : s.field().basis()) {
      if (s.field().pow(t, q) != t) {
        return twisted_order_b_gamma(q, t);
      }
    }
    throw InternalError("no basis element of GF(q^2) outside GF(q)");
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration with an optional on-disk cache
  ////////////////////////////////////////////////////////////////////////

  struct Enumeration {
    OracleGroup  group;
    Integer      elements;     // order of the matrix group
    Integer      centre_size;
    SpectrumGens spectrum;     // element orders modulo the centre
    bool         from_cache = false;
  };

  namespace detail {
    inline std::uint64_t generator_hash(GeneratorSet const& g) {
      std::uint64_t h = 1469598103934665603ull;  // FNV-1a
      auto          mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
          h ^= (v >> (8 * i)) & 0xff;
          h *= 1099511628211ull;
        }
      };
      mix(g.space.field().order());
      mix(g.space.dim());
      for (auto const& m : g.gens) {
        mix(g.space.encode(m));
      }
      return h;
    }

    inline std::string cache_name(GeneratorSet const& g) {
      std::string label = g.group.label();
      for (char& c : label) {
        if (c == '(' || c == ')' || c == '+') {
          c = c == '+' ? 'p' : '_';
        }
      }
      std::ostringstream os;
      os << label << std::hex << generator_hash(g) << ".json";
      return os.str();
    }
  }  // namespace detail

  inline nlohmann::ordered_json to_json(Enumeration const& e) {
    nlohmann::ordered_json j;
    j["group"]       = e.group.label();
    j["elements"]    = e.elements.str();
    j["centre_size"] = e.centre_size.str();
    j["spectrum"]    = to_json(e.spectrum);
    return j;
  }

  // Closes the group, computes its centre and the spectrum of the quotient.
  // With cache_dir set, results are read from and written to
  // cache_dir/<label><hash>.json.
  inline Enumeration enumerate(OracleGroup const&                   g,
                               std::size_t                          cap = default_cap,
                               std::optional<std::filesystem::path> cache_dir = {}) {
    GeneratorSet const gs = standard_generators(g);
    std::filesystem::path file;
    if (cache_dir) {
      file = *cache_dir / detail::cache_name(gs);
      std::ifstream in(file);
      if (in) {
        try {
          auto        j = nlohmann::ordered_json::parse(in);
          Enumeration e;
          e.group       = g;
          e.elements    = parse_integer(j.at("elements").get<std::string>());
          e.centre_size = parse_integer(j.at("centre_size").get<std::string>());
          e.spectrum    = spectrum_from_json(j.at("spectrum"));
          e.from_cache  = true;
          return e;
        } catch (std::exception const&) {
          // unreadable cache entries are recomputed and overwritten
        }
      }
    }
    ElementSet const set = close_group(gs.space, gs.gens, cap);
    auto const       z   = centre(gs.space, set, gs.gens);
    Enumeration      e;
    e.group          = g;
    e.elements       = set.size();
    e.centre_size    = z.size();
    e.spectrum       = element_orders(gs.space, set, gs.gens, z);
    e.spectrum.label = "oracle:" + g.label();
    if (cache_dir) {
      std::filesystem::create_directories(*cache_dir);
      std::ofstream out(file);
      out << to_json(e).dump() << '\n';
    }
    return e;
  }

  // The cache directory named by ISOSPEC_CACHE_DIR, if set and nonempty.
  inline std::optional<std::filesystem::path> cache_dir_from_env() {
    char const* dir = std::getenv("ISOSPEC_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') {
      return std::nullopt;
    }
    return std::filesystem::path(dir);
  }

}  // namespace isospec

#endif  // ISOSPEC_ORACLE_HPP_
