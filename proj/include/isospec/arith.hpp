// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Arbitrary-precision number theory: gcd/lcm, primality, factorization,
// r-parts and multiplicative orders. Everything here is a pure function over
// immutable values.
//
// Primality: Miller-Rabin with the 13 prime bases 2, 3, ..., 41 is a proof of
// primality below 3.317e24 (Sorenson-Webster). Above that bound the test is
// BPSW (Miller-Rabin base 2 plus a strong Lucas test with Selfridge's
// parameters) on top of the 13 bases; no BPSW pseudoprime is known.
//
// Factorization: trial division by the primes below 2^16, then Pollard-Brent
// rho with deterministic constants c = 1, 2, 3, ... so the output is a fixed
// function of the input. Intended for the desk-scale values produced by
// classical group order formulas, not cryptographic sizes.

#ifndef ISOSPEC_ARITH_HPP_
#define ISOSPEC_ARITH_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace isospec {

  using Integer = boost::multiprecision::cpp_int;

  namespace detail {
    using u64  = std::uint64_t;
    using u128 = unsigned __int128;
    using U128 = boost::multiprecision::uint128_t;
    using U256 = boost::multiprecision::uint256_t;

    inline bool fits_u64(Integer const& a) {
      return a >= 0 && boost::multiprecision::msb(a | 1) < 64;
    }
  }  // namespace detail

  inline std::string to_string(Integer const& a) {
    return a.str();
  }

  inline Integer parse_integer(std::string const& s) {
    if (s.empty()
        || !std::all_of(s.begin(), s.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      throw UsageError("not a nonnegative decimal integer: '" + s + "'");
    }
    return Integer(s);
  }

  inline Integer ipow(Integer const& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
  }

  inline Integer gcd(Integer const& a, Integer const& b) {
    return boost::multiprecision::gcd(a, b);
  }

  inline Integer lcm(Integer const& a, Integer const& b) {
    if (a == 0 || b == 0) {
      return 0;
    }
    return a / gcd(a, b) * b;
  }

  // (a_1, ..., a_k) and [a_1, ..., a_k].
  inline std::pair<Integer, Integer> gcd_lcm(std::span<Integer const> values) {
    if (values.empty()) {
      throw UsageError("gcd_lcm: empty list");
    }
    Integer g = 0, l = 1;
    for (auto const& v : values) {
      if (v < 1) {
        throw UsageError("gcd_lcm: values must be positive, got " + v.str());
      }
      g = gcd(g, v);
      l = lcm(l, v);
    }
    return {g, l};
  }

  inline std::pair<Integer, Integer>
  gcd_lcm(std::initializer_list<Integer> values) {
    return gcd_lcm(std::span<Integer const>(values.begin(), values.size()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Primality
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::vector<u64> const& small_primes() {
      static std::vector<u64> const primes = [] {
        constexpr u64     bound = 1 << 16;
        std::vector<bool> sieve(bound, true);
        std::vector<u64>  out;
        for (u64 i = 2; i < bound; ++i) {
          if (sieve[i]) {
            out.push_back(i);
            for (u64 j = i * i; j < bound; j += i) {
              sieve[j] = false;
            }
          }
        }
        return out;
      }();
      return primes;
    }

    constexpr std::array<unsigned, 13> mr_bases
        = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

    inline u64 mulmod(u64 a, u64 b, u64 n) {
      return static_cast<u64>(static_cast<u128>(a) * b % n);
    }

    inline u64 powmod(u64 a, u64 e, u64 n) {
      u64 r = 1 % n;
      a %= n;
      while (e > 0) {
        if (e & 1) {
          r = mulmod(r, a, n);
        }
        a = mulmod(a, a, n);
        e >>= 1;
      }
      return r;
    }

    inline bool miller_rabin_u64(u64 n, u64 a) {
      a %= n;
      if (a == 0) {
        return true;
      }
      u64      d = n - 1;
      unsigned s = 0;
      while ((d & 1) == 0) {
        d >>= 1;
        ++s;
      }
      u64 x = powmod(a, d, n);
      if (x == 1 || x == n - 1) {
        return true;
      }
      for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
          return true;
        }
      }
      return false;
    }

    inline bool miller_rabin(Integer const& n, Integer const& base) {
      Integer a = base % n;
      if (a == 0) {
        return true;
      }
      Integer  d = n - 1;
      unsigned s = 0;
      while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
      }
      Integer x = boost::multiprecision::powm(a, d, n);
      if (x == 1 || x == n - 1) {
        return true;
      }
      for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) {
          return true;
        }
      }
      return false;
    }

    // Jacobi symbol (a/n) for odd positive n.
    inline int jacobi(Integer a, Integer n) {
      a %= n;
      if (a < 0) {
        a += n;
      }
      int result = 1;
      while (a != 0) {
        while (!boost::multiprecision::bit_test(a, 0)) {
          a >>= 1;
          unsigned r = static_cast<unsigned>(n % 8);
          if (r == 3 || r == 5) {
            result = -result;
          }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
          result = -result;
        }
        a %= n;
      }
      return n == 1 ? result : 0;
    }

    inline bool is_square(Integer const& n) {
      Integer r = boost::multiprecision::sqrt(n);
      return r * r == n;
    }

    inline Integer half_mod(Integer x, Integer const& n) {
      if (boost::multiprecision::bit_test(x, 0)) {
        x += n;
      }
      return x >> 1;
    }

    // Strong Lucas probable prime test, Selfridge method A. n odd, > 2,
    // not a perfect square.
    inline bool strong_lucas(Integer const& n) {
      Integer dd = 5;
      int     sign = 1;
      while (true) {
        Integer D = sign * dd;
        int     j = jacobi(D, n);
        if (j == -1) {
          break;
        }
        if (j == 0 && (D < 0 ? -D : D) != n) {
          return false;
        }
        dd += 2;
        sign = -sign;
      }
      Integer D  = sign * dd;
      Integer Dm = ((D % n) + n) % n;
      Integer Q  = (((1 - D) / 4) % n + n) % n;
      Integer d  = n + 1;
      unsigned s = 0;
      while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
      }
      Integer U = 1, V = 1, Qk = Q;  // P = 1
      for (int bit = static_cast<int>(boost::multiprecision::msb(d)) - 1;
           bit >= 0;
           --bit) {
        U  = U * V % n;
        V  = ((V * V - 2 * Qk) % n + n) % n;
        Qk = Qk * Qk % n;
        if (boost::multiprecision::bit_test(d, static_cast<unsigned>(bit))) {
          Integer U2 = half_mod(U + V, n);
          Integer V2 = half_mod((Dm * U + V) % n, n);
          U          = U2 % n;
          V          = V2 % n;
          Qk         = Qk * Q % n;
        }
      }
      if (U == 0 || V == 0) {
        return true;
      }
      for (unsigned r = 1; r < s; ++r) {
        V  = ((V * V - 2 * Qk) % n + n) % n;
        Qk = Qk * Qk % n;
        if (V == 0) {
          return true;
        }
      }
      return false;
    }

  }  // namespace detail

  inline bool is_prime(Integer const& n) {
    using namespace detail;
    if (n < 2) {
      return false;
    }
    for (u64 p : small_primes()) {
      if (p > 50) {
        break;
      }
      if (n == p) {
        return true;
      }
      if (n % p == 0) {
        return false;
      }
    }
    if (fits_u64(n)) {
      u64 m = static_cast<u64>(n);
      return std::all_of(mr_bases.begin(), mr_bases.end(), [m](unsigned a) {
        return miller_rabin_u64(m, a);
      });
    }
    for (unsigned a : mr_bases) {
      if (!miller_rabin(n, a)) {
        return false;
      }
    }
    static Integer const deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound) {
      return true;
    }
    return !is_square(n) && strong_lucas(n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization
  ////////////////////////////////////////////////////////////////////////

  // value = prod p^e over factors. factors is empty iff value == 1.
  struct Factorization {
    Integer                     value = 1;
    std::map<Integer, unsigned> factors;

    std::vector<Integer> primes() const {
      std::vector<Integer> out;
      out.reserve(factors.size());
      for (auto const& [p, e] : factors) {
        out.push_back(p);
      }
      return out;
    }

    Integer reassemble() const {
      Integer v = 1;
      for (auto const& [p, e] : factors) {
        v *= ipow(p, e);
      }
      return v;
    }

    Factorization& operator*=(Factorization const& other) {
      value *= other.value;
      for (auto const& [p, e] : other.factors) {
        factors[p] += e;
      }
      return *this;
    }

    // Exact division; other must divide *this.
    Factorization& operator/=(Factorization const& other) {
      for (auto const& [p, e] : other.factors) {
        auto it = factors.find(p);
        if (it == factors.end() || it->second < e) {
          throw InternalError("Factorization: inexact division by "
                              + other.value.str());
        }
        it->second -= e;
        if (it->second == 0) {
          factors.erase(it);
        }
      }
      value /= other.value;
      return *this;
    }

    bool operator==(Factorization const&) const = default;
  };

  namespace detail {

    // Pollard-Brent over a word type W with double-width products in Wide.
    template <typename W, typename Wide>
    W brent_rho(W const& n, W const& c) {
      Wide const wn = static_cast<Wide>(n);
      Wide const wc = static_cast<Wide>(c);
      auto       f  = [&](W const& x) {
        Wide wx = static_cast<Wide>(x);
        return static_cast<W>((wx * wx + wc) % wn);
      };
      auto absdiff = [](W const& a, W const& b) { return a > b ? a - b : b - a; };
      auto gcdw    = [](W a, W b) {
        while (b != 0) {
          W t = a % b;
          a   = b;
          b   = t;
        }
        return a;
      };
      constexpr unsigned batch = 128;
      W                  y = 2 % n, x = y, ys = y, q = 1, g = 1;
      std::uint64_t      r = 1;
      do {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) {
          y = f(y);
        }
        std::uint64_t k = 0;
        do {
          ys = y;
          for (std::uint64_t i = 0; i < std::min<std::uint64_t>(batch, r - k);
               ++i) {
            y = f(y);
            q = static_cast<W>(static_cast<Wide>(q)
                               * static_cast<Wide>(absdiff(x, y)) % wn);
          }
          g = gcdw(q, n);
          k += batch;
        } while (k < r && g == 1);
        r *= 2;
      } while (g == 1);
      if (g == n) {
        do {
          ys = f(ys);
          g  = gcdw(absdiff(x, ys), n);
        } while (g == 1);
      }
      return g;
    }

    // A nontrivial divisor of a composite n.
    inline Integer find_factor(Integer const& n) {
      if (!boost::multiprecision::bit_test(n, 0)) {
        return 2;
      }
      if (is_square(n)) {
        return boost::multiprecision::sqrt(n);
      }
      unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
      for (unsigned c = 1;; ++c) {
        Integer g;
        if (bits <= 63) {
          g = Integer(brent_rho<u64, u128>(static_cast<u64>(n), c));
        } else if (bits <= 126) {
          g = Integer(brent_rho<U128, U256>(static_cast<U128>(n), U128(c)));
        } else {
          g = brent_rho<Integer, Integer>(n, Integer(c));
        }
        if (g != 1 && g != n) {
          return g;
        }
        if (c > 1000) {
          throw InternalError("find_factor: rho failed on " + n.str());
        }
      }
    }

  }  // namespace detail

  inline Factorization factorize(Integer const& a) {
    if (a < 1) {
      throw UsageError("factorize: argument must be positive, got " + a.str());
    }
    Factorization result;
    result.value = a;
    Integer n    = a;
    for (detail::u64 p : detail::small_primes()) {
      if (Integer(p) * p > n) {
        break;
      }
      while (n % p == 0) {
        n /= p;
        ++result.factors[Integer(p)];
      }
    }
    std::vector<Integer> todo;
    if (n > 1) {
      todo.push_back(n);
    }
    while (!todo.empty()) {
      Integer x = std::move(todo.back());
      todo.pop_back();
      if (is_prime(x)) {
        ++result.factors[x];
        continue;
      }
      Integer d = detail::find_factor(x);
      todo.push_back(x / d);
      todo.push_back(std::move(d));
    }
    return result;
  }

  // pi(a): the set of prime divisors, ascending.
  inline std::vector<Integer> prime_divisors(Integer const& a) {
    return factorize(a).primes();
  }

  // (a)_r: the highest power of the prime r dividing a.
  inline Integer r_part(Integer const& a, Integer const& r) {
    if (a < 1) {
      throw UsageError("r_part: a must be positive, got " + a.str());
    }
    if (!is_prime(r)) {
      throw UsageError("r_part: " + r.str() + " is not prime");
    }
    Integer part = 1, n = a;
    while (n % r == 0) {
      n /= r;
      part *= r;
    }
    return part;
  }

  // a with every factor of the prime r removed.
  inline Integer strip_prime(Integer a, Integer const& r) {
    while (a != 0 && a % r == 0) {
      a /= r;
    }
    return a;
  }

  // Smallest e >= 1 with q^e = 1 (mod r).
  inline Integer mult_order(Integer const& q, Integer const& r) {
    if (!is_prime(r)) {
      throw UsageError("mult_order: " + r.str() + " is not prime");
    }
    if (q % r == 0) {
      throw UsageError("mult_order: " + r.str() + " divides " + q.str());
    }
    Integer order = r - 1;
    for (auto const& [l, e] : factorize(r - 1).factors) {
      for (unsigned i = 0; i < e; ++i) {
        if (boost::multiprecision::powm(q % r, order / l, r) == 1) {
          order /= l;
        } else {
          break;
        }
      }
    }
    return order;
  }

  // ord_r(q) == e, without factoring r - 1. Needs r prime, e >= 1.
  inline bool has_mult_order(Integer const& q,
                             Integer const& r,
                             Integer const& e) {
    Integer base = q % r;
    if (base == 0 || boost::multiprecision::powm(base, e, r) != 1) {
      return false;
    }
    for (auto const& l : prime_divisors(e)) {
      if (boost::multiprecision::powm(base, e / l, r) == 1) {
        return false;
      }
    }
    return true;
  }

  // (p, m) with q = p^m, or nullopt when q is not a prime power.
  inline std::optional<std::pair<Integer, unsigned>>
  prime_power(Integer const& q) {
    if (q < 2) {
      return std::nullopt;
    }
    auto f = factorize(q);
    if (f.factors.size() != 1) {
      return std::nullopt;
    }
    return *f.factors.begin();
  }

}  // namespace isospec

#endif  // ISOSPEC_ARITH_HPP_
