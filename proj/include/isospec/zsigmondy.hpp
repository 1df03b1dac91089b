// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Primitive prime divisors. A prime r is a primitive prime divisor of q^n - 1
// when ord_r(q) = n; R_n(q) is the set of all of them and r_n(q) one chosen
// member (here: the smallest).
//
// Computation goes through the cyclotomic value: a prime r lies in R_n(q) iff
// r divides Phi_n(q) and r does not divide n. So R_n(q) is the prime support
// of the "primitive part" Phi_n(q) with the primes of n stripped, and
// R_n(q) is nonempty iff that part exceeds 1 -- a test that needs no
// factorization at all.

#ifndef ISOSPEC_ZSIGMONDY_HPP_
#define ISOSPEC_ZSIGMONDY_HPP_

#include <optional>
#include <vector>

#include "arith.hpp"

namespace isospec {

  namespace detail {
    inline int moebius(unsigned n) {
      int mu = 1;
      for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          n /= p;
          if (n % p == 0) {
            return 0;
          }
          mu = -mu;
        }
      }
      return n > 1 ? -mu : mu;
    }

    inline void check_zsig_args(Integer const& q, unsigned n) {
      if (q < 2) {
        throw UsageError("primitive divisors need q >= 2, got " + q.str());
      }
      if (n < 1) {
        throw UsageError("primitive divisors need n >= 1");
      }
    }
  }  // namespace detail

  // Phi_n(q) = prod_{d | n} (q^d - 1)^{mu(n/d)}.
  inline Integer cyclotomic_value(unsigned n, Integer const& q) {
    Integer num = 1, den = 1;
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      int mu = detail::moebius(n / d);
      if (mu == 1) {
        num *= ipow(q, d) - 1;
      } else if (mu == -1) {
        den *= ipow(q, d) - 1;
      }
    }
    return num / den;
  }

  // Phi_n(q) with every prime dividing n removed.
  inline Integer primitive_part(Integer const& q, unsigned n) {
    detail::check_zsig_args(q, n);
    Integer part = cyclotomic_value(n, q);
    for (Integer g = gcd(part, Integer(n)); g > 1; g = gcd(part, Integer(n))) {
      part /= g;
    }
    return part;
  }

  inline bool has_primitive_prime_divisor(Integer const& q, unsigned n) {
    return primitive_part(q, n) > 1;
  }

  // R_n(q), ascending.
  inline std::vector<Integer> primitive_prime_divisors(Integer const& q,
                                                       unsigned       n) {
    return prime_divisors(primitive_part(q, n));
  }

  inline bool is_primitive_prime_divisor(Integer const& r,
                                         Integer const& q,
                                         unsigned       n) {
    return is_prime(r) && has_mult_order(q, r, Integer(n));
  }

  // r_n(q): the smallest member of R_n(q), or nullopt when R_n(q) is empty.
  inline std::optional<Integer> zsigmondy_prime(Integer const& q, unsigned n) {
    auto primes = primitive_prime_divisors(q, n);
    if (primes.empty()) {
      return std::nullopt;
    }
    return primes.front();
  }

}  // namespace isospec

#endif  // ISOSPEC_ZSIGMONDY_HPP_
