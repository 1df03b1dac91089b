// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Small finite fields GF(p^m) with full operation tables. An element is stored
// as the integer sum c_i p^i of its coefficients in the polynomial basis
// 1, x, ..., x^{m-1}, where x is a root of the modulus; for p = 2 this is the
// coefficient bitmask and addition is xor.

#ifndef ISOSPEC_FIELD_HPP_
#define ISOSPEC_FIELD_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"

namespace isospec {

  using FieldElement = std::uint16_t;

  class Field {
   public:
    // Largest supported order; the tables hold q^2 entries each.
    static constexpr unsigned max_order = 1024;

    explicit Field(unsigned q) : _q(q) {
      auto pm = prime_power(q);
      if (!pm || q > max_order) {
        throw UnsupportedError("GF(" + std::to_string(q)
                               + ") unsupported: need a prime power <= "
                               + std::to_string(max_order));
      }
      _p = static_cast<unsigned>(pm->first);
      _m = pm->second;
      find_modulus();
      build_tables();
    }

    unsigned order() const {
      return _q;
    }

    unsigned characteristic() const {
      return _p;
    }

    unsigned degree() const {
      return _m;
    }

    // Coefficients c_0..c_{m-1} of the monic modulus x^m + sum c_i x^i.
    std::vector<unsigned> const& modulus() const {
      return _modulus;
    }

    FieldElement zero() const {
      return 0;
    }

    FieldElement one() const {
      return 1;
    }

    // The class of x, a primitive element (the modulus is primitive). For
    // m = 1 this is the smallest primitive root mod p.
    FieldElement generator() const {
      return _exp[1];
    }

    FieldElement add(FieldElement a, FieldElement b) const {
      return _add[a * _q + b];
    }

    FieldElement sub(FieldElement a, FieldElement b) const {
      return _add[a * _q + _neg[b]];
    }

    FieldElement neg(FieldElement a) const {
      return _neg[a];
    }

    FieldElement mul(FieldElement a, FieldElement b) const {
      return _mul[a * _q + b];
    }

    FieldElement inv(FieldElement a) const {
      if (a == 0) {
        throw DomainError("GF(" + std::to_string(_q) + "): 0 has no inverse");
      }
      return _exp[(_q - 1 - _log[a]) % (_q - 1)];
    }

    FieldElement pow(FieldElement a, std::uint64_t k) const {
      if (a == 0) {
        return k == 0 ? 1 : 0;
      }
      return _exp[(static_cast<std::uint64_t>(_log[a]) * (k % (_q - 1)))
                  % (_q - 1)];
    }

    // x -> x^p
    FieldElement frobenius(FieldElement a) const {
      return pow(a, _p);
    }

    // The subfield of order s = p^k (k | m) as a sorted list of elements.
    std::vector<FieldElement> subfield(unsigned s) const {
      std::vector<FieldElement> out;
      for (unsigned a = 0; a < _q; ++a) {
        if (pow(static_cast<FieldElement>(a), s) == a) {
          out.push_back(static_cast<FieldElement>(a));
        }
      }
      if (out.size() != s) {
        throw DomainError("GF(" + std::to_string(_q) + ") has no subfield of order "
                          + std::to_string(s));
      }
      return out;
    }

    // The polynomial basis 1, x, ..., x^{m-1} (a basis over the prime field).
    std::vector<FieldElement> basis() const {
      std::vector<FieldElement> out;
      unsigned                  pk = 1;
      for (unsigned k = 0; k < _m; ++k, pk *= _p) {
        out.push_back(static_cast<FieldElement>(pk));
      }
      return out;
    }

    // Coefficient vector of a in the polynomial basis.
    std::vector<unsigned> coefficients(FieldElement a) const {
      std::vector<unsigned> out(_m);
      for (unsigned k = 0; k < _m; ++k) {
        out[k] = a % _p;
        a /= _p;
      }
      return out;
    }

    bool operator==(Field const& other) const {
      return _q == other._q;
    }

   private:
    using Poly = std::vector<unsigned>;  // little-endian, length m

    // (a * x) mod modulus, both of length m
    Poly times_x(Poly const& a, Poly const& modulus) const {
      Poly     out(_m, 0);
      unsigned top = a[_m - 1];
      for (unsigned k = _m - 1; k > 0; --k) {
        out[k] = a[k - 1];
      }
      out[0] = 0;
      for (unsigned k = 0; k < _m; ++k) {
        out[k] = (out[k] + (_p - modulus[k]) * top) % _p;
      }
      return out;
    }

    unsigned encode(Poly const& a) const {
      unsigned v = 0;
      for (unsigned k = _m; k-- > 0;) {
        v = v * _p + a[k];
      }
      return v;
    }

    // Smallest monic modulus (ordered by encoded lower coefficients) for
    // which x has multiplicative order q - 1. For m = 1 the "modulus" is
    // x - g with g the smallest primitive root, so that x = g.
    void find_modulus() {
      unsigned const count = _q;  // p^m choices of the lower coefficients
      for (unsigned code = 0; code < count; ++code) {
        Poly     modulus(_m);
        unsigned c = code;
        for (unsigned k = 0; k < _m; ++k) {
          modulus[k] = c % _p;
          c /= _p;
        }
        if (modulus[0] == 0) {
          continue;
        }
        Poly power(_m, 0);
        if (_m == 1) {
          power[0] = (_p - modulus[0]) % _p;  // x = -c_0
        } else {
          power[1] = 1;
        }
        Poly     x = power;
        unsigned k = 1;
        while (!(power[0] == 1 && std::all_of(power.begin() + 1, power.end(),
                                               [](unsigned v) { return v == 0; }))
               && k < _q) {
          power = _m == 1 ? Poly{(power[0] * x[0]) % _p} : times_x(power, modulus);
          ++k;
        }
        if (k == _q - 1) {
          _modulus = modulus;
          return;
        }
      }
      throw InternalError("no primitive modulus for GF(" + std::to_string(_q)
                          + ")");
    }

    void build_tables() {
      std::size_t const n = _q;
      _exp.assign(n, 0);
      _log.assign(n, 0);
      Poly power(_m, 0);
      power[0] = 1;
      Poly x(_m, 0);
      if (_m == 1) {
        x[0] = (_p - _modulus[0]) % _p;
      }
      for (unsigned k = 0; k + 1 < n; ++k) {
        auto e  = static_cast<FieldElement>(encode(power));
        _exp[k] = e;
        _log[e] = k;
        power   = _m == 1 ? Poly{(power[0] * x[0]) % _p} : times_x(power, _modulus);
      }
      _exp[n - 1] = 1;  // convenience for exponent q - 1
      _add.assign(n * n, 0);
      _mul.assign(n * n, 0);
      _neg.assign(n, 0);
      for (unsigned a = 0; a < n; ++a) {
        auto ca = coefficients(static_cast<FieldElement>(a));
        Poly neg(_m);
        for (unsigned k = 0; k < _m; ++k) {
          neg[k] = (_p - ca[k]) % _p;
        }
        _neg[a] = static_cast<FieldElement>(encode(neg));
        for (unsigned b = 0; b < n; ++b) {
          auto cb = coefficients(static_cast<FieldElement>(b));
          Poly sum(_m);
          for (unsigned k = 0; k < _m; ++k) {
            sum[k] = (ca[k] + cb[k]) % _p;
          }
          _add[a * n + b] = static_cast<FieldElement>(encode(sum));
          _mul[a * n + b]
              = (a == 0 || b == 0)
                    ? 0
                    : _exp[(_log[a] + _log[b]) % (n - 1)];
        }
      }
    }

    unsigned                  _q;
    unsigned                  _p = 0;
    unsigned                  _m = 0;
    Poly                      _modulus;
    std::vector<FieldElement> _exp;
    std::vector<unsigned>     _log;
    std::vector<FieldElement> _add;
    std::vector<FieldElement> _mul;
    std::vector<FieldElement> _neg;
  };

}  // namespace isospec

#endif  // ISOSPEC_FIELD_HPP_
