// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Square matrices of dimension at most 8 over a small finite field, the
// semidirect-product arithmetic with the entrywise Frobenius twist, and a
// compact 64-bit encoding used as the canonical key during enumeration.

#ifndef ISOSPEC_MATRIX_HPP_
#define ISOSPEC_MATRIX_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "field.hpp"

namespace isospec {

  struct MatrixGF {
    static constexpr unsigned max_dim = 8;

    unsigned                                      dim = 0;
    std::array<FieldElement, max_dim * max_dim> entries{};
    // Marks the coset of the Frobenius twist gamma in (A, i) pairs.
    bool twist = false;

    FieldElement operator()(unsigned i, unsigned j) const {
      return entries[i * max_dim + j];
    }

    FieldElement& operator()(unsigned i, unsigned j) {
      return entries[i * max_dim + j];
    }

    bool operator==(MatrixGF const&) const = default;
  };

  // Matrix arithmetic of a fixed dimension over a fixed field.
  class MatrixSpace {
   public:
    MatrixSpace(std::shared_ptr<Field const> field, unsigned dim)
        : _field(std::move(field)), _dim(dim) {
      if (dim < 1 || dim > MatrixGF::max_dim) {
        throw UnsupportedError("matrix dimension " + std::to_string(dim)
                               + " outside 1.." + std::to_string(MatrixGF::max_dim));
      }
      _bits = static_cast<unsigned>(std::bit_width(_field->order() - 1));
    }

    MatrixSpace(unsigned q, unsigned dim)
        : MatrixSpace(std::make_shared<Field const>(q), dim) {}

    Field const& field() const {
      return *_field;
    }

    std::shared_ptr<Field const> const& field_ptr() const {
      return _field;
    }

    unsigned dim() const {
      return _dim;
    }

    MatrixGF zero() const {
      MatrixGF m;
      m.dim = _dim;
      return m;
    }

    MatrixGF identity() const {
      MatrixGF m = zero();
      for (unsigned i = 0; i < _dim; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    // Row-major construction; entries are encoded field elements.
    MatrixGF from_rows(
        std::initializer_list<std::initializer_list<FieldElement>> rows) const {
      MatrixGF m = zero();
      if (rows.size() != _dim) {
        throw UsageError("from_rows: expected " + std::to_string(_dim) + " rows");
      }
      unsigned i = 0;
      for (auto const& row : rows) {
        if (row.size() != _dim) {
          throw UsageError("from_rows: expected " + std::to_string(_dim)
                           + " columns");
        }
        unsigned j = 0;
        for (auto v : row) {
          if (v >= _field->order()) {
            throw UsageError("from_rows: entry outside the field");
          }
          m(i, j++) = v;
        }
        ++i;
      }
      return m;
    }

    // Untwisted product; the twist flags are ignored.
    MatrixGF mul(MatrixGF const& a, MatrixGF const& b) const {
      MatrixGF     c = zero();
      Field const& f = *_field;
      for (unsigned i = 0; i < _dim; ++i) {
        for (unsigned k = 0; k < _dim; ++k) {
          FieldElement const aik = a(i, k);
          if (aik == 0) {
            continue;
          }
          for (unsigned j = 0; j < _dim; ++j) {
            c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
          }
        }
      }
      return c;
    }

    MatrixGF transpose(MatrixGF const& a) const {
      MatrixGF t = a;
      for (unsigned i = 0; i < _dim; ++i) {
        for (unsigned j = 0; j < _dim; ++j) {
          t(i, j) = a(j, i);
        }
      }
      return t;
    }

    // Entrywise x -> x^k.
    MatrixGF entrywise_power(MatrixGF const& a, std::uint64_t k) const {
      MatrixGF b = a;
      for (unsigned i = 0; i < _dim; ++i) {
        for (unsigned j = 0; j < _dim; ++j) {
          b(i, j) = _field->pow(a(i, j), k);
        }
      }
      return b;
    }

    MatrixGF scalar(FieldElement s) const {
      MatrixGF m = zero();
      for (unsigned i = 0; i < _dim; ++i) {
        m(i, i) = s;
      }
      return m;
    }

    MatrixGF add(MatrixGF const& a, MatrixGF const& b) const {
      MatrixGF c = zero();
      for (unsigned i = 0; i < _dim; ++i) {
        for (unsigned j = 0; j < _dim; ++j) {
          c(i, j) = _field->add(a(i, j), b(i, j));
        }
      }
      return c;
    }

    FieldElement determinant(MatrixGF a) const {
      Field const& f   = *_field;
      FieldElement det = 1;
      for (unsigned col = 0; col < _dim; ++col) {
        unsigned pivot = col;
        while (pivot < _dim && a(pivot, col) == 0) {
          ++pivot;
        }
        if (pivot == _dim) {
          return 0;
        }
        if (pivot != col) {
          for (unsigned j = 0; j < _dim; ++j) {
            std::swap(a(pivot, j), a(col, j));
          }
          det = f.neg(det);
        }
        det                  = f.mul(det, a(col, col));
        FieldElement const s = f.inv(a(col, col));
        for (unsigned i = col + 1; i < _dim; ++i) {
          FieldElement const factor = f.mul(a(i, col), s);
          if (factor == 0) {
            continue;
          }
          for (unsigned j = col; j < _dim; ++j) {
            a(i, j) = f.sub(a(i, j), f.mul(factor, a(col, j)));
          }
        }
      }
      return det;
    }

    bool invertible(MatrixGF const& a) const {
      return determinant(a) != 0;
    }

    // Least k >= 1 with a^k = I; throws InternalError past the limit.
    std::uint64_t order(MatrixGF const& a, std::uint64_t limit = 1u << 20) const {
      MatrixGF const id = identity();
      MatrixGF       x  = a;
      x.twist           = false;
      for (std::uint64_t k = 1; k <= limit; ++k) {
        if (x == id) {
          return k;
        }
        x = mul(x, a);
      }
      throw InternalError("matrix order exceeds " + std::to_string(limit));
    }

    // (A, i)(B, j) = (A gamma^i(B), i xor j), gamma the entrywise k-th
    // power map of order 2 (k = sqrt of the field order).
    MatrixGF twisted_mul(MatrixGF const& x,
                         MatrixGF const& y,
                         std::uint64_t   gamma_power) const {
      MatrixGF c = mul(x, x.twist ? entrywise_power(y, gamma_power) : y);
      c.twist    = x.twist != y.twist;
      return c;
    }

    ////////////////////////////////////////////////////////////////////
    // Canonical encoding
    ////////////////////////////////////////////////////////////////////

    unsigned bits_per_entry() const {
      return _bits;
    }

    bool encodable() const {
      return _dim * _dim * _bits <= 64;
    }

    std::uint64_t encode(MatrixGF const& a) const {
      if (!encodable()) {
        throw UnsupportedError("matrices of dimension " + std::to_string(_dim)
                               + " over GF(" + std::to_string(_field->order())
                               + ") do not fit a 64-bit key");
      }
      std::uint64_t key   = 0;
      unsigned      shift = 0;
      for (unsigned i = 0; i < _dim; ++i) {
        for (unsigned j = 0; j < _dim; ++j, shift += _bits) {
          key |= static_cast<std::uint64_t>(a(i, j)) << shift;
        }
      }
      return key;
    }

    MatrixGF decode(std::uint64_t key) const {
      MatrixGF            a    = zero();
      std::uint64_t const mask = (std::uint64_t(1) << _bits) - 1;
      for (unsigned i = 0; i < _dim; ++i) {
        for (unsigned j = 0; j < _dim; ++j) {
          a(i, j) = static_cast<FieldElement>(key & mask);
          key >>= _bits;
        }
      }
      return a;
    }

   private:
    std::shared_ptr<Field const> _field;
    unsigned                     _dim;
    unsigned                     _bits;
  };

}  // namespace isospec

#endif  // ISOSPEC_MATRIX_HPP_
