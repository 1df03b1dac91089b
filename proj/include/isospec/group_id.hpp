// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Labels for the simple symplectic and orthogonal groups handled here.

#ifndef ISOSPEC_GROUP_ID_HPP_
#define ISOSPEC_GROUP_ID_HPP_

#include <array>
#include <string>
#include <string_view>

#include "arith.hpp"

namespace isospec {

  // Sp       S_{2n}(q)
  // Bn       O_{2n+1}(q), q odd (even q is normalized to Sp)
  // Dplus    O^+_{2n}(q)
  // Dminus   O^-_{2n}(q)
  // O8plus   O^+_8(q)
  // O8minus  O^-_8(q), q even
  // GO8minus GO^-_8(q), q even; not simple, its spectrum is assembled from
  //          O^-_8(q) plus the orders of explicit subgroups
  enum class Family { Sp, Bn, Dplus, Dminus, O8plus, O8minus, GO8minus };

  inline constexpr std::array<std::pair<Family, std::string_view>, 7>
      family_names = {{{Family::Sp, "Sp"},
                       {Family::Bn, "Bn"},
                       {Family::Dplus, "Dplus"},
                       {Family::Dminus, "Dminus"},
                       {Family::O8plus, "O8plus"},
                       {Family::O8minus, "O8minus"},
                       {Family::GO8minus, "GO8minus"}}};

  inline std::string_view family_name(Family f) {
    for (auto const& [fam, name] : family_names) {
      if (fam == f) {
        return name;
      }
    }
    throw InternalError("family_name: unknown family");
  }

  inline Family parse_family(std::string_view name) {
    for (auto const& [fam, n] : family_names) {
      if (n == name) {
        return fam;
      }
    }
    throw UsageError("unknown family '" + std::string(name)
                     + "' (expected Sp, Bn, Dplus, Dminus, O8plus, O8minus "
                       "or GO8minus)");
  }

  inline bool is_fixed_rank(Family f) {
    return f == Family::O8plus || f == Family::O8minus
           || f == Family::GO8minus;
  }

  struct GroupId {
    Family   family = Family::Sp;
    unsigned n      = 2;
    Integer  p      = 2;
    unsigned m      = 1;

    Integer q() const {
      return ipow(p, m);
    }

    // Validates and normalizes; throws DomainError naming the violated
    // constraint. For the rank-4 families n may be passed as 0 or 4.
    static GroupId make(Family family, unsigned n, Integer const& q) {
      auto pm = prime_power(q);
      if (!pm) {
        throw DomainError("q = " + q.str() + " is not a prime power");
      }
      GroupId g{family, n, pm->first, pm->second};
      bool    even = g.p == 2;
      switch (family) {
        case Family::Sp:
          if (n < 2) {
            throw DomainError("Sp requires n >= 2");
          }
          if (n == 2 && q == 2) {
            throw DomainError("(n,q) = (2,2) excluded: S4(2) is not simple");
          }
          break;
        case Family::Bn:
          if (n < 3) {
            throw DomainError("Bn requires n >= 3");
          }
          if (even) {
            g.family = Family::Sp;
          }
          break;
        case Family::Dplus:
        case Family::Dminus:
          if (n < 4) {
            throw DomainError(std::string(family_name(family))
                              + " requires n >= 4");
          }
          break;
        case Family::O8plus:
        case Family::O8minus:
        case Family::GO8minus:
          if (n != 0 && n != 4) {
            throw DomainError(std::string(family_name(family))
                              + " has fixed n = 4");
          }
          g.n = 4;
          if (family != Family::O8plus && !even) {
            throw DomainError(std::string(family_name(family))
                              + " requires q even");
          }
          break;
      }
      return g;
    }

    // Atlas-style name, e.g. S8(2), O7(3), O+12(2), GO-8(4).
    std::string label() const {
      std::string qs = "(" + q().str() + ")";
      switch (family) {
        case Family::Sp:
          return "S" + std::to_string(2 * n) + qs;
        case Family::Bn:
          return "O" + std::to_string(2 * n + 1) + qs;
        case Family::Dplus:
        case Family::O8plus:
          return "O+" + std::to_string(2 * n) + qs;
        case Family::Dminus:
        case Family::O8minus:
          return "O-" + std::to_string(2 * n) + qs;
        case Family::GO8minus:
          return "GO-8" + qs;
      }
      throw InternalError("label: unknown family");
    }

    bool operator==(GroupId const&) const = default;
  };

}  // namespace isospec

#endif  // ISOSPEC_GROUP_ID_HPP_
