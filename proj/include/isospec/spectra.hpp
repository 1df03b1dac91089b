// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Spectra as divisor-closed sets, each stored as the antichain of its
// divisor-maximal elements ("generators"). The closed-form generator lists for
// the symplectic and orthogonal groups live in namespace formula; everything
// else is set algebra on generator lists.

#ifndef ISOSPEC_SPECTRA_HPP_
#define ISOSPEC_SPECTRA_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "arith.hpp"
#include "group_id.hpp"

namespace isospec {

  enum class Part { full, p_prime };

  inline std::string_view part_name(Part part) {
    return part == Part::full ? "full" : "p-prime";
  }

  inline Part parse_part(std::string_view s) {
    if (s == "full") {
      return Part::full;
    }
    if (s == "p-prime") {
      return Part::p_prime;
    }
    throw UsageError("unknown part '" + std::string(s)
                     + "' (expected full or p-prime)");
  }

  // Divisor-maximal generators of a divisor-closed set, ascending.
  struct SpectrumGens {
    std::string            label;
    std::optional<GroupId> group;
    Part                   part      = Part::full;
    bool                   synthetic = false;
    std::vector<Integer>   gens;

    bool operator==(SpectrumGens const&) const = default;
  };

  // The divisor-maximal elements of values, ascending.
  inline std::vector<Integer> reduce(std::vector<Integer> values) {
    std::set<Integer> distinct(values.begin(), values.end());
    values.assign(distinct.begin(), distinct.end());
    std::vector<Integer> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 1) {
        throw UsageError("spectrum generators must be positive, got "
                         + values[i].str());
      }
      bool maximal = true;
      for (std::size_t j = i + 1; j < values.size() && maximal; ++j) {
        maximal = values[j] % values[i] != 0;
      }
      if (maximal) {
        out.push_back(values[i]);
      }
    }
    return out;
  }

  inline SpectrumGens reduce_gens(std::span<Integer const> values) {
    if (values.empty()) {
      throw UsageError("reduce_gens: empty list");
    }
    SpectrumGens s;
    s.gens = reduce(std::vector<Integer>(values.begin(), values.end()));
    return s;
  }

  inline SpectrumGens reduce_gens(std::initializer_list<Integer> values) {
    return reduce_gens(std::span<Integer const>(values.begin(), values.size()));
  }

  // a lies in the divisor closure of spec.
  inline bool contains(SpectrumGens const& spec, Integer const& a) {
    if (a < 1) {
      throw UsageError("contains: a must be positive, got " + a.str());
    }
    return std::any_of(spec.gens.begin(), spec.gens.end(), [&a](auto const& g) {
      return g % a == 0;
    });
  }

  struct Inclusion {
    bool                   holds = true;
    std::optional<Integer> witness;  // a generator of a outside closure(b)

    explicit operator bool() const {
      return holds;
    }
  };

  inline Inclusion is_sub_spectrum(SpectrumGens const& a,
                                   SpectrumGens const& b) {
    for (auto const& g : a.gens) {
      if (!contains(b, g)) {
        return {false, g};
      }
    }
    return {};
  }

  inline bool equals(SpectrumGens const& a, SpectrumGens const& b) {
    return is_sub_spectrum(a, b) && is_sub_spectrum(b, a);
  }

  // All elements of the divisor closure; only for small generator values.
  inline std::vector<Integer> divisor_closure(std::vector<Integer> const& gens) {
    std::set<Integer> out;
    for (auto const& g : gens) {
      auto f = factorize(g);
      std::vector<Integer> divs{1};
      for (auto const& [p, e] : f.factors) {
        std::size_t const before = divs.size();
        Integer           pk     = 1;
        for (unsigned k = 1; k <= e; ++k) {
          pk *= p;
          for (std::size_t i = 0; i < before; ++i) {
            divs.push_back(divs[i] * pk);
          }
        }
      }
      out.insert(divs.begin(), divs.end());
    }
    return {out.begin(), out.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Closed forms
  ////////////////////////////////////////////////////////////////////////

  namespace formula {

    // (size, sign) with sign = +1 or -1 standing for the factor q^size + sign.
    struct SignedPart {
      unsigned size;
      int      sign;
    };

    // Calls f once for every multiset of signed parts whose sizes sum to
    // budget and whose count lies in [min_parts, max_parts]. Multisets are
    // produced as non-increasing sequences of the key (size, sign).
    inline void for_each_signed_partition(
        unsigned                                          budget,
        unsigned                                          min_parts,
        unsigned                                          max_parts,
        std::function<void(std::vector<SignedPart> const&)> const& f) {
      std::vector<SignedPart> parts;
      // key = 2 * size + (sign > 0)
      std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining,
                                                        unsigned max_key) {
        if (remaining == 0) {
          if (parts.size() >= min_parts) {
            f(parts);
          }
          return;
        }
        if (parts.size() == max_parts) {
          return;
        }
        for (unsigned key = std::min(max_key, 2 * remaining + 1); key >= 2;
             --key) {
          unsigned size = key / 2;
          parts.push_back({size, (key & 1) ? 1 : -1});
          rec(remaining - size, key);
          parts.pop_back();
        }
      };
      if (budget > 0) {
        rec(budget, 2 * budget + 1);
      }
    }

    inline Integer lcm_of_parts(Integer const&                 q,
                                std::vector<SignedPart> const& parts) {
      Integer l = 1;
      for (auto const& part : parts) {
        l = lcm(l, ipow(q, part.size) + part.sign);
      }
      return l;
    }

    // S_{2n}(q) (orthogonal = false) or O_{2n+1}(q) (orthogonal = true) for
    // odd q = p^m, n >= 2. d = 2 exactly for O_{2n+1}(q) with n >= 3.
    inline std::vector<Integer> odd_characteristic(unsigned       n,
                                                   Integer const& p,
                                                   unsigned       m,
                                                   bool orthogonal) {
      if (p == 2 || n < 2) {
        throw DomainError("odd_characteristic: needs odd p and n >= 2");
      }
      Integer const  q = ipow(p, m);
      unsigned const d = (orthogonal && n >= 3) ? 2 : 1;
      std::vector<Integer> out;
      // (q^n +- 1)/2
      out.push_back((ipow(q, n) + 1) / 2);
      out.push_back((ipow(q, n) - 1) / 2);
      // [q^n1 +- 1, ..., q^ns +- 1], s >= 2, sum = n
      for_each_signed_partition(n, 2, n, [&](auto const& parts) {
        out.push_back(lcm_of_parts(q, parts));
      });
      // p^k times the above with p^{k-1} + 1 + 2 * (n1 + ... + ns) = 2n
      Integer pk1 = 1;  // p^{k-1}
      for (unsigned k = 1; pk1 + 1 <= 2 * n; ++k, pk1 *= p) {
        Integer pk = pk1 * p;
        if (pk1 + 1 == 2 * n) {
          out.push_back(pk);
          continue;
        }
        unsigned budget = static_cast<unsigned>((2 * n - pk1 - 1) / 2);
        if (budget == 0) {
          continue;
        }
        out.push_back(pk * (ipow(q, budget) + 1) / d);
        out.push_back(pk * (ipow(q, budget) - 1) / d);
        for_each_signed_partition(budget, 2, budget, [&](auto const& parts) {
          out.push_back(pk * lcm_of_parts(q, parts));
        });
      }
      return reduce(std::move(out));
    }

    // S_{2n}(q) for q = 2^m, n >= 2.
    inline std::vector<Integer> even_characteristic(unsigned n, unsigned m) {
      if (n < 2) {
        throw DomainError("even_characteristic: needs n >= 2");
      }
      Integer const        q = ipow(Integer(2), m);
      std::vector<Integer> out;
      for_each_signed_partition(n, 1, n, [&](auto const& parts) {
        out.push_back(lcm_of_parts(q, parts));
      });
      for_each_signed_partition(n - 1, 1, n - 1, [&](auto const& parts) {
        out.push_back(2 * lcm_of_parts(q, parts));
      });
      // 2^k [ ... ] with k >= 2 and 2^{k-2} + 1 + sum = n; 2^k alone when
      // the sum is empty.
      Integer two_k2 = 1;  // 2^{k-2}
      for (unsigned k = 2; two_k2 + 1 <= n; ++k, two_k2 *= 2) {
        Integer  two_k  = two_k2 * 4;
        unsigned budget = static_cast<unsigned>(n - 1 - two_k2);
        if (budget == 0) {
          out.push_back(two_k);
          continue;
        }
        for_each_signed_partition(budget, 1, budget, [&](auto const& parts) {
          out.push_back(two_k * lcm_of_parts(q, parts));
        });
      }
      return reduce(std::move(out));
    }

    inline std::vector<Integer> o8plus(Integer const& p, unsigned m) {
      Integer const q = ipow(p, m);
      Integer const e = p == 2 ? 1 : 2;  // (2, q-1)
      std::vector<Integer> out{(ipow(q, 4) - 1) / (e * e),
                               (ipow(q, 3) + 1) / e,
                               (ipow(q, 3) - 1) / e,
                               q * q - 1,
                               p * (q * q + 1) / e,
                               p * (q * q - 1) / e};
      if (p == 2 || p == 3) {
        out.push_back(p * p * (q + 1) / e);
        out.push_back(p * p * (q - 1) / e);
      }
      if (p == 5) {
        out.push_back(25);
      }
      if (p == 2) {
        out.push_back(8);
      }
      return reduce(std::move(out));
    }

    // O^-_8(q), q = 2^m.
    inline std::vector<Integer> o8minus(unsigned m) {
      Integer const q = ipow(Integer(2), m);
      return reduce({ipow(q, 4) + 1,
                     ipow(q, 4) - 1,
                     (q * q + q + 1) * (q * q - 1),
                     (q * q - q + 1) * (q * q - 1),
                     2 * (q * q + 1) * (q + 1),
                     2 * (q * q + 1) * (q - 1),
                     4 * (q * q - 1),
                     8});
    }

    // Orders contributed to GO^-_8(q) by its subgroups
    // GO^e_6(q) x GO^{-e}_2(q), GO^+_4(q) x GO^-_4(q) and GO^-_6(q).
    inline std::vector<Integer> go8minus_extras(Integer const& q) {
      return {2 * (ipow(q, 3) + 1),
              2 * (ipow(q, 3) - 1),
              4 * (q * q + 1),
              8 * (q + 1),
              8 * (q - 1)};
    }

    // Semisimple orders of O^eps_{2n}(q), n >= 4. Factors are q^{n_i} - delta_i
    // with prod delta_i = eps; the two-part term is halved under the
    // 2-part rule below.
    inline std::vector<Integer> orthogonal_semisimple(unsigned       n,
                                                      Integer const& q,
                                                      int            eps) {
      if (n < 4) {
        throw DomainError("orthogonal_semisimple: needs n >= 4");
      }
      std::vector<Integer> out;
      Integer const        top = ipow(q, n) - eps;
      Integer const        top4 = gcd(Integer(4), top);
      out.push_back(top / top4);
      for (unsigned n1 = 1; n1 < n; ++n1) {
        for (int delta : {1, -1}) {
          Integer a = ipow(q, n1) - delta;
          Integer b = ipow(q, n - n1) - eps * delta;
          Integer l = lcm(a, b);
          if (top4 == 4 && r_part(a, 2) == r_part(b, 2)) {
            l /= 2;
          }
          out.push_back(l);
        }
      }
      for_each_signed_partition(n, 3, n, [&](auto const& parts) {
        // factor q^a + sign has delta = -sign
        int prod = 1;
        for (auto const& part : parts) {
          prod *= -part.sign;
        }
        if (prod == eps) {
          out.push_back(lcm_of_parts(q, parts));
        }
      });
      return reduce(std::move(out));
    }

  }  // namespace formula

  ////////////////////////////////////////////////////////////////////////
  // Spectra of labelled groups
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline SpectrumGens labelled(GroupId const& g,
                                 Part           part,
                                 std::vector<Integer> gens) {
      SpectrumGens s;
      s.label     = g.label();
      s.group     = g;
      s.part      = part;
      s.synthetic = g.family == Family::GO8minus;
      s.gens      = std::move(gens);
      return s;
    }
  }  // namespace detail

  // omega(L) for the families with a full closed form. Dplus/Dminus are
  // accepted only at n = 4 (and Dminus only for even q).
  inline SpectrumGens spectrum(GroupId const& g) {
    std::vector<Integer> gens;
    bool const           even = g.p == 2;
    switch (g.family) {
      case Family::Sp:
        gens = even ? formula::even_characteristic(g.n, g.m)
                    : formula::odd_characteristic(g.n, g.p, g.m, false);
        break;
      case Family::Bn:
        gens = formula::odd_characteristic(g.n, g.p, g.m, true);
        break;
      case Family::Dplus:
      case Family::O8plus:
        if (g.n != 4) {
          throw UnsupportedError("full spectrum of " + g.label()
                                 + " is not available (only n = 4); use the "
                                   "p-prime part");
        }
        gens = formula::o8plus(g.p, g.m);
        break;
      case Family::Dminus:
      case Family::O8minus:
        if (g.n != 4 || !even) {
          throw UnsupportedError("full spectrum of " + g.label()
                                 + " is available only for n = 4 and q even; "
                                   "use the p-prime part");
        }
        gens = formula::o8minus(g.m);
        break;
      case Family::GO8minus: {
        gens = formula::o8minus(g.m);
        auto extras = formula::go8minus_extras(g.q());
        gens.insert(gens.end(), extras.begin(), extras.end());
        gens = reduce(std::move(gens));
        break;
      }
    }
    return detail::labelled(g, Part::full, std::move(gens));
  }

  // Generators of the p'-part: strip p from every generator and reduce.
  inline std::vector<Integer> strip_p_parts(std::vector<Integer> const& gens,
                                            Integer const&              p) {
    std::vector<Integer> out;
    out.reserve(gens.size());
    for (auto const& g : gens) {
      out.push_back(strip_prime(g, p));
    }
    return reduce(std::move(out));
  }

  // omega_{p'}(L). D-families use the semisimple closed form for every
  // n >= 4; other families strip p from the full spectrum.
  inline SpectrumGens spectrum_p_prime(GroupId const& g) {
    if (g.family == Family::Dplus || g.family == Family::Dminus) {
      int eps = g.family == Family::Dplus ? 1 : -1;
      return detail::labelled(
          g, Part::p_prime, formula::orthogonal_semisimple(g.n, g.q(), eps));
    }
    return detail::labelled(
        g, Part::p_prime, strip_p_parts(spectrum(g).gens, g.p));
  }

  inline SpectrumGens spectrum(GroupId const& g, Part part) {
    return part == Part::full ? spectrum(g) : spectrum_p_prime(g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  inline nlohmann::ordered_json to_json(SpectrumGens const& s) {
    nlohmann::ordered_json j;
    j["label"] = s.label;
    if (s.group) {
      j["family"] = family_name(s.group->family);
      j["n"]      = s.group->n;
      j["p"]      = s.group->p.str();
      j["m"]      = s.group->m;
    }
    j["part"]      = part_name(s.part);
    j["synthetic"] = s.synthetic;
    auto gens      = nlohmann::ordered_json::array();
    for (auto const& g : s.gens) {
      gens.push_back(g.str());
    }
    j["gens"] = std::move(gens);
    return j;
  }

  inline std::string serialize(SpectrumGens const& s) {
    return to_json(s).dump();
  }

  // Inverse of to_json; rejects records that are not reduced, sorted,
  // nonempty, or whose p-prime part has a generator divisible by p.
  inline SpectrumGens spectrum_from_json(nlohmann::ordered_json const& j) {
    try {
      SpectrumGens s;
      s.label = j.at("label").get<std::string>();
      if (j.contains("family")) {
        GroupId g;
        g.family = parse_family(j.at("family").get<std::string>());
        g.n      = j.at("n").get<unsigned>();
        g.p      = parse_integer(j.at("p").get<std::string>());
        g.m      = j.at("m").get<unsigned>();
        s.group  = g;
      }
      s.part      = parse_part(j.at("part").get<std::string>());
      s.synthetic = j.at("synthetic").get<bool>();
      for (auto const& g : j.at("gens")) {
        s.gens.push_back(parse_integer(g.get<std::string>()));
      }
      if (s.gens.empty()) {
        throw UsageError("spectrum record has no generators");
      }
      if (reduce(s.gens) != s.gens) {
        throw UsageError("spectrum record generators are not a sorted "
                         "antichain");
      }
      if (s.part == Part::p_prime && s.group) {
        for (auto const& g : s.gens) {
          if (g % s.group->p == 0) {
            throw UsageError("p-prime record has generator " + g.str()
                             + " divisible by p");
          }
        }
      }
      return s;
    } catch (nlohmann::json::exception const& e) {
      throw UsageError(std::string("malformed spectrum record: ") + e.what());
    }
  }

  inline SpectrumGens parse_spectrum(std::string const& text) {
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw UsageError(std::string("malformed spectrum record: ") + e.what());
    }
    return spectrum_from_json(j);
  }

  inline std::string gens_text(std::vector<Integer> const& gens) {
    std::string out;
    for (auto const& g : gens) {
      if (!out.empty()) {
        out += ' ';
      }
      out += g.str();
    }
    return out;
  }

}  // namespace isospec

#endif  // ISOSPEC_SPECTRA_HPP_
