#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/group.hpp"
#include "cgt/permutation.hpp"
#include "cgt/presentation.hpp"
#include "cgt/subgroup_posets.hpp"
#include "cgt/todd_coxeter.hpp"

namespace cgt {

// Isomorphism-invariant fingerprint used to certify that corpus entries are
// pairwise distinct. Equal fingerprints do not prove isomorphism; distinct
// fingerprints prove non-isomorphism.
struct Fingerprint {
  std::size_t order = 0;
  std::map<unsigned, std::size_t> order_histogram;
  std::vector<std::size_t> class_sizes;
  bool abelian = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint f;
  f.order = g.order();
  for (Elem x = 0; x < g.order(); ++x) ++f.order_histogram[g.order_of(x)];

  std::vector<bool> seen(g.order(), false);
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::size_t sz = 0;
    for (Elem c = 0; c < g.order(); ++c) {
      Elem y = g.mul(g.mul(g.inverse(c), x), c);
      if (!seen[y]) {
        seen[y] = true;
        ++sz;
      }
    }
    f.class_sizes.push_back(sz);
  }
  std::sort(f.class_sizes.begin(), f.class_sizes.end());

  f.abelian = true;
  for (Elem a = 0; a < g.order() && f.abelian; ++a)
    for (Elem b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        f.abelian = false;
        break;
      }
  return f;
}

inline std::string to_string(const Fingerprint& f) {
  std::string s = "order=" + std::to_string(f.order);
  s += f.abelian ? " abelian" : " nonabelian";
  s += " orders{";
  bool first = true;
  for (const auto& [k, v] : f.order_histogram) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  s += "} classes[";
  for (std::size_t i = 0; i < f.class_sizes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.class_sizes[i]);
  }
  s += "]";
  return s;
}

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Z_m extended by an order-2 element b with b^-1 a b = a^t and b^2 either
// trivial or a^(m/2): covers the dihedral, semidihedral, modular and
// dicyclic families. Realized as a permutation construction through the
// right regular action on the 2m pairs a^i b^j. Requires t^2 = 1 (mod m).
inline GroupTable metacyclic_by_involution(std::size_t m, std::size_t t, bool twist,
                                           const std::string& name) {
  if ((t * t) % m != 1 % m)
    throw BadParameter("twisting exponent " + std::to_string(t) +
                       " is not an involution mod " + std::to_string(m));
  auto enc = [m](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>(j * m + i);
  };
  const std::size_t half = twist ? m / 2 : 0;
  Permutation ra, rb;
  ra.images.resize(2 * m);
  rb.images.resize(2 * m);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      // right multiplication: (a^i b^j) a = a^(i + t^j) b^j
      ra.images[enc(i, j)] = enc((i + (j ? t : 1)) % m, j);
      // (a^i) b = a^i b ; (a^i b) b = a^(i + half)
      rb.images[enc(i, j)] = j == 0 ? enc(i, 1) : enc((i + half) % m, 0);
    }
  auto elems = closure_from_generators({ra, rb}, 2 * m);
  if (elems.size() != 2 * m)
    throw Error("metacyclic construction of " + name + " closed at order " +
                std::to_string(elems.size()) + ", expected " + std::to_string(2 * m));
  return cayley_from_elements(elems, name);
}

}  // namespace detail

inline GroupTable make_cyclic(std::size_t n) {
  if (n < 1) throw BadParameter("cyclic group order must be >= 1");
  std::vector<Elem> product(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      product[i * n + j] = static_cast<Elem>((i + j) % n);
  return GroupTable(n, std::move(product), "Z_" + std::to_string(n));
}

// Dihedral group of the given (even) order 2n.
inline GroupTable make_dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw BadParameter("dihedral order must be even and >= 2");
  std::size_t n = order / 2;
  return detail::metacyclic_by_involution(n, (n - 1) % n, false,
                                          "D_" + std::to_string(order));
}

// Dicyclic group of order 4m: <a, b | a^2m = 1, b^2 = a^m, b^-1 a b = a^-1>.
inline GroupTable make_dicyclic(std::size_t order) {
  if (order < 4 || order % 4 != 0)
    throw BadParameter("dicyclic order must be a multiple of 4");
  std::size_t m = order / 2;
  return detail::metacyclic_by_involution(m, m - 1, true, "Dic_" + std::to_string(order / 4));
}

// The presentation <a, b | a^(2^(n-2)) = b^2, a^(2^(n-1)) = 1, b^-1 a b = a^-1>
// for the generalized quaternion group of order 2^n, n >= 3.
inline Presentation generalized_quaternion_presentation(std::size_t order) {
  if (order < 8 || !detail::is_power_of_two(order))
    throw BadParameter("generalized quaternion order must be 2^n with n >= 3");
  std::size_t q = order / 4;  // 2^(n-2)
  return parse_presentation("< a, b | a^" + std::to_string(q) + " = b^2, a^" +
                            std::to_string(2 * q) + " = 1, b^-1*a*b = a^-1 >");
}

// Built twice: from the presentation by coset enumeration and as an explicit
// permutation construction. The two must agree on the fingerprint; the
// permutation-built table is returned.
inline GroupTable make_generalized_quaternion(std::size_t order) {
  if (order < 8 || !detail::is_power_of_two(order))
    throw BadParameter("generalized quaternion order must be 2^n with n >= 3");
  std::string name = "Q_" + std::to_string(order);
  GroupTable by_perms = detail::metacyclic_by_involution(order / 2, order / 2 - 1, true, name);
  GroupTable by_presentation = todd_coxeter(generalized_quaternion_presentation(order));
  if (!(fingerprint(by_perms) == fingerprint(by_presentation)))
    throw Error("presentation and permutation constructions of " + name + " disagree");
  return by_perms;
}

// Semidihedral group of order 2^n, n >= 4.
inline GroupTable make_semidihedral(std::size_t order) {
  if (order < 16 || !detail::is_power_of_two(order))
    throw BadParameter("semidihedral order must be 2^n with n >= 4");
  std::size_t m = order / 2;
  return detail::metacyclic_by_involution(m, m / 2 - 1, false, "SD_" + std::to_string(order));
}

// Modular maximal-cyclic group of order 2^n, n >= 4.
inline GroupTable make_modular(std::size_t order) {
  if (order < 16 || !detail::is_power_of_two(order))
    throw BadParameter("modular group order must be 2^n with n >= 4");
  std::size_t m = order / 2;
  return detail::metacyclic_by_involution(m, m / 2 + 1, false, "M_" + std::to_string(order));
}

inline GroupTable make_symmetric(std::size_t degree) {
  if (degree < 1 || degree > 6)
    throw BadParameter("symmetric group degree must be in 1..6");
  std::string name = "S_" + std::to_string(degree);
  if (degree == 1) {
    auto g = make_cyclic(1);
    g.set_name(name);
    return g;
  }
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1}})};
  if (degree > 2) {
    std::vector<std::uint32_t> full(degree);
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(Permutation::from_cycles(degree, {full}));
  }
  return cayley_from_elements(closure_from_generators(gens, degree), name);
}

inline GroupTable make_alternating(std::size_t degree) {
  if (degree < 1 || degree > 6)
    throw BadParameter("alternating group degree must be in 1..6");
  std::string name = "A_" + std::to_string(degree);
  if (degree <= 2) {
    auto g = make_cyclic(1);
    g.set_name(name);
    return g;
  }
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1, 2}})};
  if (degree >= 4) {
    // an even long cycle: the full cycle for odd degree, an (n-1)-cycle otherwise
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t i = degree % 2 == 1 ? 0 : 1; i < degree; ++i) cyc.push_back(i);
    gens.push_back(Permutation::from_cycles(degree, {cyc}));
  }
  return cayley_from_elements(closure_from_generators(gens, degree), name);
}

// Componentwise product; the element (x, y) has order lcm(|x|, |y|).
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                                 std::size_t table_cap = kDefaultTableCap) {
  const std::size_t n = g.order() * h.order();
  if (n > table_cap)
    throw CapExceeded("direct product of orders " + std::to_string(g.order()) + " and " +
                      std::to_string(h.order()) + " exceeds table cap of " +
                      std::to_string(table_cap));
  std::vector<Elem> product(n * n);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < h.order(); ++b)
      for (std::size_t c = 0; c < g.order(); ++c)
        for (std::size_t d = 0; d < h.order(); ++d)
          product[(a * h.order() + b) * n + (c * h.order() + d)] =
              static_cast<Elem>(g.mul(static_cast<Elem>(a), static_cast<Elem>(c)) * h.order() +
                                h.mul(static_cast<Elem>(b), static_cast<Elem>(d)));
  std::string name = g.name().empty() || h.name().empty()
                         ? std::string()
                         : g.name() + " x " + h.name();
  return GroupTable(n, std::move(product), std::move(name));
}

// Direct product of cyclic groups of the given orders.
inline GroupTable make_abelian(const std::vector<std::size_t>& parts,
                               std::size_t table_cap = kDefaultTableCap) {
  if (parts.empty()) return make_cyclic(1);
  GroupTable g = make_cyclic(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, make_cyclic(parts[i]), table_cap);
  return g;
}

// Parses the family spec strings used by the command line: Z_n, D_2n, Q_2^n
// (aliases Q8, Q16, ...), SD_2^n, M_2^n, Dic_m, S_n, A_n, and products
// Z_a x Z_b x ... The underscore is optional and 2^n may be written out.
inline GroupTable make_group(const std::string& spec,
                             std::size_t table_cap = kDefaultTableCap) {
  auto fail = [&spec]() -> GroupTable {
    throw BadParameter("unrecognized group spec '" + spec + "'");
  };
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  };
  auto parse_number = [&](const std::string& s) -> std::size_t {
    // digits, or base^exponent
    std::size_t caret = s.find('^');
    try {
      if (caret == std::string::npos) return std::stoull(s);
      std::size_t base = std::stoull(s.substr(0, caret));
      std::size_t exp = std::stoull(s.substr(caret + 1));
      std::size_t v = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (v > kDefaultTableCap * 16)
          throw BadParameter("number too large in group spec '" + spec + "'");
        v *= base;
      }
      return v;
    } catch (const std::exception&) {
      throw BadParameter("bad number in group spec '" + spec + "'");
    }
  };

  std::string s = trim(spec);
  if (s.find(" x ") != std::string::npos || s.find(" X ") != std::string::npos) {
    std::vector<std::size_t> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = std::min(s.find(" x ", pos), s.find(" X ", pos));
      std::string piece = trim(s.substr(pos, next == std::string::npos ? next : next - pos));
      if (piece.size() < 2 || (piece[0] != 'Z' && piece[0] != 'z')) return fail();
      parts.push_back(parse_number(trim(piece.substr(piece[1] == '_' ? 2 : 1))));
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return make_abelian(parts, table_cap);
  }

  std::size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  std::string fam = s.substr(0, i);
  if (i < s.size() && s[i] == '_') ++i;
  if (i >= s.size()) return fail();
  std::size_t num = parse_number(s.substr(i));

  if (fam == "Z") return make_cyclic(num);
  if (fam == "D") return make_dihedral(num);
  if (fam == "Q") return make_generalized_quaternion(num);
  if (fam == "SD") return make_semidihedral(num);
  if (fam == "M") return make_modular(num);
  if (fam == "Dic") return make_dicyclic(4 * num);
  if (fam == "S") return make_symmetric(num);
  if (fam == "A") return make_alternating(num);
  return fail();
}

// One verification subject: a named group plus how it was constructed.
struct CorpusEntry {
  std::string name;
  GroupTable group;
  std::string source;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> partitions_of(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  // descending parts, lexicographically largest first
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> f;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      std::size_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

// Every abelian group of order n except Z_n itself, as ascending lists of
// prime-power cyclic factors.
inline std::vector<std::vector<std::size_t>> noncyclic_abelian_factorizations(std::size_t n) {
  auto primes = factorize(n);
  std::vector<std::vector<std::size_t>> combos{{}};
  for (const auto& [p, e] : primes) {
    std::vector<std::vector<std::size_t>> grown;
    for (const auto& part : partitions_of(e))
      for (const auto& combo : combos) {
        std::vector<std::size_t> c = combo;
        for (std::size_t part_exp : part) {
          std::size_t f = 1;
          for (std::size_t i = 0; i < part_exp; ++i) f *= p;
          c.push_back(f);
        }
        grown.push_back(std::move(c));
      }
    combos = std::move(grown);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : combos) {
    std::sort(c.begin(), c.end());
    // one factor per prime means the product is Z_n itself
    if (c.size() != primes.size()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string abelian_name(const std::vector<std::size_t>& parts) {
  std::string name;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) name += " x ";
    name += "Z_" + std::to_string(parts[i]);
  }
  return name;
}

inline void add_entry(std::vector<CorpusEntry>& corpus, GroupTable g, std::string source) {
  CorpusEntry e{g.name(), std::move(g), std::move(source)};
  auto v = validate_table(e.group);
  if (!v.ok())
    throw Error("corpus entry " + e.name + " fails validation: " + v.violations[0]);
  corpus.push_back(std::move(e));
}

}  // namespace detail

// The verification corpus: every group of order <= 15 (the classical
// classification, 28 groups), and for orders 16..max_order all abelian
// groups, the 2-power families (dihedral, generalized quaternion,
// semidihedral, modular), the dicyclic groups of non-2-power parameter
// (the 2-power ones are the generalized quaternion groups already present),
// and S_4 and A_5 when in range. Entries are pairwise distinguishable by
// fingerprint, which is checked here per order.
inline std::vector<CorpusEntry> corpus(std::size_t max_order) {
  if (max_order < 1) throw BadParameter("max_order must be >= 1");
  if (max_order > 64) throw BadParameter("corpus supported up to order 64");

  std::vector<CorpusEntry> out;
  auto add = detail::add_entry;

  for (std::size_t n = 1; n <= max_order; ++n) {
    add(out, make_cyclic(n), "cyclic(" + std::to_string(n) + ")");
    if (n <= 15) {
      switch (n) {
        case 4:
          add(out, make_abelian({2, 2}), "abelian(2,2)");
          break;
        case 6:
          add(out, make_dihedral(6), "dihedral(6)");
          break;
        case 8:
          add(out, make_abelian({2, 4}), "abelian(2,4)");
          add(out, make_abelian({2, 2, 2}), "abelian(2,2,2)");
          add(out, make_dihedral(8), "dihedral(8)");
          add(out, make_generalized_quaternion(8), "generalized_quaternion(8)");
          break;
        case 9:
          add(out, make_abelian({3, 3}), "abelian(3,3)");
          break;
        case 10:
          add(out, make_dihedral(10), "dihedral(10)");
          break;
        case 12:
          add(out, make_abelian({2, 6}), "abelian(2,6)");
          add(out, make_dihedral(12), "dihedral(12)");
          add(out, make_dicyclic(12), "dicyclic(12)");
          add(out, make_alternating(4), "alternating(4)");
          break;
        case 14:
          add(out, make_dihedral(14), "dihedral(14)");
          break;
        default:
          break;
      }
      continue;
    }
    for (const auto& parts : detail::noncyclic_abelian_factorizations(n))
      add(out, make_abelian(parts), "abelian(" + detail::abelian_name(parts) + ")");
    if (detail::is_power_of_two(n)) {
      add(out, make_dihedral(n), "dihedral(" + std::to_string(n) + ")");
      add(out, make_generalized_quaternion(n),
          "generalized_quaternion(" + std::to_string(n) + ")");
      add(out, make_semidihedral(n), "semidihedral(" + std::to_string(n) + ")");
      add(out, make_modular(n), "modular(" + std::to_string(n) + ")");
    } else if (n % 4 == 0 && !detail::is_power_of_two(n / 4)) {
      add(out, make_dicyclic(n), "dicyclic(" + std::to_string(n) + ")");
    }
    if (n == 24) add(out, make_symmetric(4), "symmetric(4)");
    if (n == 60) add(out, make_alternating(5), "alternating(5)");
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const CorpusEntry& a, const CorpusEntry& b) {
                     return a.group.order() < b.group.order();
                   });

  // non-redundancy contract: same-order entries must differ in fingerprint
  std::vector<Fingerprint> prints;
  prints.reserve(out.size());
  for (const auto& e : out) prints.push_back(fingerprint(e.group));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1;
         j < out.size() && out[j].group.order() == out[i].group.order(); ++j)
      if (prints[i] == prints[j])
        throw Error("corpus entries " + out[i].name + " and " + out[j].name +
                    " share a fingerprint");
  return out;
}

}  // namespace cgt
