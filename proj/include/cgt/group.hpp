#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgt/bitset.hpp"
#include "cgt/errors.hpp"
#include "cgt/permutation.hpp"

namespace cgt {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultTableCap = 4096;

// A finite group given by its full multiplication table. Identity, inverses
// and element orders are derived from the table at construction. The
// constructor is lenient: a defective table still constructs, with
// best-effort derived data, and validate_table reports the violations.
class GroupTable {
 public:
  GroupTable(std::size_t order, std::vector<Elem> product, std::string name = "")
      : order_(order), product_(std::move(product)), name_(std::move(name)) {
    if (order_ == 0) throw BadParameter("group order must be >= 1");
    if (product_.size() != order_ * order_)
      throw BadParameter("product table has " + std::to_string(product_.size()) +
                         " entries, expected " + std::to_string(order_ * order_));
    for (Elem v : product_)
      if (v >= order_)
        throw BadParameter("product entry " + std::to_string(v) +
                           " outside 0.." + std::to_string(order_ - 1));
    derive();
  }

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  Elem mul(Elem a, Elem b) const { return product_[a * order_ + b]; }
  Elem identity() const { return identity_; }
  Elem inverse(Elem x) const { return inverse_[x]; }

  // Smallest k >= 1 with x^k = identity; 0 if the table is defective and no
  // power within the group order reaches the identity.
  unsigned order_of(Elem x) const { return element_order_[x]; }

  Elem power(Elem x, std::uint64_t k) const {
    Elem r = identity_;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

 private:
  void derive() {
    identity_ = 0;
    for (Elem e = 0; e < order_; ++e) {
      bool ok = true;
      for (Elem x = 0; x < order_ && ok; ++x)
        ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    inverse_.assign(order_, 0);
    for (Elem x = 0; x < order_; ++x)
      for (Elem y = 0; y < order_; ++y)
        if (mul(x, y) == identity_ && mul(y, x) == identity_) {
          inverse_[x] = y;
          break;
        }
    element_order_.assign(order_, 0);
    for (Elem x = 0; x < order_; ++x) {
      Elem p = x;
      for (unsigned k = 1; k <= order_; ++k) {
        if (p == identity_) {
          element_order_[x] = k;
          break;
        }
        p = mul(p, x);
      }
    }
  }

  std::size_t order_;
  std::vector<Elem> product_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<unsigned> element_order_;
  std::string name_;
};

// A subgroup as a canonical membership mask over the parent group's element
// indices. Equality is mask equality.
struct SubgroupSet {
  Bitset members;
  std::size_t size = 0;

  bool contains(std::size_t x) const { return members.test(x); }
  bool subset_of(const SubgroupSet& o) const { return members.is_subset_of(o.members); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.members == b.members;
  }
};

// Canonical order used everywhere nodes are listed: size, then mask.
inline bool canonical_less(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size != b.size) return a.size < b.size;
  return a.members < b.members;
}

// Builds the Cayley table of a list of permutations that is closed under
// composition and inverses, as produced by closure_from_generators.
inline GroupTable cayley_from_elements(const std::vector<Permutation>& elems,
                                       std::string name = "",
                                       std::size_t table_cap = kDefaultTableCap) {
  if (elems.empty()) throw BadParameter("element list is empty");
  if (elems.size() > table_cap)
    throw CapExceeded("multiplication table for " + std::to_string(elems.size()) +
                      " elements exceeds cap of " + std::to_string(table_cap));
  const std::size_t n = elems.size();
  std::unordered_map<std::vector<std::uint32_t>, Elem, detail::ImageHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i].images, static_cast<Elem>(i));

  std::vector<Elem> product(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[a], elems[b]).images);
      if (it == index.end())
        throw NotClosed("product of elements " + std::to_string(a) + " and " +
                        std::to_string(b) + " falls outside the element list");
      product[a * n + b] = it->second;
    }
  return GroupTable(n, std::move(product), std::move(name));
}

inline unsigned element_order(const GroupTable& g, std::size_t x) {
  if (x >= g.order())
    throw IndexOutOfRange("element index " + std::to_string(x) +
                          " outside group of order " + std::to_string(g.order()));
  return g.order_of(static_cast<Elem>(x));
}

// Smallest subgroup containing the seed; the empty seed yields the trivial
// subgroup. Closure under products suffices in a finite group.
inline SubgroupSet generated_subgroup(const GroupTable& g,
                                      const std::vector<std::size_t>& seed) {
  SubgroupSet h;
  h.members = Bitset(g.order());
  std::vector<Elem> elems;
  auto add = [&](Elem x) {
    if (!h.members.test(x)) {
      h.members.set(x);
      elems.push_back(x);
    }
  };
  add(g.identity());
  for (std::size_t x : seed) {
    if (x >= g.order())
      throw IndexOutOfRange("seed element " + std::to_string(x) +
                            " outside group of order " + std::to_string(g.order()));
    add(static_cast<Elem>(x));
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  h.size = elems.size();
  return h;
}

// The set {g^-1 h g : h in H}.
inline SubgroupSet conjugate_subgroup(const GroupTable& g, const SubgroupSet& h,
                                      std::size_t conj) {
  if (conj >= g.order())
    throw IndexOutOfRange("conjugating element " + std::to_string(conj) +
                          " outside group of order " + std::to_string(g.order()));
  const Elem c = static_cast<Elem>(conj);
  const Elem cinv = g.inverse(c);
  SubgroupSet r;
  r.members = Bitset(g.order());
  r.size = h.size;
  for (std::size_t x : h.members.members())
    r.members.set(g.mul(g.mul(cinv, static_cast<Elem>(x)), c));
  return r;
}

struct TableValidation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Confirms every GroupTable invariant by brute force: Latin square rows and
// columns, identity behaviour, inverses, associativity (O(n^3)), and element
// orders. Violations are reported as data with witnesses, capped so a badly
// mangled table cannot produce an unbounded report.
inline TableValidation validate_table(const GroupTable& g) {
  constexpr std::size_t kMaxReported = 32;
  TableValidation v;
  bool truncated = false;
  auto report = [&](std::string msg) {
    if (v.violations.size() < kMaxReported)
      v.violations.push_back(std::move(msg));
    else
      truncated = true;
  };
  const std::size_t n = g.order();

  for (Elem a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Elem b = 0; b < n; ++b) {
      Elem r = g.mul(a, b);
      Elem c = g.mul(b, a);
      if (row[r])
        report("row " + std::to_string(a) + " repeats value " + std::to_string(r));
      if (col[c])
        report("column " + std::to_string(a) + " repeats value " + std::to_string(c));
      row[r] = true;
      col[c] = true;
    }
  }

  const Elem e = g.identity();
  for (Elem x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x)
      report("identity " + std::to_string(e) + " fails at element " + std::to_string(x));
    if (g.mul(x, g.inverse(x)) != e || g.mul(g.inverse(x), x) != e)
      report("inverse of element " + std::to_string(x) + " is wrong");
  }

  for (Elem a = 0; a < n && v.violations.size() < kMaxReported; ++a)
    for (Elem b = 0; b < n && v.violations.size() < kMaxReported; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          report("associativity fails at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ", " + std::to_string(c) + ")");
          break;
        }

  for (Elem x = 0; x < n; ++x) {
    unsigned k = g.order_of(x);
    if (k == 0) {
      report("element " + std::to_string(x) + " has no power equal to the identity");
      continue;
    }
    if (g.power(x, k) != e)
      report("stored order " + std::to_string(k) + " of element " + std::to_string(x) +
             " does not reach the identity");
    for (unsigned j = 1; j < k; ++j)
      if (g.power(x, j) == e) {
        report("stored order of element " + std::to_string(x) + " is not minimal");
        break;
      }
    if (n % k != 0)
      report("order " + std::to_string(k) + " of element " + std::to_string(x) +
             " does not divide the group order");
  }

  if (truncated) v.violations.push_back("... (further violations suppressed)");
  return v;
}

}  // namespace cgt
