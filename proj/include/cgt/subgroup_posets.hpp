#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/group.hpp"
#include "cgt/poset.hpp"

namespace cgt {

inline constexpr std::size_t kLatticeCap = 1000000;

namespace detail {

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

// All distinct subgroups <x>, deduplicated by membership mask, in canonical
// (size, mask) order. Includes the trivial subgroup; includes G iff G is
// cyclic.
inline std::vector<SubgroupSet> cyclic_subgroups(const GroupTable& g) {
  std::vector<SubgroupSet> out;
  std::set<Bitset> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    SubgroupSet h;
    h.members = Bitset(g.order());
    Elem p = g.identity();
    do {
      h.members.set(p);
      p = g.mul(p, x);
    } while (p != g.identity());
    h.size = h.members.count();
    if (seen.insert(h.members).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// All subgroups, as the join-closure of the cyclic subgroups: keep replacing
// incomparable pairs by the subgroup generated by their union until nothing
// new appears.
inline std::vector<SubgroupSet> subgroup_lattice(const GroupTable& g,
                                                 std::size_t cap = kLatticeCap) {
  if (g.order() > kDefaultTableCap)
    throw BadParameter("subgroup lattice supported up to order " +
                       std::to_string(kDefaultTableCap));
  std::vector<SubgroupSet> all = cyclic_subgroups(g);
  std::set<Bitset> seen;
  for (const auto& h : all) seen.insert(h.members);

  std::vector<SubgroupSet> frontier = all;
  while (!frontier.empty()) {
    std::vector<SubgroupSet> next;
    for (const auto& a : frontier)
      for (const auto& b : all) {
        if (a.subset_of(b) || b.subset_of(a)) continue;
        SubgroupSet j = generated_subgroup(g, a.members.united_with(b.members).members());
        if (seen.insert(j.members).second) {
          if (seen.size() > cap)
            throw CapExceeded("subgroup lattice exceeded cap of " + std::to_string(cap));
          next.push_back(j);
        }
      }
    for (auto& h : next) all.push_back(h);
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

// The subgroups of prime order (the atoms of the subgroup lattice).
inline std::vector<SubgroupSet> minimal_subgroups(const GroupTable& g) {
  if (g.order() == 1) throw TrivialGroup("the trivial group has no minimal subgroups");
  std::vector<SubgroupSet> out;
  std::set<Bitset> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    if (!detail::is_prime(g.order_of(x))) continue;
    SubgroupSet h;
    h.members = Bitset(g.order());
    Elem p = g.identity();
    do {
      h.members.set(p);
      p = g.mul(p, x);
    } while (p != g.identity());
    h.size = h.members.count();
    if (seen.insert(h.members).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// A conjugacy class of subgroups. The representative is the member with the
// least membership mask; members are pairwise conjugate and of equal size.
struct ConjClass {
  SubgroupSet representative;
  std::vector<SubgroupSet> members;
};

inline std::string subgroup_label(const SubgroupSet& h) {
  return "order=" + std::to_string(h.size);
}

inline std::string class_label(const ConjClass& c) {
  std::string l = "order=" + std::to_string(c.representative.size);
  if (c.members.size() > 1) l += " x" + std::to_string(c.members.size());
  return l;
}

// A poset together with the node standing for the trivial subgroup and the
// nodes (if any) standing for the whole group, which breaking-point
// detection must exclude.
template <typename Node>
struct GroupPoset {
  Poset<Node> poset;
  std::size_t minimum_node = 0;
  std::vector<std::size_t> maximum_nodes;
};

namespace detail {

template <typename Node, typename SizeFn, typename LeqFn>
GroupPoset<Node> finish_group_poset(const GroupTable& g, std::vector<Node> nodes,
                                    std::vector<std::string> labels, SizeFn size_of,
                                    LeqFn leq) {
  GroupPoset<Node> r{build_poset(std::move(nodes), std::move(labels), leq), 0, {}};
  for (std::size_t i = 0; i < r.poset.size(); ++i) {
    if (size_of(r.poset.node(i)) == 1) r.minimum_node = i;
    if (size_of(r.poset.node(i)) == g.order()) r.maximum_nodes.push_back(i);
  }
  return r;
}

}  // namespace detail

// C(G): the poset of cyclic subgroups under inclusion.
inline GroupPoset<SubgroupSet> cyclic_subgroup_poset(const GroupTable& g) {
  auto nodes = cyclic_subgroups(g);
  std::vector<std::string> labels;
  for (const auto& h : nodes) labels.push_back(subgroup_label(h));
  return detail::finish_group_poset(
      g, std::move(nodes), std::move(labels),
      [](const SubgroupSet& h) { return h.size; },
      [](const SubgroupSet& a, const SubgroupSet& b) { return a.subset_of(b); });
}

// L(G): the lattice of all subgroups under inclusion.
inline GroupPoset<SubgroupSet> subgroup_lattice_poset(const GroupTable& g) {
  auto nodes = subgroup_lattice(g);
  std::vector<std::string> labels;
  for (const auto& h : nodes) labels.push_back(subgroup_label(h));
  return detail::finish_group_poset(
      g, std::move(nodes), std::move(labels),
      [](const SubgroupSet& h) { return h.size; },
      [](const SubgroupSet& a, const SubgroupSet& b) { return a.subset_of(b); });
}

// Cbar(G): conjugacy classes of cyclic subgroups, ordered by
// [H1] <= [H2] iff H1 lies inside some conjugate of H2. Antisymmetry of this
// relation is a real theorem (mutual class containment of equal-order
// subgroups forces equality) and is machine-checked by build_poset.
inline GroupPoset<ConjClass> conjugacy_classes_of_cyclic(const GroupTable& g) {
  auto cyclics = cyclic_subgroups(g);
  std::vector<ConjClass> classes;
  std::set<Bitset> assigned;
  for (const auto& h : cyclics) {
    if (assigned.count(h.members)) continue;
    ConjClass c;
    std::set<Bitset> orbit;
    for (Elem x = 0; x < g.order(); ++x) orbit.insert(conjugate_subgroup(g, h, x).members);
    for (const auto& mask : orbit) {
      SubgroupSet m;
      m.members = mask;
      m.size = h.size;
      c.members.push_back(std::move(m));
      assigned.insert(mask);
    }
    // cyclics is in canonical order, so the seed is the least mask
    c.representative = h;
    classes.push_back(std::move(c));
  }

  std::vector<std::string> labels;
  for (const auto& c : classes) labels.push_back(class_label(c));
  return detail::finish_group_poset(
      g, std::move(classes), std::move(labels),
      [](const ConjClass& c) { return c.representative.size; },
      [](const ConjClass& a, const ConjClass& b) {
        for (const auto& m : b.members)
          if (a.representative.subset_of(m)) return true;
        return false;
      });
}

}  // namespace cgt
