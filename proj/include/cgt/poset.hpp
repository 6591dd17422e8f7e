#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgt/bitset.hpp"
#include "cgt/errors.hpp"

namespace cgt {

// A finite poset over arbitrary node payloads. The relation is stored as one
// upward mask per node (row i = every j with i <= j) and is machine-checked
// to be reflexive, antisymmetric and transitive at construction; there is no
// way to hold an unvalidated Poset.
template <typename Node>
class Poset {
 public:
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  // i <= j in the poset order.
  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }

  template <typename N, typename LeqFn>
  friend Poset<N> build_poset(std::vector<N> nodes, std::vector<std::string> labels,
                              LeqFn leq);

 private:
  Poset() = default;
  std::vector<Node> nodes_;
  std::vector<std::string> labels_;
  std::vector<Bitset> up_;
};

// Evaluates the containment test on every ordered pair and validates the
// three partial-order axioms, failing loudly with a witness triple.
template <typename Node, typename LeqFn>
Poset<Node> build_poset(std::vector<Node> nodes, std::vector<std::string> labels,
                        LeqFn leq) {
  if (nodes.empty()) throw BadParameter("poset needs at least one node");
  if (labels.size() != nodes.size())
    throw BadParameter("poset has " + std::to_string(nodes.size()) + " nodes but " +
                       std::to_string(labels.size()) + " labels");
  const std::size_t n = nodes.size();
  Poset<Node> p;
  p.nodes_ = std::move(nodes);
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(p.nodes_[i], p.nodes_[j])) p.up_[i].set(j);

  for (std::size_t i = 0; i < n; ++i)
    if (!p.up_[i].test(i)) throw NotAPartialOrder("reflexivity", i, i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        throw NotAPartialOrder("antisymmetry", i, j, i);
  // i <= j forces everything above j to lie above i
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.up_[i].test(j) && !p.up_[j].is_subset_of(p.up_[i]))
        for (std::size_t k = 0; k < n; ++k)
          if (p.up_[j].test(k) && !p.up_[i].test(k))
            throw NotAPartialOrder("transitivity", i, j, k);
  return p;
}

enum class PosetKind { cyclic, lattice, classes };

inline const char* to_string(PosetKind k) {
  switch (k) {
    case PosetKind::cyclic: return "cyclic";
    case PosetKind::lattice: return "lattice";
    case PosetKind::classes: return "classes";
  }
  return "?";
}

struct BreakingReport {
  PosetKind poset_kind = PosetKind::cyclic;
  std::vector<std::pair<std::size_t, std::string>> breaking_nodes;  // id, label
  std::size_t count = 0;
};

// Every node comparable with all others, excluding the stated minimum node
// and maximum nodes. The exclusions are explicit because which nodes stand
// for the trivial subgroup and for the whole group depends on the poset:
// C(G) of a noncyclic G has no maximum at all, while for cyclic G the top
// node is G itself and is not a proper subgroup.
template <typename Node>
BreakingReport breaking_points(const Poset<Node>& p, PosetKind kind,
                               std::size_t minimum_node,
                               const std::vector<std::size_t>& maximum_nodes) {
  BreakingReport r;
  r.poset_kind = kind;
  for (std::size_t h = 0; h < p.size(); ++h) {
    if (h == minimum_node) continue;
    if (std::find(maximum_nodes.begin(), maximum_nodes.end(), h) != maximum_nodes.end())
      continue;
    bool comparable_with_all = true;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (!p.leq(x, h) && !p.leq(h, x)) {
        comparable_with_all = false;
        break;
      }
    if (comparable_with_all) r.breaking_nodes.emplace_back(h, p.label(h));
  }
  r.count = r.breaking_nodes.size();
  return r;
}

// Covering relation: (i, j) with i < j and nothing strictly between.
template <typename Node>
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset<Node>& p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) covering = false;
      if (covering) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// DOT output with deterministic node ids n0, n1, ... in poset node order;
// breaking points are drawn double-circled.
template <typename Node>
std::string to_dot(const Poset<Node>& p, const BreakingReport& breaking,
                   const std::string& graph_name = "poset") {
  std::vector<bool> is_breaking(p.size(), false);
  for (const auto& [id, label] : breaking.breaking_nodes) is_breaking[id] = true;
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + p.label(i) + "\"";
    if (is_breaking[i]) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& [lo, hi] : hasse_edges(p))
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace cgt
