#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "cgt/catalog.hpp"
#include "cgt/poset.hpp"
#include "cgt/subgroup_posets.hpp"
#include "cgt/verify.hpp"

using namespace cgt;

namespace {

std::size_t divisor_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

Poset<int> chain(std::size_t k) {
  std::vector<int> nodes(k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    nodes[i] = static_cast<int>(i);
    labels[i] = "c" + std::to_string(i);
  }
  return build_poset(nodes, labels, [](int a, int b) { return a <= b; });
}

}  // namespace

TEST_CASE("cyclic subgroups of small groups") {
  REQUIRE(cyclic_subgroups(make_cyclic(1)).size() == 1);
  REQUIRE(cyclic_subgroups(make_generalized_quaternion(8)).size() == 5);
  REQUIRE(cyclic_subgroups(make_cyclic(12)).size() == divisor_count(12));
  for (std::size_t n = 1; n <= 40; ++n)
    REQUIRE(cyclic_subgroups(make_cyclic(n)).size() == divisor_count(n));
}

TEST_CASE("cyclic subgroup list contains the group itself exactly for cyclic groups") {
  auto has_whole = [](const GroupTable& g) {
    for (const auto& h : cyclic_subgroups(g))
      if (h.size == g.order()) return true;
    return false;
  };
  REQUIRE(has_whole(make_cyclic(12)));
  REQUIRE_FALSE(has_whole(make_symmetric(3)));
  REQUIRE_FALSE(has_whole(make_generalized_quaternion(16)));
}

TEST_CASE("subgroup lattices of small groups") {
  REQUIRE(subgroup_lattice(make_cyclic(7)).size() == 2);
  REQUIRE(subgroup_lattice(make_generalized_quaternion(8)).size() == 6);
  REQUIRE(subgroup_lattice(make_abelian({2, 2})).size() == 5);
  REQUIRE(subgroup_lattice(make_dihedral(8)).size() == 10);
  REQUIRE(subgroup_lattice(make_symmetric(4)).size() == 30);
}

TEST_CASE("minimal subgroups are the prime-order subgroups") {
  auto q16 = minimal_subgroups(make_generalized_quaternion(16));
  REQUIRE(q16.size() == 1);
  REQUIRE(q16[0].size == 2);

  auto d8 = minimal_subgroups(make_dihedral(8));
  REQUIRE(d8.size() == 5);
  for (const auto& h : d8) REQUIRE(h.size == 2);

  auto z15 = minimal_subgroups(make_cyclic(15));
  REQUIRE(z15.size() == 2);
  REQUIRE(z15[0].size == 3);
  REQUIRE(z15[1].size == 5);

  REQUIRE_THROWS_AS(minimal_subgroups(make_cyclic(1)), TrivialGroup);
}

TEST_CASE("build_poset validates the order axioms with witnesses") {
  auto single = build_poset(std::vector<int>{7}, {"n"}, [](int, int) { return true; });
  REQUIRE(single.size() == 1);
  REQUIRE(single.leq(0, 0));

  std::vector<int> nodes{0, 1, 2};
  std::vector<std::string> labels{"a", "b", "c"};
  REQUIRE_THROWS_AS(build_poset(nodes, labels, [](int, int) { return true; }),
                    NotAPartialOrder);
  REQUIRE_THROWS_AS(build_poset(nodes, labels, [](int a, int b) { return a != b; }),
                    NotAPartialOrder);
  // 0 <= 1 and 1 <= 2 without 0 <= 2
  try {
    build_poset(nodes, labels, [](int a, int b) {
      return a == b || (a == 0 && b == 1) || (a == 1 && b == 2);
    });
    FAIL("expected NotAPartialOrder");
  } catch (const NotAPartialOrder& e) {
    REQUIRE(e.axiom == "transitivity");
    REQUIRE(e.witness[0] == 0);
    REQUIRE(e.witness[1] == 1);
    REQUIRE(e.witness[2] == 2);
  }
}

TEST_CASE("the cyclic subgroups of Z_4 form a 3-chain") {
  auto gp = cyclic_subgroup_poset(make_cyclic(4));
  REQUIRE(gp.poset.size() == 3);
  std::size_t comparable = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (gp.poset.leq(i, j)) ++comparable;
  REQUIRE(comparable == 6);
}

TEST_CASE("conjugacy classes in an abelian group are singletons mirroring C(G)") {
  auto g = make_cyclic(12);
  auto c = cyclic_subgroup_poset(g);
  auto cbar = conjugacy_classes_of_cyclic(g);
  REQUIRE(cbar.poset.size() == c.poset.size());
  for (std::size_t i = 0; i < cbar.poset.size(); ++i) {
    REQUIRE(cbar.poset.node(i).members.size() == 1);
    REQUIRE(cbar.poset.node(i).representative == c.poset.node(i));
    for (std::size_t j = 0; j < cbar.poset.size(); ++j)
      REQUIRE(cbar.poset.leq(i, j) == c.poset.leq(i, j));
  }
}

TEST_CASE("conjugacy classes of cyclic subgroups of S_3") {
  auto cbar = conjugacy_classes_of_cyclic(make_symmetric(3));
  REQUIRE(cbar.poset.size() == 3);
  REQUIRE(cbar.poset.node(0).representative.size == 1);
  REQUIRE(cbar.poset.node(1).representative.size == 2);
  REQUIRE(cbar.poset.node(1).members.size() == 3);
  REQUIRE(cbar.poset.node(2).representative.size == 3);
  REQUIRE(cbar.poset.node(2).members.size() == 1);
  REQUIRE_FALSE(cbar.poset.leq(1, 2));
  REQUIRE_FALSE(cbar.poset.leq(2, 1));
}

TEST_CASE("in Q_16 the class of the order-2 subgroup sits below every class") {
  auto cbar = conjugacy_classes_of_cyclic(make_generalized_quaternion(16));
  std::size_t z = cbar.poset.size();
  for (std::size_t i = 0; i < cbar.poset.size(); ++i)
    if (cbar.poset.node(i).representative.size == 2) z = i;
  REQUIRE(z < cbar.poset.size());
  REQUIRE(cbar.poset.node(z).members.size() == 1);
  for (std::size_t j = 0; j < cbar.poset.size(); ++j)
    if (j != cbar.minimum_node) REQUIRE(cbar.poset.leq(z, j));
}

TEST_CASE("breaking points of C(G) for the paper's touchstone groups") {
  auto report = [](const GroupTable& g) {
    auto gp = cyclic_subgroup_poset(g);
    return breaking_points(gp.poset, PosetKind::cyclic, gp.minimum_node, gp.maximum_nodes);
  };

  auto q16 = report(make_generalized_quaternion(16));
  REQUIRE(q16.count == 1);
  REQUIRE(q16.breaking_nodes[0].second == "order=2");

  auto z8 = report(make_cyclic(8));
  REQUIRE(z8.count == 2);
  REQUIRE(z8.breaking_nodes[0].second == "order=2");
  REQUIRE(z8.breaking_nodes[1].second == "order=4");

  REQUIRE(report(make_symmetric(3)).count == 0);
  REQUIRE(report(make_cyclic(6)).count == 0);
  REQUIRE(report(make_cyclic(1)).count == 0);
  REQUIRE(report(make_cyclic(5)).count == 0);
}

TEST_CASE("breaking points of a k-chain are the k-2 interior nodes") {
  for (std::size_t k = 3; k <= 7; ++k) {
    auto p = chain(k);
    auto br = breaking_points(p, PosetKind::cyclic, 0, {k - 1});
    REQUIRE(br.count == k - 2);
  }
}

TEST_CASE("incomparable maximal nodes are never breaking points") {
  std::vector<int> nodes{0, 1, 2};
  auto p = build_poset(nodes, {"bot", "m1", "m2"},
                       [](int a, int b) { return a == b || a == 0; });
  auto br = breaking_points(p, PosetKind::cyclic, 0, {});
  REQUIRE(br.count == 0);
}

TEST_CASE("every breaking point of C(G) contains every minimal subgroup") {
  for (const auto& entry : corpus(16)) {
    if (entry.group.order() == 1) continue;
    auto gp = cyclic_subgroup_poset(entry.group);
    auto br = breaking_points(gp.poset, PosetKind::cyclic, gp.minimum_node,
                              gp.maximum_nodes);
    auto minimals = minimal_subgroups(entry.group);
    for (const auto& [id, label] : br.breaking_nodes)
      for (const auto& m : minimals) REQUIRE(m.subset_of(gp.poset.node(id)));
  }
}

TEST_CASE("a breaking point of C(G) stays a breaking point in Cbar(G)") {
  for (const auto& entry : corpus(32)) {
    auto gp = cyclic_subgroup_poset(entry.group);
    auto br = breaking_points(gp.poset, PosetKind::cyclic, gp.minimum_node,
                              gp.maximum_nodes);
    if (br.count == 0) continue;
    auto cbar = conjugacy_classes_of_cyclic(entry.group);
    auto cbar_br = breaking_points(cbar.poset, PosetKind::classes, cbar.minimum_node,
                                   cbar.maximum_nodes);
    for (const auto& [id, label] : br.breaking_nodes) {
      bool found = false;
      for (const auto& [cid, clabel] : cbar_br.breaking_nodes)
        for (const auto& m : cbar.poset.node(cid).members)
          if (m == gp.poset.node(id)) found = true;
      REQUIRE(found);
    }
  }
}

TEST_CASE("for abelian groups the breaking sets of C(G) and Cbar(G) correspond") {
  for (const auto& entry : corpus(32)) {
    if (!fingerprint(entry.group).abelian) continue;
    auto gp = cyclic_subgroup_poset(entry.group);
    auto br = breaking_points(gp.poset, PosetKind::cyclic, gp.minimum_node,
                              gp.maximum_nodes);
    auto cbar = conjugacy_classes_of_cyclic(entry.group);
    auto cbar_br = breaking_points(cbar.poset, PosetKind::classes, cbar.minimum_node,
                                   cbar.maximum_nodes);
    REQUIRE(br.count == cbar_br.count);
    for (std::size_t i = 0; i < br.count; ++i)
      REQUIRE(cbar.poset.node(cbar_br.breaking_nodes[i].first).representative ==
              gp.poset.node(br.breaking_nodes[i].first));
  }
}

TEST_CASE("hasse edges of small posets") {
  REQUIRE(hasse_edges(chain(3)).size() == 2);

  auto q8 = cyclic_subgroup_poset(make_generalized_quaternion(8));
  auto edges = hasse_edges(q8.poset);
  REQUIRE(edges.size() == 4);
  // bottom covers only the order-2 node, which covers the three order-4 nodes
  REQUIRE(edges[0] == std::make_pair(std::size_t{0}, std::size_t{1}));
  for (std::size_t i = 1; i < 4; ++i) REQUIRE(edges[i].first == 1);

  std::vector<int> nodes{0, 1, 2};
  auto antichain = build_poset(nodes, {"bot", "m1", "m2"},
                               [](int a, int b) { return a == b || a == 0; });
  REQUIRE(hasse_edges(antichain).size() == 2);
}

TEST_CASE("dot output is deterministic and double-circles breaking points") {
  auto g = make_generalized_quaternion(16);
  auto gp = cyclic_subgroup_poset(g);
  auto br = breaking_points(gp.poset, PosetKind::cyclic, gp.minimum_node,
                            gp.maximum_nodes);
  auto dot1 = to_dot(gp.poset, br);
  auto dot2 = to_dot(gp.poset, br);
  REQUIRE(dot1 == dot2);
  REQUIRE(dot1.rfind("digraph poset {", 0) == 0);
  REQUIRE(dot1.find("n1 [label=\"order=2\", peripheries=2];") != std::string::npos);
  std::size_t circled = 0;
  for (std::size_t pos = 0; (pos = dot1.find("peripheries=2", pos)) != std::string::npos;
       ++pos)
    ++circled;
  REQUIRE(circled == br.count);
}

TEST_CASE("all three posets construct and validate across the corpus") {
  for (const auto& entry : corpus(32)) {
    REQUIRE_NOTHROW(cyclic_subgroup_poset(entry.group));
    REQUIRE_NOTHROW(conjugacy_classes_of_cyclic(entry.group));
    if (entry.group.order() <= 16) REQUIRE_NOTHROW(subgroup_lattice_poset(entry.group));
  }
}

TEST_CASE("the lattice poset has the whole group as its top") {
  auto gp = subgroup_lattice_poset(make_symmetric(3));
  REQUIRE(gp.maximum_nodes.size() == 1);
  REQUIRE(gp.poset.node(gp.maximum_nodes[0]).size == 6);
  REQUIRE(gp.poset.node(gp.minimum_node).size == 1);
}
