#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "cgt/catalog.hpp"
#include "cgt/group.hpp"
#include "cgt/permutation.hpp"
#include "cgt/subgroup_posets.hpp"

using namespace cgt;

namespace {

std::size_t index_of(const std::vector<Permutation>& elems, const Permutation& p) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == p) return i;
  FAIL("permutation not found among elements");
  return 0;
}

std::vector<unsigned> order_multiset(const GroupTable& g, const SubgroupSet& h) {
  std::vector<unsigned> orders;
  for (std::size_t x : h.members.members()) orders.push_back(g.order_of(static_cast<Elem>(x)));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("closure of the empty generating set is the trivial group") {
  auto elems = closure_from_generators({}, 3);
  REQUIRE(elems.size() == 1);
  REQUIRE(elems[0] == Permutation::identity(3));
}

TEST_CASE("closure of a 3-cycle has order 3") {
  auto elems = closure_from_generators({Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
  REQUIRE(elems.size() == 3);
}

TEST_CASE("closure of a transposition and a 3-cycle is all of S_3") {
  auto elems = closure_from_generators(
      {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
  REQUIRE(elems.size() == 6);
  // independent oracle: enumerate every permutation of 3 points
  std::vector<std::uint32_t> images{0, 1, 2};
  do {
    Permutation p;
    p.images = images;
    REQUIRE(std::count(elems.begin(), elems.end(), p) == 1);
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST_CASE("closure error paths") {
  REQUIRE_THROWS_AS(closure_from_generators({}, 0), EmptyDomain);
  REQUIRE_THROWS_AS(
      closure_from_generators({Permutation::from_cycles(4, {{0, 1, 2, 3}})}, 4, 3),
      CapExceeded);
  REQUIRE_THROWS_AS(closure_from_generators({Permutation::identity(2)}, 3), BadParameter);
}

TEST_CASE("cayley table of a single transposition") {
  auto g = cayley_from_elements(
      closure_from_generators({Permutation::from_cycles(2, {{0, 1}})}, 2));
  REQUIRE(g.order() == 2);
  REQUIRE(g.order_of(1 - g.identity()) == 2);
}

TEST_CASE("cayley table of S_3 has the right order histogram") {
  auto g = cayley_from_elements(closure_from_generators(
      {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}, 3));
  std::vector<unsigned> hist(7, 0);
  for (Elem x = 0; x < g.order(); ++x) ++hist[g.order_of(x)];
  REQUIRE(hist[1] == 1);
  REQUIRE(hist[2] == 3);
  REQUIRE(hist[3] == 2);
}

TEST_CASE("cayley table of a 4-cycle closure has element orders 1,4,2,4") {
  auto g = cayley_from_elements(
      closure_from_generators({Permutation::from_cycles(4, {{0, 1, 2, 3}})}, 4));
  REQUIRE(g.order() == 4);
  // single-generator closure lists powers in exponent order
  REQUIRE(g.order_of(0) == 1);
  REQUIRE(g.order_of(1) == 4);
  REQUIRE(g.order_of(2) == 2);
  REQUIRE(g.order_of(3) == 4);
}

TEST_CASE("cayley rejects a list that is not closed") {
  std::vector<Permutation> elems{Permutation::identity(3),
                                 Permutation::from_cycles(3, {{0, 1, 2}})};
  REQUIRE_THROWS_AS(cayley_from_elements(elems), NotClosed);
}

TEST_CASE("element orders in Q_16") {
  auto g = make_generalized_quaternion(16);
  REQUIRE(element_order(g, g.identity()) == 1);
  std::size_t of8 = 0, of4 = 0, of2 = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.order_of(x) == 8) ++of8;
    if (g.order_of(x) == 4) ++of4;
    if (g.order_of(x) == 2) ++of2;
  }
  REQUIRE(of8 == 4);   // the generators of <a>
  REQUIRE(of4 == 10);  // a^2, a^6 and the eight elements outside <a>
  REQUIRE(of2 == 1);   // a^4 only
  REQUIRE_THROWS_AS(element_order(g, 16), IndexOutOfRange);
}

TEST_CASE("generated subgroup basics in Q_16") {
  auto g = make_generalized_quaternion(16);
  auto trivial = generated_subgroup(g, std::vector<std::size_t>{});
  REQUIRE(trivial.size == 1);
  REQUIRE(trivial.contains(g.identity()));

  Elem z = 0, a = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.order_of(x) == 2) z = x;
    if (g.order_of(x) == 8) a = x;
  }
  auto center = generated_subgroup(g, {z});
  REQUIRE(center.size == 2);

  Elem b = 0;
  auto achain = generated_subgroup(g, {a});
  for (Elem x = 0; x < g.order(); ++x)
    if (g.order_of(x) == 4 && !achain.contains(x)) b = x;
  REQUIRE(generated_subgroup(g, {a, b}).size == 16);

  REQUIRE_THROWS_AS(generated_subgroup(g, {99}), IndexOutOfRange);
}

TEST_CASE("generating from a subgroup's member set is idempotent") {
  for (const auto& entry : corpus(16)) {
    for (const auto& h : cyclic_subgroups(entry.group)) {
      auto again = generated_subgroup(entry.group, h.members.members());
      REQUIRE(again == h);
    }
  }
}

TEST_CASE("conjugating a transposition subgroup of S_3 by a 3-cycle") {
  auto elems = closure_from_generators(
      {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
  auto g = cayley_from_elements(elems);
  auto h01 = generated_subgroup(g, {index_of(elems, Permutation::from_cycles(3, {{0, 1}}))});
  auto h12 = generated_subgroup(g, {index_of(elems, Permutation::from_cycles(3, {{1, 2}}))});
  auto conj = conjugate_subgroup(g, h01, index_of(elems, Permutation::from_cycles(3, {{0, 1, 2}})));
  REQUIRE(conj == h12);
  REQUIRE(conjugate_subgroup(g, h01, g.identity()) == h01);
  REQUIRE_THROWS_AS(conjugate_subgroup(g, h01, 6), IndexOutOfRange);
}

TEST_CASE("conjugation is trivial in abelian groups") {
  auto g = make_abelian({2, 6});
  auto h = generated_subgroup(g, {3});
  for (Elem x = 0; x < g.order(); ++x) REQUIRE(conjugate_subgroup(g, h, x) == h);
}

TEST_CASE("conjugation preserves size and order multiset, and undoes itself") {
  for (const auto& entry : corpus(16)) {
    const auto& g = entry.group;
    for (const auto& h : subgroup_lattice(g)) {
      auto expected = order_multiset(g, h);
      for (Elem x = 0; x < g.order(); ++x) {
        auto conj = conjugate_subgroup(g, h, x);
        REQUIRE(conj.size == h.size);
        REQUIRE(order_multiset(g, conj) == expected);
        REQUIRE(conjugate_subgroup(g, conj, g.inverse(x)) == h);
      }
    }
  }
}

TEST_CASE("element order divides the group order across the corpus") {
  for (const auto& entry : corpus(32))
    for (Elem x = 0; x < entry.group.order(); ++x)
      REQUIRE(entry.group.order() % entry.group.order_of(x) == 0);
}

TEST_CASE("subgroups generated from random seeds satisfy the subgroup laws") {
  std::mt19937 rng(20240817);
  for (const auto& entry : corpus(24)) {
    const auto& g = entry.group;
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<std::size_t> seed;
      for (int i = 0; i < trial % 4; ++i) seed.push_back(pick(rng));
      auto h = generated_subgroup(g, seed);
      REQUIRE(h.contains(g.identity()));
      REQUIRE(g.order() % h.size == 0);  // Lagrange
      auto members = h.members.members();
      REQUIRE(members.size() == h.size);
      for (std::size_t x : members) {
        REQUIRE(h.contains(g.inverse(static_cast<Elem>(x))));
        for (std::size_t y : members)
          REQUIRE(h.contains(g.mul(static_cast<Elem>(x), static_cast<Elem>(y))));
      }
      for (std::size_t s : seed) REQUIRE(h.contains(s));
    }
  }
}

TEST_CASE("validate_table accepts catalog groups") {
  for (const auto& spec : {"Z_12", "D_16", "Q_32", "SD_16", "M_16", "S_4", "A_5"})
    REQUIRE(validate_table(make_group(spec)).ok());
}

TEST_CASE("validate_table reports a swapped entry") {
  std::vector<Elem> product(36);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) product[i * 6 + j] = static_cast<Elem>((i + j) % 6);
  std::swap(product[1 * 6 + 2], product[1 * 6 + 3]);
  GroupTable broken(6, product);
  auto v = validate_table(broken);
  REQUIRE_FALSE(v.ok());
  bool latin_or_assoc = false;
  for (const auto& msg : v.violations)
    if (msg.find("repeats") != std::string::npos ||
        msg.find("associativity") != std::string::npos)
      latin_or_assoc = true;
  REQUIRE(latin_or_assoc);
}

TEST_CASE("validate_table flags a Latin square that is not a group") {
  // x*y = (x - y) mod 5: Latin, but non-associative and no two-sided identity
  std::vector<Elem> product(25);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) product[i * 5 + j] = static_cast<Elem>((i + 5 - j) % 5);
  auto v = validate_table(GroupTable(5, product));
  REQUIRE_FALSE(v.ok());
}
