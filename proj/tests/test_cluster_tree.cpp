// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "hcond/cluster_tree.hpp"
#include "hcond/error.hpp"
#include "hcond/harness.hpp"

using namespace hcond;
using namespace hcond::testing;

namespace {

ClusterTree tree_of(const RootsInstance& inst) { return build_cluster_tree(build_matrix(inst)); }

void check_stats(const ClusterVertex& v, std::int64_t wt, Parity parity, std::int64_t lp, std::int64_t r,
                 std::int64_t s, std::int64_t l) {
  CAPTURE(v.id);
  CHECK(v.wt == wt);
  CHECK(v.parity == parity);
  CHECK(v.l_prime == lp);
  CHECK(v.r == r);
  CHECK(v.s == s);
  CHECK(v.l == l);
}

}  // namespace

TEST_CASE("fixture A: root with three weight-2 children") {
  const ClusterTree t = tree_of(fixture_a());
  REQUIRE(t.size() == 4);
  check_stats(t.root(), 6, Parity::Even, 0, 0, 3, 0);
  CHECK(t.root().depth == 0);
  CHECK(t.root().f_val == 0);
  const std::vector<std::vector<std::size_t>> members{{0, 3}, {1, 4}, {2, 5}};
  for (int id = 1; id <= 3; ++id) {
    check_stats(t[id], 2, Parity::Even, 2, 0, 0, 2);
    CHECK(t[id].depth == 1);
    CHECK(t[id].f_val == 2);
    CHECK(t[id].members == members[static_cast<std::size_t>(id - 1)]);
    CHECK(*t[id].parent == 0);
  }
}

TEST_CASE("fixture B: one odd child of weight 3") {
  const ClusterTree t = tree_of(fixture_b());
  REQUIRE(t.size() == 2);
  check_stats(t.root(), 6, Parity::Even, 3, 1, 0, 4);
  check_stats(t[1], 3, Parity::Odd, 3, 0, 0, 3);
  CHECK(t[1].f_val == 3);
  CHECK(t[1].members == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("fixture C: a two-step chain for the pair {0, 25}") {
  const ClusterTree t = tree_of(fixture_c());
  REQUIRE(t.size() == 3);
  // l = l' + r: the root separates four roots and has no odd-weight child.
  check_stats(t.root(), 6, Parity::Even, 4, 0, 1, 4);
  check_stats(t[1], 2, Parity::Even, 0, 0, 1, 0);
  check_stats(t[2], 2, Parity::Even, 2, 0, 0, 2);
  CHECK(t[1].depth == 1);
  CHECK(t[2].depth == 2);
  CHECK(*t[2].parent == 1);
  CHECK(t[1].members == t[2].members);
}

TEST_CASE("good reduction: a single root vertex") {
  const ClusterTree t = tree_of(good_reduction());
  REQUIRE(t.size() == 1);
  check_stats(t.root(), 6, Parity::Even, 6, 0, 0, 6);
}

TEST_CASE("local_d and the equation discriminant") {
  const ClusterTree a = tree_of(fixture_a());
  CHECK(local_d(a.root(), a) == 6);
  for (int id = 1; id <= 3; ++id) CHECK(local_d(a[id], a) == 0);
  CHECK(equation_discriminant(build_matrix(fixture_a())) == 6);

  const ClusterTree b = tree_of(fixture_b());
  CHECK(local_d(b.root(), b) == 6);
  CHECK(local_d(b[1], b) == 0);
  CHECK(equation_discriminant(build_matrix(fixture_b())) == 6);

  CHECK(equation_discriminant(build_matrix(good_reduction())) == 0);
  CHECK(equation_discriminant(build_matrix(fixture_c())) == 4);
}

TEST_CASE("odd parent forces odd children of even weight") {
  const ClusterTree t = tree_of(odd_chain());
  REQUIRE(t.size() == 3);
  check_stats(t[1], 3, Parity::Odd, 1, 0, 1, 1);
  check_stats(t[2], 2, Parity::Odd, 2, 0, 0, 2);
  CHECK(t[2].f_val == 5);
  CHECK(t.parent_odd(2));
  CHECK(t.separating_roots(1) == std::vector<std::size_t>{1});
}

TEST_CASE("ids follow depth, then smallest member") {
  const ClusterTree t = tree_of(nonminimal_example());
  for (std::size_t k = 1; k < t.size(); ++k) {
    const auto& a = t.vertices[k - 1];
    const auto& b = t.vertices[k];
    CHECK((a.depth < b.depth || (a.depth == b.depth && a.members.front() < b.members.front())));
  }
}

TEST_CASE("non-ultrametric input is refused") {
  ValuationMatrix m = build_matrix(fixture_a());
  m.set(0, 1, ExtInt(3));
  try {
    build_cluster_tree(m);
    FAIL("expected UltrametricViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UltrametricViolation);
    CHECK(std::string(e.what()).find("triple (0,1,3)") != std::string::npos);
  }
}

TEST_CASE("invariant checker catches a corrupted annotation") {
  ClusterTree t = tree_of(fixture_b());
  CHECK_NOTHROW(check_tree_invariants(t));
  t.vertices[1].l_prime = 2;
  CHECK_THROWS_AS(check_tree_invariants(t), Error);
}

TEST_CASE("both naive refinements reproduce the fixture trees") {
  for (const auto& inst : {fixture_a(), fixture_b(), fixture_c(), good_reduction(), odd_chain(),
                           strict_example(), nonminimal_example()}) {
    const ClusterTree t = tree_of(inst);
    std::string why;
    CHECK_MESSAGE(trees_isomorphic(naive_tree_oracle(build_matrix(inst)), t, &why), why);
    CHECK_MESSAGE(trees_isomorphic(naive_tree_from_roots(inst), t, &why), why);
  }
}
