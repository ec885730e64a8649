// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "hcond/harness.hpp"

using namespace hcond;
using namespace hcond::testing;

TEST_CASE("generator is deterministic in its spec") {
  const GenSpec spec{42, 7, 4, 3, 0.5};
  const RootsInstance a = gen_instance(spec);
  const RootsInstance b = gen_instance(spec);
  CHECK(a.p == 7);
  CHECK(a.roots == b.roots);
  CHECK(a.roots.size() == 10);
  GenSpec other = spec;
  other.seed = 43;
  CHECK_FALSE(gen_instance(other).roots == a.roots);
}

TEST_CASE("generated roots are distinct and integral") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RootsInstance inst = gen_instance({seed, 5, 3, 4, 0.7});
    CHECK_NOTHROW(validate_roots_instance(inst, false));
    CHECK_NOTHROW(build_matrix(inst));
  }
}

TEST_CASE("depth 0 gives good reduction when the classes can hold the roots") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RootsInstance inst = gen_instance({seed, 7, 2, 0, 0.9});
    CHECK(equation_discriminant(build_matrix(inst)) == 0);
    CHECK(disc_oracle(inst) == 0);
  }
}

TEST_CASE("disc_oracle on the fixtures") {
  CHECK(disc_oracle(fixture_a()) == 6);
  CHECK(disc_oracle(fixture_b()) == 6);
  CHECK(disc_oracle(fixture_c()) == 4);
  CHECK(disc_oracle(good_reduction()) == 0);
  CHECK(disc_oracle(odd_chain()) == 8);
  CHECK(disc_oracle(strict_example()) == 14);
}

TEST_CASE("trees_isomorphic notices a different tree") {
  const ClusterTree a = build_cluster_tree(build_matrix(fixture_a()));
  const ClusterTree b = build_cluster_tree(build_matrix(fixture_b()));
  std::string why;
  CHECK_FALSE(trees_isomorphic(a, b, &why));
  CHECK_FALSE(why.empty());
  CHECK(trees_isomorphic(a, a));
}

TEST_CASE("identity suite") {
  SuiteOptions opts;
  opts.trials = 200;
  opts.seed = 7;
  const SuiteStats s = run_suite(opts);
  for (const auto& f : s.failures) MESSAGE(f);
  CHECK(s.ok());
  CHECK(s.trials == 200);
  CHECK(s.strict_instances > 0);
  CHECK(s.equality_instances > 0);
  CHECK(s.odd_vertices > 0);
  CHECK(s.chain_inserts > 0);
  CHECK(s.mutations_flagged + s.mutations_still_ultrametric == 200);
  CHECK(s.mutations_flagged > 0);

  const auto j = nlohmann::json::parse(suite_summary_json(s));
  CHECK(j["trials"] == 200);
  CHECK(j["passed"] == 200);
}
