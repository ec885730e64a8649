// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcond/cluster_tree.hpp"
#include "hcond/valuation.hpp"

namespace hcond {

struct GenSpec {
  std::uint64_t seed = 0;
  int p = 3;
  int genus = 2;
  int max_depth = 3;             // deepest level a cluster may start below the root
  double branching_bias = 0.5;   // chance a root joins an existing residue class
};

// Same spec, same instance. Roots are distinct integers. With max_depth = 0
// the roots lie in distinct residue classes whenever 2g + 2 <= p; larger
// instances are pushed one level deeper, since p classes cannot hold them.
RootsInstance gen_instance(const GenSpec& spec);

// Recursive refinement on the matrix: split by connectivity of m >= 1,
// subtract one, recurse. Annotated independently of build_cluster_tree.
ClusterTree naive_tree_oracle(const ValuationMatrix& m);

// Residue refinement on the roots themselves: group by b mod p, replace
// each group by (b - c) / p, recurse.
ClusterTree naive_tree_from_roots(const RootsInstance& inst);

// val(prod_{i<j} (b_i - b_j)^2, p) by exact multiplication and repeated division.
std::int64_t disc_oracle(const RootsInstance& inst);

// Same vertex set keyed by (depth, members), same parent links, same annotations.
bool trees_isomorphic(const ClusterTree& a, const ClusterTree& b, std::string* why = nullptr);

struct SuiteOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<int> primes{3, 5, 7, 11, 13};
  int min_genus = 2;
  int max_genus = 6;
  int max_depth = 4;
};

struct SuiteStats {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::uint64_t strict_instances = 0;
  std::uint64_t equality_instances = 0;
  std::uint64_t nonminimal_instances = 0;
  std::uint64_t odd_vertices = 0;
  std::uint64_t chain_inserts = 0;
  std::uint64_t split_components = 0;
  std::uint64_t reason_counts[4] = {0, 0, 0, 0};
  std::uint64_t mutations_flagged = 0;
  std::uint64_t mutations_still_ultrametric = 0;
  std::uint64_t depth0_good_reduction = 0;
  double seconds = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && passed == trials; }
};

SuiteStats run_suite(const SuiteOptions& opts);

std::string suite_summary_json(const SuiteStats& s);

}  // namespace hcond
