// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcond/valuation.hpp"

namespace hcond {

enum class Parity { Even, Odd };

inline const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

// One component of the iterated blow-up's special fiber. A vertex at depth d
// is the disk of roots pairwise congruent modulo p^d.
struct ClusterVertex {
  int id = 0;
  std::int64_t depth = 0;
  std::vector<std::size_t> members;  // sorted root indices
  std::optional<int> parent;
  std::vector<int> children;  // ascending id

  std::int64_t wt = 0;       // |members|
  std::int64_t l_prime = 0;  // roots whose horizontal divisor meets this component
  std::int64_t r = 0;        // children of odd weight
  std::int64_t s = 0;        // children of even weight
  std::int64_t l = 0;        // l_prime + r
  std::int64_t f_val = 0;    // order of vanishing of f along the component
  Parity parity = Parity::Even;

  bool odd() const { return parity == Parity::Odd; }
  bool even() const { return parity == Parity::Even; }
  bool leaf() const { return children.empty(); }
};

struct ClusterTree {
  std::vector<ClusterVertex> vertices;  // index == id; root is id 0
  std::size_t num_roots = 0;

  const ClusterVertex& root() const { return vertices.front(); }
  const ClusterVertex& operator[](int id) const { return vertices[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return vertices.size(); }
  std::int64_t genus() const { return (static_cast<std::int64_t>(num_roots) - 2) / 2; }

  // Roots counted by l_prime(v): members of v lying in no child.
  std::vector<std::size_t> separating_roots(int id) const;
  bool parent_odd(int id) const;
};

// Depth slicing: one vertex per depth d >= 1 and per class of size >= 2 of
// the relation m[i][j] >= d. Requires a structurally valid ultrametric matrix
// (throws UltrametricViolation otherwise). Ids are ordered by
// (depth, smallest member).
ClusterTree build_cluster_tree(const ValuationMatrix& m);

// Checks every ClusterVertex/ClusterTree invariant; throws InternalInvariant.
void check_tree_invariants(const ClusterTree& tree);

// Sum over children w of wt_w (wt_w - 1).
std::int64_t local_d(const ClusterVertex& v, const ClusterTree& tree);

// 2 * sum_{i<j} m[i][j], the valuation of disc(f) as a degree-n polynomial.
std::int64_t equation_discriminant(const ValuationMatrix& m);

}  // namespace hcond
