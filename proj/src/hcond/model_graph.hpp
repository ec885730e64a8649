// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcond/cluster_tree.hpp"

namespace hcond {

// ---------------------------------------------------------------------------
// Intermediate model: the blow-up tree with one extra component inserted on
// every edge joining two odd components, and one leaf per (odd component,
// root) intersection.
// ---------------------------------------------------------------------------

enum class YKind { StrictTransform, ChainInsert, HorizontalLeaf };

const char* ykind_name(YKind k);

struct YVertex {
  int id = 0;
  YKind kind = YKind::StrictTransform;
  // StrictTransform: the cluster vertex. ChainInsert: the upper (parent-side)
  // cluster vertex of the subdivided edge. HorizontalLeaf: the odd cluster
  // vertex it hangs from. This is also the image in the blow-up tree.
  int cluster = 0;
  int lower_cluster = -1;   // ChainInsert only: child-side cluster vertex
  std::size_t root_index = 0;  // HorizontalLeaf only
  Parity parity = Parity::Even;
  std::vector<std::size_t> attached_roots;
  std::optional<int> parent;
  std::vector<int> children;
  std::int64_t odd_neighbors = 0;

  // Number of branch-locus curves meeting this component (even vertices).
  std::int64_t beta() const { return odd_neighbors + static_cast<std::int64_t>(attached_roots.size()); }
  bool odd() const { return parity == Parity::Odd; }
};

struct YGraph {
  std::vector<YVertex> vertices;  // root is id 0; ids [0, |T_B|) are strict transforms
  const YVertex& operator[](int id) const { return vertices[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return vertices.size(); }
};

YGraph build_ty(const ClusterTree& tree);

// Throws InternalInvariant on: adjacent odd vertices, odd beta at an even
// vertex, inserted vertices that are not even, misattached roots.
void check_ty_invariants(const YGraph& y, const ClusterTree& tree);

// ---------------------------------------------------------------------------
// Regular model: double cover of the intermediate model.
// ---------------------------------------------------------------------------

struct XComponent {
  int id = 0;
  int over = 0;         // YVertex id
  int sheet = 0;        // 0, or 1 for the second sheet over a split component
  int sheet_count = 1;  // 2 iff the cover splits over `over`
  int m = 1;            // multiplicity in the special fiber
  std::int64_t chi = 2;
  int cluster = 0;      // image in the blow-up tree
};

// `upper` lies over the parent-side Y vertex; the edge is directed upper -> lower.
struct XEdge {
  int upper = 0;
  int lower = 0;
  int weight = 1;  // intersection number
};

struct XGraph {
  std::vector<XComponent> components;
  std::vector<XEdge> edges;
  std::int64_t genus = 0;

  std::size_t size() const { return components.size(); }
  const XComponent& operator[](int id) const { return components[static_cast<std::size_t>(id)]; }
};

XGraph build_tx(const YGraph& y, std::int64_t genus);

// Sum_i [(1-m_i) chi_i + sum_{j != i} (m_j - 1) G_i.G_j] + sum_{i<j} G_i.G_j.
std::int64_t artin_direct(const XGraph& x);

// chi(X_s) = sum chi_i - sum_{i<j} G_i.G_j.
std::int64_t special_fiber_euler_characteristic(const XGraph& x);

// G_i^2 = -(sum_{j != i} m_j G_i.G_j) / m_i. Throws NonIntegralSelfIntersection.
std::vector<std::int64_t> self_intersections(const XGraph& x);

// Sum_i m_i (-chi_i - G_i^2); throws GenusMismatch unless it equals 2g - 2.
std::int64_t genus_check(const XGraph& x);

// Per-component local Deligne term
//   (1-m) chi + sum_{neighbors w} (m_w - 1) G.G_w + sum_{children w} G.G_w
// summed over the components lying over each blow-up-tree vertex.
std::vector<std::int64_t> deligne_by_cluster(const XGraph& x, std::size_t cluster_count);

// Odd vertices with l' = 0, an even parent and exactly one child, that child
// even: each yields a contractible (-1)-curve on the model.
std::vector<int> detect_nonminimal(const ClusterTree& tree);

// Components with chi = 2 and self-intersection -1.
std::vector<int> minus_one_curves(const XGraph& x);

// Cycle rank of the dual graph counted with intersection multiplicity.
std::int64_t cycle_rank(const XGraph& x);

}  // namespace hcond
