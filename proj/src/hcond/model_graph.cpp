// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/model_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hcond/error.hpp"

namespace hcond {

namespace {

[[noreturn]] void broken_y(const YVertex& v, const std::string& what) {
  fail(ErrorCode::InternalInvariant, std::string("T_Y vertex ") + std::to_string(v.id) + " (" +
                                         ykind_name(v.kind) + " of cluster " +
                                         std::to_string(v.cluster) + "): " + what);
}

[[noreturn]] void broken_x(const XComponent& c, const std::string& what) {
  fail(ErrorCode::InternalInvariant, "T_X component " + std::to_string(c.id) + " (over T_Y " +
                                         std::to_string(c.over) + ", sheet " +
                                         std::to_string(c.sheet) + "): " + what);
}

int add_y(YGraph& y, YKind kind, int cluster, int parent) {
  YVertex v;
  v.id = static_cast<int>(y.vertices.size());
  v.kind = kind;
  v.cluster = cluster;
  v.parent = parent;
  v.parity = Parity::Even;
  y.vertices.push_back(std::move(v));
  return y.vertices.back().id;
}

}  // namespace

const char* ykind_name(YKind k) {
  switch (k) {
    case YKind::StrictTransform: return "strict";
    case YKind::ChainInsert: return "chain";
    case YKind::HorizontalLeaf: return "leaf";
  }
  return "?";
}

YGraph build_ty(const ClusterTree& tree) {
  YGraph y;
  y.vertices.resize(tree.size());
  for (const auto& v : tree.vertices) {
    YVertex& s = y.vertices[static_cast<std::size_t>(v.id)];
    s.id = v.id;
    s.kind = YKind::StrictTransform;
    s.cluster = v.id;
    s.parity = v.parity;
    if (v.parent) s.parent = *v.parent;
  }
  // Odd-odd edges get one even component in between.
  for (const auto& v : tree.vertices) {
    for (int c : v.children) {
      const ClusterVertex& w = tree[c];
      if (v.odd() && w.odd()) {
        const int mid = add_y(y, YKind::ChainInsert, v.id, v.id);
        y.vertices[static_cast<std::size_t>(mid)].lower_cluster = w.id;
        y.vertices[static_cast<std::size_t>(w.id)].parent = mid;
      }
    }
  }
  // Roots meeting an odd component are moved onto their own even leaf.
  for (const auto& v : tree.vertices) {
    for (std::size_t idx : tree.separating_roots(v.id)) {
      if (v.odd()) {
        const int leaf = add_y(y, YKind::HorizontalLeaf, v.id, v.id);
        y.vertices[static_cast<std::size_t>(leaf)].root_index = idx;
        y.vertices[static_cast<std::size_t>(leaf)].attached_roots.push_back(idx);
      } else {
        y.vertices[static_cast<std::size_t>(v.id)].attached_roots.push_back(idx);
      }
    }
  }
  for (const auto& v : y.vertices)
    if (v.parent) y.vertices[static_cast<std::size_t>(*v.parent)].children.push_back(v.id);
  for (auto& v : y.vertices) {
    std::sort(v.children.begin(), v.children.end());
    v.odd_neighbors = 0;
    if (v.parent && y[*v.parent].odd()) ++v.odd_neighbors;
    for (int c : v.children)
      if (y[c].odd()) ++v.odd_neighbors;
  }
  return y;
}

void check_ty_invariants(const YGraph& y, const ClusterTree& tree) {
  std::size_t chains = 0;
  std::size_t leaves = 0;
  std::vector<int> attached(tree.num_roots, 0);
  for (const auto& v : y.vertices) {
    if (v.kind != YKind::StrictTransform && v.odd()) broken_y(v, "inserted vertex is odd");
    if (v.kind == YKind::StrictTransform && v.parity != tree[v.cluster].parity)
      broken_y(v, "strict transform changed parity");
    if (v.odd()) {
      if (v.parent && y[*v.parent].odd()) broken_y(v, "two odd components meet");
      if (!v.attached_roots.empty()) broken_y(v, "root attached to an odd component");
    } else if (v.beta() % 2 != 0) {
      broken_y(v, "even component meets the branch locus an odd number of times");
    }
    if (v.kind == YKind::ChainInsert) {
      ++chains;
      if (v.children.size() != 1 || v.odd_neighbors != 2) broken_y(v, "chain insert is not between two odd vertices");
    }
    if (v.kind == YKind::HorizontalLeaf) {
      ++leaves;
      if (!v.children.empty() || v.attached_roots.size() != 1 || v.odd_neighbors != 1)
        broken_y(v, "horizontal leaf shape");
    }
    if (v.kind == YKind::StrictTransform && !v.odd()) {
      const ClusterVertex& c = tree[v.cluster];
      if (v.beta() != c.l + (c.l % 2)) broken_y(v, "branch count != l + (l mod 2)");
    }
    for (std::size_t idx : v.attached_roots) ++attached.at(idx);
  }
  std::size_t odd_odd = 0;
  std::int64_t odd_lprime = 0;
  for (const auto& v : tree.vertices) {
    if (v.odd()) odd_lprime += v.l_prime;
    for (int c : v.children)
      if (v.odd() && tree[c].odd()) ++odd_odd;
  }
  if (chains != odd_odd)
    fail(ErrorCode::InternalInvariant, "T_Y: chain inserts do not match odd-odd edges");
  if (static_cast<std::int64_t>(leaves) != odd_lprime)
    fail(ErrorCode::InternalInvariant, "T_Y: horizontal leaves do not match odd l' total");
  for (std::size_t i = 0; i < attached.size(); ++i)
    if (attached[i] != 1)
      fail(ErrorCode::InternalInvariant, "T_Y: root " + std::to_string(i) + " attached " +
                                             std::to_string(attached[i]) + " times");
}

XGraph build_tx(const YGraph& y, std::int64_t genus) {
  XGraph x;
  x.genus = genus;
  std::vector<std::vector<int>> over(y.size());
  auto add = [&](const YVertex& v, int sheet, int sheets, int m, std::int64_t chi) {
    XComponent c;
    c.id = static_cast<int>(x.components.size());
    c.over = v.id;
    c.sheet = sheet;
    c.sheet_count = sheets;
    c.m = m;
    c.chi = chi;
    c.cluster = v.cluster;
    x.components.push_back(c);
    over[static_cast<std::size_t>(v.id)].push_back(c.id);
  };
  for (const auto& v : y.vertices) {
    if (v.odd()) {
      add(v, 0, 1, 2, 2);
    } else if (v.beta() == 0) {
      // Unramified over a rational curve: two disjoint rational sheets.
      add(v, 0, 2, 1, 2);
      add(v, 1, 2, 1, 2);
    } else {
      add(v, 0, 1, v.kind == YKind::ChainInsert ? 2 : 1, 4 - v.beta());
    }
  }
  for (const auto& v : y.vertices) {
    if (!v.parent) continue;
    const YVertex& up = y[*v.parent];
    const auto& a = over[static_cast<std::size_t>(up.id)];
    const auto& b = over[static_cast<std::size_t>(v.id)];
    if (up.odd() || v.odd()) {
      if (a.size() != 1 || b.size() != 1) broken_y(v, "cover split next to an odd component");
      x.edges.push_back({a[0], b[0], 1});
    } else if (a.size() == 1 && b.size() == 1) {
      x.edges.push_back({a[0], b[0], 2});
    } else if (a.size() == 1) {
      x.edges.push_back({a[0], b[0], 1});
      x.edges.push_back({a[0], b[1], 1});
    } else if (b.size() == 1) {
      x.edges.push_back({a[0], b[0], 1});
      x.edges.push_back({a[1], b[0], 1});
    } else {
      x.edges.push_back({a[0], b[0], 1});
      x.edges.push_back({a[1], b[1], 1});
    }
  }

  std::vector<std::vector<int>> adj(x.size());
  for (const auto& e : x.edges) {
    adj[static_cast<std::size_t>(e.upper)].push_back(e.lower);
    adj[static_cast<std::size_t>(e.lower)].push_back(e.upper);
  }
  std::vector<bool> seen(x.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    for (int n : adj[static_cast<std::size_t>(c)]) {
      if (!seen[static_cast<std::size_t>(n)]) {
        seen[static_cast<std::size_t>(n)] = true;
        ++reached;
        q.push(n);
      }
    }
  }
  if (reached != x.size()) {
    fail(ErrorCode::DisconnectedCover, "special fiber graph is disconnected (" +
                                           std::to_string(reached) + " of " +
                                           std::to_string(x.size()) + " components reachable)");
  }
  return x;
}

std::int64_t artin_direct(const XGraph& x) {
  std::int64_t total = 0;
  for (const auto& c : x.components) total += (1 - c.m) * c.chi;
  for (const auto& e : x.edges) {
    const int mu = x[e.upper].m;
    const int ml = x[e.lower].m;
    total += e.weight * ((mu - 1) + (ml - 1) + 1);
  }
  return total;
}

std::int64_t special_fiber_euler_characteristic(const XGraph& x) {
  std::int64_t chi = 0;
  for (const auto& c : x.components) chi += c.chi;
  for (const auto& e : x.edges) chi -= e.weight;
  return chi;
}

std::vector<std::int64_t> self_intersections(const XGraph& x) {
  std::vector<std::int64_t> weighted(x.size(), 0);
  for (const auto& e : x.edges) {
    weighted[static_cast<std::size_t>(e.upper)] += static_cast<std::int64_t>(x[e.lower].m) * e.weight;
    weighted[static_cast<std::size_t>(e.lower)] += static_cast<std::int64_t>(x[e.upper].m) * e.weight;
  }
  std::vector<std::int64_t> out(x.size());
  for (const auto& c : x.components) {
    const std::int64_t w = weighted[static_cast<std::size_t>(c.id)];
    if (w % c.m != 0) {
      fail(ErrorCode::NonIntegralSelfIntersection,
           "component " + std::to_string(c.id) + ": self-intersection -" + std::to_string(w) +
               "/" + std::to_string(c.m) + " is not an integer");
    }
    out[static_cast<std::size_t>(c.id)] = -w / c.m;
  }
  return out;
}

std::int64_t genus_check(const XGraph& x) {
  const auto self = self_intersections(x);
  std::int64_t total = 0;
  for (const auto& c : x.components) total += c.m * (-c.chi - self[static_cast<std::size_t>(c.id)]);
  if (total != 2 * x.genus - 2) {
    fail(ErrorCode::GenusMismatch, "adjunction gives 2g-2 = " + std::to_string(total) +
                                       ", expected " + std::to_string(2 * x.genus - 2));
  }
  return total;
}

std::vector<std::int64_t> deligne_by_cluster(const XGraph& x, std::size_t cluster_count) {
  std::vector<std::int64_t> per_component(x.size(), 0);
  for (const auto& c : x.components) per_component[static_cast<std::size_t>(c.id)] = (1 - c.m) * c.chi;
  for (const auto& e : x.edges) {
    per_component[static_cast<std::size_t>(e.upper)] += (x[e.lower].m - 1) * e.weight + e.weight;
    per_component[static_cast<std::size_t>(e.lower)] += (x[e.upper].m - 1) * e.weight;
  }
  std::vector<std::int64_t> out(cluster_count, 0);
  for (const auto& c : x.components) {
    if (c.cluster < 0 || static_cast<std::size_t>(c.cluster) >= cluster_count)
      broken_x(c, "cluster image out of range");
    out[static_cast<std::size_t>(c.cluster)] += per_component[static_cast<std::size_t>(c.id)];
  }
  return out;
}

std::vector<int> detect_nonminimal(const ClusterTree& tree) {
  std::vector<int> out;
  for (const auto& v : tree.vertices) {
    if (!v.odd() || v.l_prime != 0 || tree.parent_odd(v.id) || !v.parent) continue;
    if (v.children.size() == 1 && tree[v.children.front()].even()) out.push_back(v.id);
  }
  return out;
}

std::vector<int> minus_one_curves(const XGraph& x) {
  const auto self = self_intersections(x);
  std::vector<int> out;
  for (const auto& c : x.components)
    if (c.chi == 2 && self[static_cast<std::size_t>(c.id)] == -1) out.push_back(c.id);
  return out;
}

std::int64_t cycle_rank(const XGraph& x) {
  std::int64_t edges = 0;
  for (const auto& e : x.edges) edges += e.weight;
  return edges - static_cast<std::int64_t>(x.size()) + 1;
}

}  // namespace hcond
