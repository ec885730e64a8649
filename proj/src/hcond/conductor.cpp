// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/conductor.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hcond/error.hpp"

namespace hcond {

namespace {

constexpr std::int64_t kLargeValuation = 1000000;

void expect(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InternalInvariant, what);
}

std::string at_vertex(int id) { return "vertex " + std::to_string(id) + ": "; }

std::int64_t pairs(std::int64_t w) { return w * (w - 1); }

std::int64_t odd_children_sum(const ClusterVertex& v, const ClusterTree& tree,
                              std::int64_t (*term)(std::int64_t)) {
  std::int64_t total = 0;
  for (int c : v.children)
    if (tree[c].odd()) total += term(tree[c].wt);
  return total;
}

std::int64_t two_minus_pairs(std::int64_t w) { return 2 - pairs(w); }

}  // namespace

std::int64_t local_D(const ClusterVertex& v, const ClusterTree& tree) {
  std::int64_t D = 0;
  if (v.even()) {
    D = (v.l % 2) + 2 * v.r + 2 * v.s;
  } else {
    D = (tree.parent_odd(v.id) ? -1 : -2) - v.r + 3 * v.s + 2 * v.l;
  }
#ifdef HCOND_MUTATION
  if (!v.parent) D += 1;
#endif
  return D;
}

std::int64_t local_E(const ClusterVertex& v, const ClusterTree& tree) {
  const std::int64_t odd_sum = odd_children_sum(v, tree, two_minus_pairs);
  if (v.even()) return -(v.l % 2) - odd_sum;
  return v.r + v.s + (tree.parent_odd(v.id) ? 1 : 2) - pairs(v.wt) - odd_sum;
}

std::int64_t local_Dp_closed(const ClusterVertex& v, const ClusterTree& tree) {
  const std::int64_t odd_pairs = odd_children_sum(v, tree, pairs);
  if (v.even()) return 2 * v.s + odd_pairs;
  return 2 * (v.l + v.s) - pairs(v.wt) + odd_pairs;
}

std::int64_t l_count(const ClusterVertex& v, const ClusterTree& tree) {
  return std::count_if(v.children.begin(), v.children.end(),
                       [&](int c) { return tree[c].wt == 2; });
}

std::int64_t local_Dpp(const ClusterVertex& v, const ClusterTree& tree) {
  const std::int64_t Dp = local_D(v, tree) + local_E(v, tree);
  if (v.even()) return Dp;
  if (v.wt == 2) return v.leaf() ? Dp - 2 : Dp;
  return Dp + 2 * l_count(v, tree);
}

const char* equality_reason_name(EqualityReason r) {
  switch (r) {
    case EqualityReason::EvenAllEvenChildrenWt2: return "EVEN_ALL_EVEN_CHILDREN_WT2";
    case EqualityReason::OddWt2: return "ODD_WT2";
    case EqualityReason::OddWt3NoEvenChildren: return "ODD_WT3_NO_EVEN_CHILDREN";
    case EqualityReason::Strict: return "STRICT";
  }
  return "?";
}

VertexLedger compare_vertex(const ClusterVertex& v, const ClusterTree& tree) {
  VertexLedger led;
  led.id = v.id;
  led.d = local_d(v, tree);
  led.D = local_D(v, tree);
  led.E = local_E(v, tree);
  led.Dp = led.D + led.E;
  led.Dpp = local_Dpp(v, tree);
  led.L_count = v.odd() && v.wt > 2 ? l_count(v, tree) : 0;
  led.defect = led.d - led.Dpp;

  const std::int64_t closed = local_Dp_closed(v, tree);
  expect(led.Dp == closed, at_vertex(v.id) + "D + E = " + std::to_string(led.Dp) +
                               " but the closed form gives " + std::to_string(closed));
  const std::int64_t shift = led.Dpp - led.Dp;
  expect(shift == 0 || shift == -2 || shift == 2 * led.L_count,
         at_vertex(v.id) + "D'' - D' = " + std::to_string(shift) + " is not a permitted case");

  if (led.Dpp > led.d) {
    fail(ErrorCode::InequalityViolated, at_vertex(v.id) + "D'' = " + std::to_string(led.Dpp) +
                                            " exceeds d = " + std::to_string(led.d));
  }

  // An even child of an odd vertex has odd weight, and vice versa.
  bool all_even_children_wt2 = true;
  bool has_even_children = false;
  for (int c : v.children) {
    if (tree[c].even()) {
      has_even_children = true;
      if (tree[c].wt != 2) all_even_children_wt2 = false;
    }
  }
  if (v.even()) {
    led.reason = all_even_children_wt2 ? EqualityReason::EvenAllEvenChildrenWt2 : EqualityReason::Strict;
  } else if (v.wt == 2) {
    led.reason = EqualityReason::OddWt2;
  } else if (v.wt == 3 && !has_even_children) {
    led.reason = EqualityReason::OddWt3NoEvenChildren;
  } else {
    led.reason = EqualityReason::Strict;
  }
  led.equality = led.Dpp == led.d;
  expect(led.equality == (led.reason != EqualityReason::Strict),
         at_vertex(v.id) + "equality classification " + equality_reason_name(led.reason) +
             " disagrees with d - D'' = " + std::to_string(led.defect));
  return led;
}

namespace {

void check_components(const ClusterTree& tree, const YGraph& y, const XGraph& x) {
  std::vector<int> per_y(y.size(), 0);
  for (const auto& c : x.components) ++per_y[static_cast<std::size_t>(c.over)];
  for (const auto& v : y.vertices) {
    const int k = per_y[static_cast<std::size_t>(v.id)];
    const bool split = !v.odd() && v.beta() == 0;
    expect(k == (split ? 2 : 1), "T_Y vertex " + std::to_string(v.id) + " has " +
                                     std::to_string(k) + " components above it");
  }
  for (const auto& c : x.components) {
    const YVertex& v = y[c.over];
    const bool want_m2 = tree[c.cluster].odd() && v.kind != YKind::HorizontalLeaf;
    expect((c.m == 2) == want_m2, "component " + std::to_string(c.id) + ": multiplicity " +
                                      std::to_string(c.m) + " disagrees with its image parity");
    expect(c.chi % 2 == 0, "component " + std::to_string(c.id) + ": odd Euler characteristic");
  }
  for (const auto& e : x.edges) {
    expect(e.weight == 1 || e.weight == 2, "intersection number outside {1,2}");
    if (e.weight == 2) {
      const YVertex& a = y[x[e.upper].over];
      const YVertex& b = y[x[e.lower].over];
      expect(!a.odd() && !b.odd() && a.beta() > 0 && b.beta() > 0,
             "weight-2 intersection away from two unsplit even components");
    }
  }
  // Over an odd cluster vertex: one m=2 strict transform, s m=2 inserts, l' m=1 leaves.
  for (const auto& v : tree.vertices) {
    if (!v.odd()) continue;
    std::int64_t m2 = 0;
    std::int64_t m1 = 0;
    for (const auto& c : x.components) {
      if (c.cluster != v.id) continue;
      (c.m == 2 ? m2 : m1) += 1;
    }
    expect(m2 == 1 + v.s && m1 == v.l_prime,
           at_vertex(v.id) + "fiber over an odd vertex has the wrong shape");
  }
}

void check_global_identities(const ClusterTree& tree, const std::vector<VertexLedger>& ledgers) {
  std::int64_t first = 0;
  std::int64_t second = 0;
  std::int64_t third = 0;
  std::int64_t sum_E = 0;
  std::int64_t sum_Dp = 0;
  std::int64_t sum_Dpp = 0;
  std::int64_t odd_leaves_wt2 = 0;
  std::int64_t sum_L = 0;
  for (const auto& v : tree.vertices) {
    const std::int64_t odd_sum = odd_children_sum(v, tree, two_minus_pairs);
    if (v.even()) {
      first -= odd_sum;
      second -= v.l % 2;
    } else {
      first += 2 - pairs(v.wt) - odd_sum;
      second += v.r;
      third += v.s;
      if (tree.parent_odd(v.id)) third -= 1;
      if (v.leaf() && v.wt == 2) ++odd_leaves_wt2;
      if (v.wt > 2) sum_L += l_count(v, tree);
    }
    const VertexLedger& led = ledgers[static_cast<std::size_t>(v.id)];
    sum_E += led.E;
    sum_Dp += led.Dp;
    sum_Dpp += led.Dpp;
  }
  expect(first == 0, "odd-children identity sums to " + std::to_string(first));
  expect(second == 0, "l mod 2 / r identity sums to " + std::to_string(second));
  expect(third == 0, "odd-parent / s identity sums to " + std::to_string(third));
  expect(sum_E == 0, "sum of E is " + std::to_string(sum_E));
  expect(sum_Dpp == sum_Dp, "sum of D'' differs from sum of D'");
  expect(odd_leaves_wt2 == sum_L, "odd weight-2 leaves do not match the L_v total");
}

}  // namespace

Analysis analyze(const Input& input, const AnalyzeOptions& opts, std::string label) {
  Analysis a;
  Report& rep = a.report;
  rep.label = std::move(label);

  if (const auto* inst = std::get_if<RootsInstance>(&input)) {
    validate_roots_instance(*inst, opts.allow_small_genus);
    a.matrix = build_matrix(*inst);
  } else {
    a.matrix = std::get<ValuationMatrix>(input);
    validate_matrix_shape(a.matrix, opts.allow_small_genus);
  }
  rep.num_roots = a.matrix.size();
  rep.genus = (static_cast<std::int64_t>(rep.num_roots) - 2) / 2;

  if (rep.genus < 2) {
    rep.warnings.push_back("genus " + std::to_string(rep.genus) +
                           " is below 2; the conductor bound is only established for genus >= 2");
  }
  if (const std::int64_t big = max_entry(a.matrix); big > kLargeValuation) {
    rep.warnings.push_back("largest pairwise valuation " + std::to_string(big) +
                           " exceeds 10^6; check the input for typos");
  }
  if (opts.strict && !rep.warnings.empty()) fail(ErrorCode::StrictWarning, rep.warnings.front());

  a.tree = build_cluster_tree(a.matrix);
  const ClusterTree& tree = a.tree;

  rep.nu_df = equation_discriminant(a.matrix);
  std::int64_t sum_d = 0;
  for (const auto& v : tree.vertices) sum_d += local_d(v, tree);
  expect(sum_d == rep.nu_df, "sum of d(v) = " + std::to_string(sum_d) +
                                 " but the equation discriminant is " + std::to_string(rep.nu_df));

  a.y = build_ty(tree);
  check_ty_invariants(a.y, tree);
  a.x = build_tx(a.y, rep.genus);
  check_components(tree, a.y, a.x);

  a.self_int = self_intersections(a.x);
  rep.genus_check = genus_check(a.x);
  rep.artin_direct = artin_direct(a.x);
  rep.euler_special_fiber = special_fiber_euler_characteristic(a.x);
  rep.cycle_rank = cycle_rank(a.x);
  rep.n_X = static_cast<std::int64_t>(a.x.size());
  expect(rep.artin_direct >= 0, "direct Artin conductor is negative");
  expect(rep.artin_direct == 2 * rep.genus - 2 + rep.euler_special_fiber,
         "direct Artin conductor disagrees with 2g - 2 + chi(X_s)");
  const bool reduced = std::all_of(a.x.components.begin(), a.x.components.end(),
                                   [](const XComponent& c) { return c.m == 1; });
  if (reduced) {
    std::int64_t total_weight = 0;
    for (const auto& e : a.x.edges) total_weight += e.weight;
    expect(rep.artin_direct == total_weight, "reduced special fiber: conductor != total edge weight");
  }

  const auto by_cluster = deligne_by_cluster(a.x, tree.size());
  rep.ledgers.reserve(tree.size());
  for (const auto& v : tree.vertices) {
    rep.ledgers.push_back(compare_vertex(v, tree));
    const VertexLedger& led = rep.ledgers.back();
    expect(led.D == by_cluster[static_cast<std::size_t>(v.id)],
           at_vertex(v.id) + "D = " + std::to_string(led.D) + " but the model graph gives " +
               std::to_string(by_cluster[static_cast<std::size_t>(v.id)]));
    rep.artin_local += led.D;
  }
  expect(rep.artin_local == rep.artin_direct,
         "sum of D(v) = " + std::to_string(rep.artin_local) + " but the direct conductor is " +
             std::to_string(rep.artin_direct));
  check_global_identities(tree, rep.ledgers);

  rep.nonminimal_vertices = detect_nonminimal(tree);
  std::set<int> pattern(rep.nonminimal_vertices.begin(), rep.nonminimal_vertices.end());
  std::set<int> curves;
  for (int c : minus_one_curves(a.x)) curves.insert(a.x[c].cluster);
  // All roots in one residue class: the root blows up to a (-1)-curve that the
  // vertex pattern does not see, since the equation itself is not reduced.
  const ClusterVertex& root = tree.root();
  const bool single_class = root.l_prime == 0 && root.children.size() == 1;
  if (single_class) {
    rep.warnings.push_back("all roots are congruent modulo p: the equation is not minimal and the model has "
                           "(-1)-curves over the root");
    if (opts.strict) fail(ErrorCode::StrictWarning, rep.warnings.back());
  }
  std::set<int> unexplained = curves;
  for (int v : pattern) unexplained.erase(v);
  if (single_class) unexplained.erase(root.id);
  expect(unexplained.empty() && std::includes(curves.begin(), curves.end(), pattern.begin(), pattern.end()),
         "(-1)-curves on the model do not match the non-minimal pattern");
  rep.x_minimal = curves.empty();

  rep.inequality_holds = rep.artin_direct <= rep.nu_df;
  if (!rep.inequality_holds) {
    fail(ErrorCode::InequalityViolated, "conductor " + std::to_string(rep.artin_direct) +
                                            " exceeds the discriminant " + std::to_string(rep.nu_df));
  }
  rep.equality_holds = rep.artin_direct == rep.nu_df;
  const bool all_equal = std::all_of(rep.ledgers.begin(), rep.ledgers.end(),
                                     [](const VertexLedger& l) { return l.equality; });
  expect(rep.equality_holds == (all_equal && rep.x_minimal),
         "global equality disagrees with the per-vertex ledgers");

  rep.f_tilde = rep.artin_direct - rep.n_X + 1;
  rep.component_bound_ok = rep.f_tilde >= 0 && rep.n_X <= rep.nu_df + 1;
  expect(rep.component_bound_ok, "component count exceeds conductor + 1");
  return a;
}

}  // namespace hcond
