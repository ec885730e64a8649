// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hcond/cluster_tree.hpp"
#include "hcond/model_graph.hpp"
#include "hcond/valuation.hpp"

namespace hcond {

std::int64_t local_D(const ClusterVertex& v, const ClusterTree& tree);
std::int64_t local_E(const ClusterVertex& v, const ClusterTree& tree);

// D' in closed form; must agree with local_D + local_E.
std::int64_t local_Dp_closed(const ClusterVertex& v, const ClusterTree& tree);

// Children of weight exactly 2 (only meaningful for odd v with wt > 2).
std::int64_t l_count(const ClusterVertex& v, const ClusterTree& tree);

std::int64_t local_Dpp(const ClusterVertex& v, const ClusterTree& tree);

enum class EqualityReason {
  EvenAllEvenChildrenWt2,
  OddWt2,
  OddWt3NoEvenChildren,
  Strict,
};

// EVEN_ALL_EVEN_CHILDREN_WT2 and friends.
const char* equality_reason_name(EqualityReason r);

struct VertexLedger {
  int id = 0;
  std::int64_t d = 0;
  std::int64_t D = 0;
  std::int64_t E = 0;
  std::int64_t Dp = 0;
  std::int64_t Dpp = 0;
  std::int64_t L_count = 0;
  bool equality = false;
  EqualityReason reason = EqualityReason::Strict;
  std::int64_t defect = 0;  // d - D''
};

// Throws InequalityViolated if D'' > d, InternalInvariant if the reason
// classification disagrees with the numbers.
VertexLedger compare_vertex(const ClusterVertex& v, const ClusterTree& tree);

struct Report {
  std::string label;
  std::int64_t genus = 0;
  std::size_t num_roots = 0;
  std::int64_t nu_df = 0;
  std::int64_t artin_local = 0;
  std::int64_t artin_direct = 0;
  std::int64_t n_X = 0;
  std::int64_t f_tilde = 0;
  std::int64_t euler_special_fiber = 0;
  std::int64_t genus_check = 0;
  std::int64_t cycle_rank = 0;
  bool inequality_holds = false;
  bool equality_holds = false;
  bool x_minimal = false;
  bool component_bound_ok = false;
  std::vector<int> nonminimal_vertices;
  std::vector<VertexLedger> ledgers;
  std::vector<std::string> warnings;
};

struct AnalyzeOptions {
  bool allow_small_genus = false;
  bool strict = false;
};

using Input = std::variant<RootsInstance, ValuationMatrix>;

struct Analysis {
  ValuationMatrix matrix;
  ClusterTree tree;
  YGraph y;
  XGraph x;
  std::vector<std::int64_t> self_int;
  Report report;
};

// Runs matrix -> T_B -> T_Y -> T_X, checks every identity along the way and
// fills the report. Invalid input throws an Error with a non-internal code;
// a failed identity throws one with an internal code.
Analysis analyze(const Input& input, const AnalyzeOptions& opts = {}, std::string label = {});

}  // namespace hcond
