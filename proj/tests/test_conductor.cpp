// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "hcond/conductor.hpp"
#include "hcond/error.hpp"

using namespace hcond;
using namespace hcond::testing;

namespace {

ClusterTree tree_of(const RootsInstance& inst) { return build_cluster_tree(build_matrix(inst)); }

void check_report(const Report& r, std::int64_t nu, std::int64_t artin, std::int64_t n_x, std::int64_t f,
                  bool equality, bool minimal) {
  CHECK(r.nu_df == nu);
  CHECK(r.artin_direct == artin);
  CHECK(r.artin_local == artin);
  CHECK(r.n_X == n_x);
  CHECK(r.f_tilde == f);
  CHECK(r.inequality_holds);
  CHECK(r.equality_holds == equality);
  CHECK(r.x_minimal == minimal);
  CHECK(r.component_bound_ok);
}

}  // namespace

TEST_CASE("local terms on fixture B") {
  const ClusterTree t = tree_of(fixture_b());
  CHECK(local_D(t.root(), t) == 2);
  CHECK(local_D(t[1], t) == 4);
  CHECK(local_E(t.root(), t) == 4);
  CHECK(local_E(t[1], t) == -4);
  CHECK(local_Dp_closed(t[1], t) == 0);
  CHECK(local_Dpp(t[1], t) == 0);
  CHECK(local_Dpp(t.root(), t) == 6);
}

TEST_CASE("local terms on fixture A") {
  const ClusterTree t = tree_of(fixture_a());
  CHECK(local_D(t.root(), t) == 6);
  CHECK(local_E(t.root(), t) == 0);
  CHECK(local_Dpp(t.root(), t) == 6);
  for (int id = 1; id <= 3; ++id) {
    CHECK(local_D(t[id], t) == 0);
    CHECK(local_E(t[id], t) == 0);
  }
}

TEST_CASE("local D on fixture C") {
  const ClusterTree t = tree_of(fixture_c());
  CHECK(local_D(t.root(), t) == 2);
  CHECK(local_D(t[1], t) == 2);
  CHECK(local_D(t[2], t) == 0);
}

TEST_CASE("odd leaf of weight 2 loses two, its weight-3 parent gains two") {
  const ClusterTree t = tree_of(odd_chain());
  const VertexLedger top = compare_vertex(t[1], t);
  const VertexLedger leaf = compare_vertex(t[2], t);
  CHECK(leaf.Dpp == leaf.Dp - 2);
  CHECK(leaf.reason == EqualityReason::OddWt2);
  CHECK(top.L_count == 1);
  CHECK(top.Dpp == top.Dp + 2);
  CHECK(top.reason == EqualityReason::OddWt3NoEvenChildren);
  // Hand evaluation: D = 2, 3, 3 and E = 4, -3, -1.
  CHECK(compare_vertex(t.root(), t).D == 2);
  CHECK(top.D == 3);
  CHECK(leaf.D == 3);
  CHECK(compare_vertex(t.root(), t).E == 4);
  CHECK(top.E == -3);
  CHECK(leaf.E == -1);
}

TEST_CASE("equality reasons") {
  const ClusterTree a = tree_of(fixture_a());
  const VertexLedger ra = compare_vertex(a.root(), a);
  CHECK(ra.equality);
  CHECK(ra.reason == EqualityReason::EvenAllEvenChildrenWt2);
  CHECK(ra.d == 6);
  CHECK(ra.Dpp == 6);

  const ClusterTree b = tree_of(fixture_b());
  const VertexLedger rb = compare_vertex(b[1], b);
  CHECK(rb.equality);
  CHECK(rb.reason == EqualityReason::OddWt3NoEvenChildren);
  CHECK(rb.d == 0);
  CHECK(rb.Dpp == 0);

  // Even child of weight 4: d - D'' = 4*3 - 2.
  const ClusterTree s = tree_of(strict_example());
  const VertexLedger rs = compare_vertex(s.root(), s);
  CHECK_FALSE(rs.equality);
  CHECK(rs.reason == EqualityReason::Strict);
  CHECK(rs.defect == 10);
}

TEST_CASE("analyze: fixtures") {
  check_report(analyze(fixture_a()).report, 6, 6, 5, 2, true, true);
  check_report(analyze(fixture_b()).report, 6, 6, 5, 2, true, true);
  check_report(analyze(fixture_c()).report, 4, 4, 4, 1, true, true);
  const Analysis g = analyze(good_reduction());
  check_report(g.report, 0, 0, 1, 0, true, true);
  CHECK(g.report.genus_check == 2);
  CHECK(g.report.euler_special_fiber == -2);
  check_report(analyze(odd_chain()).report, 8, 8, 7, 2, true, true);
}

TEST_CASE("analyze: strict and non-minimal instances") {
  const Report s = analyze(strict_example()).report;
  CHECK(s.nu_df == 14);
  CHECK(s.artin_direct == 4);
  CHECK_FALSE(s.equality_holds);
  CHECK(s.x_minimal);

  const Report n = analyze(nonminimal_example()).report;
  CHECK_FALSE(n.x_minimal);
  CHECK_FALSE(n.equality_holds);
  CHECK(n.nonminimal_vertices.size() == 1);
  CHECK(n.inequality_holds);
}

TEST_CASE("analyze: ledger sums") {
  for (const auto& inst : {fixture_a(), fixture_b(), fixture_c(), odd_chain(), strict_example(),
                           nonminimal_example()}) {
    const Report r = analyze(inst).report;
    std::int64_t e = 0, dp = 0, dpp = 0, d = 0;
    for (const auto& led : r.ledgers) {
      e += led.E;
      dp += led.Dp;
      dpp += led.Dpp;
      d += led.d;
      CHECK(led.Dp == led.D + led.E);
      CHECK(led.Dpp <= led.d);
    }
    CHECK(e == 0);
    CHECK(dp == dpp);
    CHECK(d == r.nu_df);
  }
}

TEST_CASE("analyze: matrix mode matches roots mode") {
  const Analysis from_roots = analyze(fixture_c());
  const Analysis from_matrix = analyze(build_matrix(fixture_c()));
  CHECK(from_matrix.report.artin_direct == from_roots.report.artin_direct);
  CHECK(from_matrix.report.nu_df == from_roots.report.nu_df);
  CHECK(from_matrix.report.n_X == from_roots.report.n_X);
}

TEST_CASE("analyze: small genus needs the flag and warns") {
  const auto four = roots(5, {"0", "5", "1", "2"});
  CHECK_THROWS_AS(analyze(four), Error);
  AnalyzeOptions opts;
  opts.allow_small_genus = true;
  const Report r = analyze(four, opts).report;
  CHECK(r.genus == 1);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("genus 1") != std::string::npos);
  opts.strict = true;
  try {
    analyze(four, opts);
    FAIL("expected StrictWarning");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StrictWarning);
    CHECK_FALSE(e.internal());
  }
}

TEST_CASE("analyze: all roots in one residue class") {
  const auto inst = roots(5, {"0", "5", "10", "15", "20", "30"});
  const Report r = analyze(inst).report;
  CHECK_FALSE(r.x_minimal);
  CHECK(r.nonminimal_vertices.empty());
  CHECK_FALSE(r.warnings.empty());
  AnalyzeOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(analyze(inst, strict), Error);
}

TEST_CASE("analyze: invalid input never reports as internal") {
  ValuationMatrix m = build_matrix(fixture_a());
  m.set(0, 1, ExtInt(3));
  try {
    analyze(m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UltrametricViolation);
    CHECK_FALSE(e.internal());
  }
}
