// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>

#include "hcond/conductor.hpp"
#include "hcond/valuation.hpp"

namespace hcond::testing {

inline RootsInstance roots(long p, std::initializer_list<const char*> values) {
  RootsInstance inst;
  inst.p = p;
  for (const char* v : values) inst.roots.push_back(parse_rational(v));
  return inst;
}

inline RootsInstance fixture_a() { return roots(3, {"0", "1", "2", "3", "4", "5"}); }
inline RootsInstance fixture_b() { return roots(5, {"0", "5", "10", "1", "2", "3"}); }
inline RootsInstance fixture_c() { return roots(5, {"0", "25", "1", "2", "3", "4"}); }
inline RootsInstance good_reduction() { return roots(7, {"0", "1", "2", "3", "4", "5"}); }

// Odd-odd edge: {0,5,25} odd at depth 1, {0,25} odd leaf of weight 2 at depth 2.
inline RootsInstance odd_chain() { return roots(5, {"0", "5", "25", "1", "2", "3"}); }

// Even child of weight 4 under the root.
inline RootsInstance strict_example() { return roots(3, {"0", "3", "6", "9", "1", "2"}); }

// Odd vertex {0,9,18} at depth 1 with l' = 0 and a single even child.
inline RootsInstance nonminimal_example() { return roots(3, {"0", "9", "18", "1", "2", "4"}); }

// Independent of the library: count factors of p in an integer difference.
inline long naive_val(long a, long b, long p) {
  long d = a > b ? a - b : b - a;
  long k = 0;
  while (d % p == 0) {
    d /= p;
    ++k;
  }
  return k;
}

}  // namespace hcond::testing
