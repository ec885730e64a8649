// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hcond {

// Integer or +infinity. Valuation of zero is infinite; matrix entries off the
// diagonal are finite and nonnegative.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtInt infinity() {
    ExtInt r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Precondition: finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend constexpr bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
  friend constexpr bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }

  friend constexpr ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

constexpr ExtInt min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }

using BigInt = mpz_class;
using Rational = mpq_class;

// p-adic valuation; infinite iff q == 0.
ExtInt val(const Rational& q, const BigInt& p);
ExtInt val(const BigInt& z, const BigInt& p);

// Accepts "[-]digits" or "[-]digits/digits" (nonzero denominator). Returns
// the canonical rational; throws Error(MalformedFile) otherwise.
Rational parse_rational(std::string_view text);

// Roots-mode input: f(x) = prod (x - b_i) over a base with uniformizer p.
struct RootsInstance {
  BigInt p;
  std::vector<Rational> roots;
};

// Checks p prime and odd, root count even and >= 6 (>= 2 with
// allow_small_genus), every root integral. Duplicates are caught by
// build_matrix.
void validate_roots_instance(const RootsInstance& inst, bool allow_small_genus);

class ValuationMatrix {
 public:
  ValuationMatrix() = default;
  explicit ValuationMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  const ExtInt& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  // Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, ExtInt v);

  friend bool operator==(const ValuationMatrix&, const ValuationMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtInt> m_;
};

// m[i][j] = val(b_i - b_j). Throws DuplicateRoots naming the first pair of
// equal roots.
ValuationMatrix build_matrix(const RootsInstance& inst);

// Structural gate for hand-written matrices: infinite diagonal, finite
// nonnegative symmetric off-diagonal entries, even size >= 6 (>= 2 with
// allow_small_genus). Throws MalformedMatrix / OddRootCount / TooFewRoots.
void validate_matrix_shape(const ValuationMatrix& m, bool allow_small_genus);

struct UltrametricVerdict {
  // Sorted triples i < j < k whose three pairwise valuations do not have the
  // two smallest equal.
  std::vector<std::array<std::size_t, 3>> violations;
  bool ok() const { return violations.empty(); }
};

UltrametricVerdict validate_ultrametric(const ValuationMatrix& m);

// Largest finite off-diagonal entry (0 for n < 2).
std::int64_t max_entry(const ValuationMatrix& m);

}  // namespace hcond
