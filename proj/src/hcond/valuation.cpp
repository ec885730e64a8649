// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hcond/error.hpp"

namespace hcond {

std::string ExtInt::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

namespace {

std::int64_t remove_factor(const BigInt& z, const BigInt& p) {
  BigInt rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string describe(const Rational& q) { return q.get_str(); }

}  // namespace

ExtInt val(const BigInt& z, const BigInt& p) {
  if (z == 0) return ExtInt::infinity();
  return ExtInt(remove_factor(z, p));
}

ExtInt val(const Rational& q, const BigInt& p) {
  if (q == 0) return ExtInt::infinity();
  return ExtInt(remove_factor(q.get_num(), p) - remove_factor(q.get_den(), p));
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorCode::MalformedFile,
         "cannot parse root \"" + std::string(text) + "\": expected an integer or a fraction a/b");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    fail(ErrorCode::MalformedFile, "root \"" + std::string(text) + "\" has a zero denominator");
  }
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

void validate_roots_instance(const RootsInstance& inst, bool allow_small_genus) {
  if (inst.p == 2) {
    fail(ErrorCode::EvenResidueCharacteristic,
         "p = 2 is not supported: the residue characteristic must be odd");
  }
  if (inst.p < 2 || mpz_probab_prime_p(inst.p.get_mpz_t(), 40) == 0) {
    fail(ErrorCode::BadPrime, "p = " + inst.p.get_str() + " is not a prime");
  }
  const std::size_t n = inst.roots.size();
  if (n % 2 != 0) {
    fail(ErrorCode::OddRootCount, "root count " + std::to_string(n) +
                                      " is odd; f must have even degree 2g+2");
  }
  const std::size_t minimum = allow_small_genus ? 2 : 6;
  if (n < minimum) {
    fail(ErrorCode::TooFewRoots, "root count " + std::to_string(n) + " is below " +
                                     std::to_string(minimum) + " (genus must be at least " +
                                     (allow_small_genus ? "0" : "2") + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const ExtInt v = val(inst.roots[i], inst.p);
    if (v < ExtInt(0)) {
      fail(ErrorCode::NonIntegralRoot, "root " + std::to_string(i) + " (" +
                                           describe(inst.roots[i]) + ") is not integral at p = " +
                                           inst.p.get_str());
    }
  }
}

ValuationMatrix::ValuationMatrix(std::size_t n) : n_(n), m_(n * n, ExtInt(0)) {
  for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = ExtInt::infinity();
}

void ValuationMatrix::set(std::size_t i, std::size_t j, ExtInt v) {
  m_[i * n_ + j] = v;
  m_[j * n_ + i] = v;
}

ValuationMatrix build_matrix(const RootsInstance& inst) {
  const std::size_t n = inst.roots.size();
  ValuationMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const ExtInt v = val(Rational(inst.roots[i] - inst.roots[j]), inst.p);
      if (v.is_infinite()) {
        fail(ErrorCode::DuplicateRoots, "duplicate roots at indices " + std::to_string(i) +
                                            " and " + std::to_string(j) + " (value " +
                                            describe(inst.roots[i]) + ")");
      }
      m.set(i, j, v);
    }
  }
  return m;
}

void validate_matrix_shape(const ValuationMatrix& m, bool allow_small_genus) {
  const std::size_t n = m.size();
  if (n % 2 != 0) {
    fail(ErrorCode::OddRootCount,
         "matrix size " + std::to_string(n) + " is odd; f must have even degree 2g+2");
  }
  const std::size_t minimum = allow_small_genus ? 2 : 6;
  if (n < minimum) {
    fail(ErrorCode::TooFewRoots, "matrix size " + std::to_string(n) + " is below " +
                                     std::to_string(minimum));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m.at(i, i).is_finite()) {
      fail(ErrorCode::MalformedMatrix, "diagonal entry (" + std::to_string(i) + "," +
                                           std::to_string(i) + ") must be null");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const ExtInt& v = m.at(i, j);
      if (v.is_infinite() || v.value() < 0) {
        fail(ErrorCode::MalformedMatrix, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") must be a nonnegative integer");
      }
      if (!(v == m.at(j, i))) {
        fail(ErrorCode::MalformedMatrix, "matrix is not symmetric at (" + std::to_string(i) +
                                             "," + std::to_string(j) + ")");
      }
    }
  }
}

UltrametricVerdict validate_ultrametric(const ValuationMatrix& m) {
  UltrametricVerdict verdict;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<ExtInt, 3> v{m.at(i, j), m.at(j, k), m.at(i, k)};
        std::sort(v.begin(), v.end());
        if (!(v[0] == v[1])) verdict.violations.push_back({i, j, k});
      }
    }
  }
  return verdict;
}

std::int64_t max_entry(const ValuationMatrix& m) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m.at(i, j).is_finite()) best = std::max(best, m.at(i, j).value());
  return best;
}

}  // namespace hcond
