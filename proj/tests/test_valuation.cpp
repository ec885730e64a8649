// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "hcond/error.hpp"
#include "hcond/valuation.hpp"

using namespace hcond;
using namespace hcond::testing;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInvariant;
}

ValuationMatrix small(std::int64_t a01, std::int64_t a12, std::int64_t a02) {
  ValuationMatrix m(3);
  m.set(0, 1, a01);
  m.set(1, 2, a12);
  m.set(0, 2, a02);
  return m;
}

}  // namespace

TEST_CASE("ExtInt orders infinity above every integer") {
  CHECK(ExtInt(5) < ExtInt::infinity());
  CHECK_FALSE(ExtInt::infinity() < ExtInt::infinity());
  CHECK(min(ExtInt::infinity(), ExtInt(3)) == ExtInt(3));
  CHECK((ExtInt(2) + ExtInt::infinity()).is_infinite());
  CHECK((ExtInt(2) + ExtInt(3)) == ExtInt(5));
  CHECK(ExtInt::infinity().to_string() == "inf");
}

TEST_CASE("val on integers and fractions") {
  CHECK(val(Rational(0), BigInt(5)).is_infinite());
  CHECK(val(Rational(25), BigInt(5)) == ExtInt(2));
  CHECK(val(parse_rational("24/5"), BigInt(3)) == ExtInt(1));
  CHECK(val(parse_rational("7/9"), BigInt(3)) == ExtInt(-2));
  CHECK(val(parse_rational("-81"), BigInt(3)) == ExtInt(4));
  CHECK(val(BigInt("1000000000000000000000000000000"), BigInt(5)) == ExtInt(30));
}

TEST_CASE("parse_rational accepts integers and fractions only") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("+12") == Rational(12));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::MalformedFile);
  CHECK(code_of([] { parse_rational("1.5"); }) == ErrorCode::MalformedFile);
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::MalformedFile);
  CHECK(code_of([] { parse_rational("3/"); }) == ErrorCode::MalformedFile);
}

TEST_CASE("build_matrix agrees with direct division on every pair") {
  struct Case {
    RootsInstance inst;
    long p;
    std::vector<long> ints;
  };
  const Case cases[] = {
      {fixture_a(), 3, {0, 1, 2, 3, 4, 5}},
      {fixture_b(), 5, {0, 5, 10, 1, 2, 3}},
      {good_reduction(), 7, {0, 1, 2, 3, 4, 5}},
  };
  for (const auto& c : cases) {
    const ValuationMatrix m = build_matrix(c.inst);
    for (std::size_t i = 0; i < c.ints.size(); ++i) {
      CHECK(m.at(i, i).is_infinite());
      for (std::size_t j = i + 1; j < c.ints.size(); ++j)
        CHECK(m.at(i, j) == ExtInt(naive_val(c.ints[i], c.ints[j], c.p)));
    }
  }
}

TEST_CASE("fixture A matrix has exactly three unit entries") {
  const ValuationMatrix m = build_matrix(fixture_a());
  int ones = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (m.at(i, j) == ExtInt(1)) ++ones;
  CHECK(ones == 3);
  CHECK(m.at(0, 3) == ExtInt(1));
  CHECK(m.at(1, 4) == ExtInt(1));
  CHECK(m.at(2, 5) == ExtInt(1));
}

TEST_CASE("build_matrix rejects duplicates") {
  const auto inst = roots(5, {"0", "1", "2", "3", "4", "2"});
  try {
    build_matrix(inst);
    FAIL("expected DuplicateRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateRoots);
    CHECK(std::string(e.what()).find("duplicate roots at indices 2 and 5") != std::string::npos);
  }
}

TEST_CASE("roots-mode validation gates") {
  CHECK(code_of([] { validate_roots_instance(roots(2, {"0", "1", "2", "3", "4", "5"}), false); }) ==
        ErrorCode::EvenResidueCharacteristic);
  CHECK(code_of([] { validate_roots_instance(roots(9, {"0", "1", "2", "3", "4", "5"}), false); }) ==
        ErrorCode::BadPrime);
  CHECK(code_of([] { validate_roots_instance(roots(1, {"0", "1", "2", "3", "4", "5"}), false); }) ==
        ErrorCode::BadPrime);
  CHECK(code_of([] { validate_roots_instance(roots(5, {"0", "1", "2", "3", "4"}), false); }) ==
        ErrorCode::OddRootCount);
  CHECK(code_of([] { validate_roots_instance(roots(5, {"0", "1", "2", "3"}), false); }) ==
        ErrorCode::TooFewRoots);
  CHECK(code_of([] { validate_roots_instance(roots(3, {"0", "1", "2", "3", "4", "1/3"}), false); }) ==
        ErrorCode::NonIntegralRoot);
  CHECK_NOTHROW(validate_roots_instance(roots(5, {"0", "1", "2", "3"}), true));
  // 1/2 is a 3-adic unit.
  CHECK_NOTHROW(validate_roots_instance(roots(3, {"0", "1", "2", "3", "4", "1/2"}), false));
}

TEST_CASE("validate_ultrametric") {
  CHECK(validate_ultrametric(build_matrix(fixture_a())).ok());
  CHECK(validate_ultrametric(build_matrix(fixture_c())).ok());

  const auto bad = validate_ultrametric(small(2, 2, 0));
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0] == std::array<std::size_t, 3>{0, 1, 2});

  CHECK(validate_ultrametric(small(1, 2, 1)).ok());
  CHECK_FALSE(validate_ultrametric(small(1, 2, 3)).ok());
}

TEST_CASE("matrix shape validation") {
  ValuationMatrix m = build_matrix(fixture_a());
  CHECK_NOTHROW(validate_matrix_shape(m, false));
  CHECK(code_of([] { validate_matrix_shape(ValuationMatrix(4), false); }) == ErrorCode::TooFewRoots);
  CHECK(code_of([] { validate_matrix_shape(ValuationMatrix(5), false); }) == ErrorCode::OddRootCount);
  m.set(0, 1, ExtInt(-1));
  CHECK(code_of([&] { validate_matrix_shape(m, false); }) == ErrorCode::MalformedMatrix);
  m.set(0, 1, ExtInt::infinity());
  CHECK(code_of([&] { validate_matrix_shape(m, false); }) == ErrorCode::MalformedMatrix);
}

TEST_CASE("scaling by a unit leaves the matrix unchanged") {
  for (long u : {2L, 4L, 7L, 11L, 101L}) {
    RootsInstance scaled = fixture_b();
    for (auto& b : scaled.roots) b *= u;
    CHECK(build_matrix(scaled) == build_matrix(fixture_b()));
  }
  RootsInstance by_p = fixture_b();
  for (auto& b : by_p.roots) b *= 5;
  CHECK_FALSE(build_matrix(by_p) == build_matrix(fixture_b()));
}

TEST_CASE("max_entry") {
  CHECK(max_entry(build_matrix(fixture_c())) == 2);
  CHECK(max_entry(build_matrix(good_reduction())) == 0);
}
