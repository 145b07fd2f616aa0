#include <doctest.h>

#include "gcd_oracle.hpp"
#include "ginprop/gcd.hpp"
#include "helpers.hpp"

using namespace ginprop;
using testutil::F;

namespace {

Form random_nonzero(SeededRng& rng, int s, int d, int bound) {
  for (;;) {
    auto f = random_form(rng, s, d, bound);
    if (!f.is_zero()) return f;
  }
}

// Sparse-ish random form: each monomial kept with probability about 1/2.
Form random_sparse(SeededRng& rng, int s, int d, int bound) {
  for (;;) {
    Form f(s, d);
    for (const auto& e : monomials_of_degree(s, d)) {
      if (rng.uniform(0, 1) == 0) f.add_term(e, rng.uniform(-bound, bound));
    }
    if (!f.is_zero()) return f;
  }
}

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gcd_forms(F("x1^2*x2", 2), F("x1*x2^2", 2)) == F("x1*x2", 2));
  CHECK(gcd_forms(F("x1^2 - x2^2", 2), F("x1^2 + 2*x1*x2 + x2^2", 2)) == F("x1 + x2", 2));
  CHECK(gcd_forms(F("-4*x1^2 + 6*x2^2", 2), Form(2, 5)) == F("2*x1^2 - 3*x2^2", 2));
  CHECK(gcd_forms(F("x1^2*x2 + x1*x2^2 + x1*x2*x3", 3), F("x1*x2*x3", 3)) == F("x1*x2", 3));
  CHECK(gcd_forms(F("x1^2", 2), F("x2^2", 2)) == Form::constant(2, 1));
  CHECK_THROWS_AS(gcd_forms(Form(2, 1), Form(2, 1)), std::invalid_argument);
}

TEST_CASE("normalization") {
  auto n = normalize_form(F("-1/2*x1*x3 + 3/4*x2^2", 3));
  // revlex-leading term is x2^2
  CHECK(n == F("3*x2^2 - 2*x1*x3", 3));
  CHECK(normalize_form(n) == n);
  CHECK(equal_up_to_scalar(F("x1 + 2*x2", 2), F("-3*x1 - 6*x2", 2)));
  CHECK_FALSE(equal_up_to_scalar(F("x1 + 2*x2", 2), F("x1 - 2*x2", 2)));
}

TEST_CASE("the linear-algebra oracle on known cases") {
  auto h = oracle::gcd_by_linear_algebra(F("x1^2 - x2^2", 2), F("x1^2 + 2*x1*x2 + x2^2", 2));
  REQUIRE(h);
  CHECK(oracle::proportional(*h, F("x1 + x2", 2)));
  auto one = oracle::gcd_by_linear_algebra(F("x1^2", 2), F("x2^3", 2));
  REQUIRE(one);
  CHECK(one->degree() == 0);
}

TEST_CASE("gcd agrees with the oracle on random pairs") {
  SeededRng rng(2024);
  for (int it = 0; it < 150; ++it) {
    const int s = static_cast<int>(rng.uniform(1, 3));
    const int dc = static_cast<int>(rng.uniform(0, 2));
    const int da = static_cast<int>(rng.uniform(0, 4 - dc));
    const int db = static_cast<int>(rng.uniform(0, 4 - dc));
    auto c = random_sparse(rng, s, dc, 3);
    auto f = c * random_sparse(rng, s, da, 3);
    auto g = c * random_sparse(rng, s, db, 3);
    auto expected = oracle::gcd_by_linear_algebra(f, g);
    REQUIRE(expected);
    auto got = gcd_forms(f, g);
    CHECK(oracle::proportional(got, *expected));
    CHECK(normalize_form(got) == got);
  }
}

TEST_CASE("gcd scales with a common multiplier") {
  SeededRng rng(7);
  for (int it = 0; it < 60; ++it) {
    const int s = static_cast<int>(rng.uniform(2, 3));
    auto f = random_nonzero(rng, s, static_cast<int>(rng.uniform(1, 2)), 4);
    auto g = random_nonzero(rng, s, static_cast<int>(rng.uniform(1, 2)), 4);
    auto c = random_nonzero(rng, s, static_cast<int>(rng.uniform(1, 2)), 4);
    CHECK(equal_up_to_scalar(gcd_forms(f * c, g * c), gcd_forms(f, g) * c));
    CHECK(gcd_forms(f, g) == gcd_forms(g, f));
  }
}

TEST_CASE("gcd of a form with itself and with a multiple") {
  SeededRng rng(8);
  for (int it = 0; it < 30; ++it) {
    auto f = random_nonzero(rng, 3, 2, 9);
    auto l = random_nonzero(rng, 3, 1, 9);
    CHECK(equal_up_to_scalar(gcd_forms(f, f), f));
    CHECK(equal_up_to_scalar(gcd_forms(f * l, f), f));
  }
}
