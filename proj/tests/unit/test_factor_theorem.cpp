#include <doctest.h>

#include "ginprop/ci_demo.hpp"
#include "ginprop/factor_theorem.hpp"
#include "ginprop/gcd.hpp"
#include "helpers.hpp"

using namespace ginprop;
using testutil::F;
using testutil::mset;
using testutil::span;

TEST_CASE("common_factor examples") {
  auto coprime = common_factor(span({"x1^2", "x2^2"}, 3));
  CHECK(coprime.degree == 0);
  CHECK(coprime.p == Form::constant(3, 1));

  auto l = F("x1 + x2 + x3", 3);
  auto v = echelonize(std::vector<Form>{F("x1", 3) * l, F("x2", 3) * l, F("x3", 3) * l},
                      MonomialOrder::revlex);
  auto cf = common_factor(v);
  CHECK(cf.degree == 1);
  CHECK(cf.p == l);
  CHECK_THROWS_AS(common_factor(Subspace::zero(3, 2, MonomialOrder::revlex)), std::invalid_argument);
}

TEST_CASE("divide and multiply subspaces") {
  auto l = F("x1 - 2*x3", 3);
  auto w = span({"x1", "x2 + x3"}, 3);
  auto v = multiply_subspace(w, l);
  CHECK(v.degree() == 2);
  CHECK(divide_subspace(v, l) == w);

  try {
    divide_subspace(span({"x1^2", "x2^2"}, 3), F("x1", 3));
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x2^2") != std::string::npos);
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto ws = random_subspace(RingContext{3}, 2, 1 + static_cast<int>(seed % 6), seed, 20);
    SeededRng rng(seed);
    auto p = random_form(rng, 3, 1 + static_cast<int>(seed % 2), 20);
    if (p.is_zero()) continue;
    CHECK(divide_subspace(multiply_subspace(ws, p), p) == ws);
  }
}

TEST_CASE("detect_gin_shape") {
  auto a = detect_gin_shape(mset({"x1^2", "x1*x2", "x1*x3"}, 4, 2));
  REQUIRE(a);
  CHECK(*a == GinShape{4, 3, 1, 1});

  auto b = detect_gin_shape(mset({"x1^2", "x1*x2", "x2^2"}, 4, 2));
  REQUIRE(b);
  CHECK(*b == GinShape{4, 2, 2, 0});

  CHECK_FALSE(detect_gin_shape(mset({"x1*x2"}, 4, 2)));
  CHECK_FALSE(detect_gin_shape(MonomialSet(3, 2)));

  auto single = detect_gin_shape(mset({"x1^3"}, 3, 3));
  REQUIRE(single);
  CHECK(single->m == 3);
  CHECK(single->n == 0);

  // the full graded piece in three variables; maximal m is 0
  auto full = detect_gin_shape(all_monomials(3, 2));
  REQUIRE(full);
  CHECK(*full == GinShape{3, 3, 2, 0});

  // x1 * (x1, x2, x3)^2 in four variables
  MonomialSet w2x(4, 3);
  for (const auto& u : monomials_of_degree(3, 2)) w2x.insert(Exponent{u[0] + 1, u[1], u[2], 0});
  auto c = detect_gin_shape(w2x);
  REQUIRE(c);
  CHECK(*c == GinShape{4, 3, 2, 1});
}

TEST_CASE("make_instance") {
  auto inst = make_instance(4, 3, 1, 1, 5, 100);
  CHECK(inst.v.dim() == 3);
  CHECK(inst.w_n.dim() == 3);
  CHECK(inst.p.degree() == 1);
  CHECK(normalize_form(inst.p) == inst.p);
  CHECK(multiply_subspace(inst.w_n, inst.p) == inst.v);
  CHECK(inst.params == GinShape{4, 3, 1, 1});
  auto again = make_instance(4, 3, 1, 1, 5, 100);
  CHECK(again.v == inst.v);
  CHECK_THROWS_AS(make_instance(4, 2, 1, 1, 5, 100), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(3, 4, 1, 1, 5, 100), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(3, 3, 1, 0, 5, 100), std::invalid_argument);
}

TEST_CASE("common_factor recovers the planted factor") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = make_instance(3, 3, 2, 1, seed, 50);
    auto cf = common_factor(inst.v);
    CHECK(cf.degree == 1);
    CHECK(equal_up_to_scalar(cf.p, inst.p));
  }
}

TEST_CASE("verify_main_theorem on a planted instance") {
  auto inst = make_instance(4, 3, 1, 1, 2, 100);
  auto out = verify_main_theorem(inst.v, GinOptions{.seed = 2});
  CHECK(out.status == VerifyStatus::verified);
  REQUIRE(out.certificate);
  CHECK(out.certificate->factor_degree == 1);
  CHECK(out.certificate->checked);
  CHECK(equal_up_to_scalar(out.certificate->p, inst.p));
  CHECK(out.certificate->cofactor_space.dim() == inst.v.dim());
  CHECK(multiply_subspace(out.certificate->cofactor_space, out.certificate->p) == inst.v);
}

TEST_CASE("verify_main_theorem on generic quadrics is not applicable") {
  auto v = echelonize(random_quadrics(4, 100), MonomialOrder::revlex);
  auto out = verify_main_theorem(v, GinOptions{.seed = 3});
  CHECK(out.status == VerifyStatus::not_applicable);
  CHECK(out.gin.result == mset({"x1^2", "x1*x2", "x2^2"}, 4, 2));
  REQUIRE(out.shape);
  CHECK(out.shape->m == 0);
  CHECK(status_name(out.status) == "not-applicable");
}

TEST_CASE("verify_main_theorem with a full cofactor space") {
  auto p = F("x1^2 + x2*x3 - 3*x3^2", 3);
  auto v = multiply_subspace(full_graded_piece(3, 1, MonomialOrder::revlex), p);
  auto out = verify_main_theorem(v, GinOptions{.seed = 1});
  CHECK(out.status == VerifyStatus::verified);
  REQUIRE(out.certificate);
  CHECK(out.certificate->factor_degree == 2);
  CHECK(out.certificate->cofactor_space == full_graded_piece(3, 1, MonomialOrder::revlex));
  CHECK(out.certificate->params == GinShape{3, 3, 1, 2});
}

TEST_CASE("theorem property on a few draws") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto inst = make_instance(3, 3, 1, 1, 100 + seed, 100);
    auto out = verify_main_theorem(inst.v, GinOptions{.seed = seed});
    CHECK(out.status != VerifyStatus::violation);
    if (out.status == VerifyStatus::verified) {
      CHECK(out.certificate->factor_degree == 1);
      CHECK(equal_up_to_scalar(out.certificate->p, inst.p));
    }
  }
}

TEST_CASE("subspaces without a common factor never look like a planted gin") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto v = random_subspace(RingContext{3}, 2, 3, 500 + seed, 100);
    REQUIRE(common_factor(v).degree == 0);
    auto out = verify_main_theorem(v, GinOptions{.seed = seed});
    CHECK(out.status != VerifyStatus::verified);
    CHECK(out.status != VerifyStatus::violation);
    if (out.gin.stable && out.shape) CHECK(out.shape->m == 0);
  }
}

TEST_CASE("hyperplane_factor_probe") {
  auto inst = make_instance(4, 3, 1, 1, 6, 100);
  auto r = hyperplane_factor_probe(inst.v, 1, 10, 6);
  CHECK(r.section_degrees.size() == 10);
  CHECK(r.seeds.size() == 10);
  CHECK(r.source_factor_degree == 1);
  CHECK(r.sections_respect_source);
  CHECK_FALSE(r.anomaly);
  for (int d : r.section_degrees) CHECK(d >= 1);

  auto coprime = hyperplane_factor_probe(span({"x1^2", "x2^2"}, 3), 1, 10, 7);
  for (int d : coprime.section_degrees) CHECK(d == 0);
  CHECK_FALSE(coprime.anomaly);

  auto single = hyperplane_factor_probe(span({"x1*x2 + x3^2"}, 3), 1, 5, 8);
  for (int d : single.section_degrees) CHECK(d == 2);
  CHECK_FALSE(single.anomaly);

  auto vanishing = hyperplane_factor_probe(span({"x1"}, 2), 0, 3, 9);
  for (int d : vanishing.section_degrees) CHECK((d == -1 || d == 1));
  CHECK_THROWS_AS(hyperplane_factor_probe(span({"x1"}, 1), 0, 3, 9), std::invalid_argument);
}
