#ifndef GINPROP_CI_DEMO_HPP
#define GINPROP_CI_DEMO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginprop/gin.hpp"
#include "ginprop/monomial_ideal.hpp"

namespace ginprop {

// The two Borel-fixed saturated ideals in k[x1..x4] with the Hilbert function
// of three general quadrics:
//   J1 = (x1^2, x1x2, x2^2, x1x3^2, x2x3^2, x3^4)
//   J2 = (x1^2, x1x2, x1x3, x2^3, x2^2x3, x2x3^2, x3^4)
MonomialIdeal ideal_j1();
MonomialIdeal ideal_j2();

// Quotient Hilbert function 1, 4, 7, 8, 8, ... of three quadrics forming a
// complete intersection in four variables.
std::vector<long> ci_quadrics_hilbert();

// Three quadrics in x1..x4 with integer coefficients in [-bound, bound].
std::vector<Form> random_quadrics(std::uint64_t seed, int bound);

// dim I_d = 3, 12, 27 for d = 2, 3, 4.
bool has_ci_hilbert_pattern(const std::vector<Form>& quadrics);

// Complete-intersection pattern and revlex in(I) truncated at degree 4 = J2.
bool is_special_revlex_instance(const std::vector<Form>& quadrics);

// Bounded search over quadric triples x1^2 + t1, x1x2 + t2, x1x3 + t3 with
// tails of at most two terms and coefficients in {-2..2}; returns the first
// triple in search order passing is_special_revlex_instance.
std::optional<std::vector<Form>> find_special_revlex_instance();

struct DemoStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CiDemoReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int bound = 0;
  std::vector<Form> quadrics;
  std::vector<long> ideal_dims;  // dim I_d for d = 2, 3, 4
  GinIdealReport revlex_gin;
  MonomialIdeal mixed_initial{4};
  std::optional<std::vector<Form>> special_instance;
  std::vector<MonomialIdeal> candidates;
  bool gin_is_j1 = false;
  std::vector<DemoStep> steps;
  bool passed = false;
};

CiDemoReport ci_quadrics_demo(std::uint64_t seed, int trials = 3, int bound = 100);

}  // namespace ginprop

#endif
