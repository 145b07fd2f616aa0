#ifndef GINPROP_FACTOR_THEOREM_HPP
#define GINPROP_FACTOR_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginprop/gcd.hpp"
#include "ginprop/gin.hpp"
#include "ginprop/subspace.hpp"

namespace ginprop {

/// Parameters of a monomial set of the form W^n x1^m with W = (x1, ..., xr):
/// the set {x1^m u : u a degree-n monomial in x1, ..., xr}.
struct GinShape {
  int s = 0;
  int r = 0;
  int n = 0;
  int m = 0;
  bool operator==(const GinShape&) const = default;
};

struct CommonFactor {
  Form p;      // normalized; the constant 1 when the forms are coprime
  int degree;  // deg p
};

/// Witness that V = W_n * p.
struct FactorCertificate {
  Form p;
  int factor_degree = 0;
  Subspace cofactor_space;  // W_n
  GinShape params;
  bool checked = false;     // V and W_n * p contain each other
};

// gcd of the echelon basis of V. Throws std::invalid_argument on the zero
// subspace.
CommonFactor common_factor(const Subspace& v);

// Echelonized span of {f / p : f in basis(V)}. Throws std::invalid_argument
// naming the first basis form that p does not divide.
Subspace divide_subspace(const Subspace& v, const Form& p);

// Echelonized span of {w * p : w in basis(W)}.
Subspace multiply_subspace(const Subspace& w, const Form& p);

// (r, n, m) such that `set` is exactly W^n x1^m, preferring the largest m.
// When n = 0 the set is {x1^m} for every r; r = s is reported.
std::optional<GinShape> detect_gin_shape(const MonomialSet& set);

enum class VerifyStatus { verified, not_applicable, inconclusive, violation };
std::string_view status_name(VerifyStatus status);

struct VerifyOutcome {
  VerifyStatus status = VerifyStatus::inconclusive;
  GinReport gin;
  std::optional<GinShape> shape;
  std::optional<CommonFactor> factor;
  std::optional<FactorCertificate> certificate;
  std::string message;
};

// Computes gin V (revlex); when it equals W^n x1^m with r >= 3 and m >= 1,
// extracts the common factor p and W_n = V / p and re-checks V = W_n p.
// A common factor of degree other than m is reported as a violation.
VerifyOutcome verify_main_theorem(const Subspace& v, const GinOptions& options = {});

struct PlantedInstance {
  Subspace v;
  Form p;  // normalized
  Subspace w_n;
  GinShape params;
};

// Random p in S_m and random W_n in S_n of dimension C(n + r - 1, r - 1);
// V = W_n * p. Requires s >= r >= 3, n >= 0, m >= 1. Deterministic in seed.
PlantedInstance make_instance(int s, int r, int n, int m, std::uint64_t seed, int bound);

struct ProbeReport {
  int expected_m = 0;
  int source_factor_degree = 0;
  // Common-factor degree of each sampled section V|_{h=0}; -1 when the
  // section is the zero subspace.
  std::vector<int> section_degrees;
  std::vector<Form> hyperplanes;
  std::vector<std::uint64_t> seeds;
  // Every section's factor degree is at least the source's.
  bool sections_respect_source = true;
  // V has no common factor of degree expected_m, yet every sampled section
  // has one.
  bool anomaly = false;
};

// Samples random linear forms h (integer coefficients in [-bound, bound]) and
// records the common-factor degree of V|_{h=0}. Requires s >= 2.
ProbeReport hyperplane_factor_probe(const Subspace& v, int expected_m, int trials,
                                    std::uint64_t seed, int bound = 100);

}  // namespace ginprop

#endif
