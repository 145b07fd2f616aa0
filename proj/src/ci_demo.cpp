#include "ginprop/ci_demo.hpp"

#include <array>

namespace ginprop {

namespace {

constexpr int kVars = 4;
constexpr int kTruncation = 4;

}  // namespace

MonomialIdeal ideal_j1() {
  return parse_ideal("x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^2, x3^4", kVars);
}

MonomialIdeal ideal_j2() {
  return parse_ideal("x1^2, x1*x2, x1*x3, x2^3, x2^2*x3, x2*x3^2, x3^4", kVars);
}

std::vector<long> ci_quadrics_hilbert() { return {1, 4, 7, 8}; }

std::vector<Form> random_quadrics(std::uint64_t seed, int bound) {
  SeededRng rng(seed);
  std::vector<Form> quadrics;
  for (int i = 0; i < 3; ++i) quadrics.push_back(random_form(rng, kVars, 2, bound));
  return quadrics;
}

namespace {

std::vector<long> ideal_dims(const std::vector<Form>& quadrics) {
  const auto pieces = ideal_graded_pieces(quadrics, kTruncation, MonomialOrder::revlex);
  return {static_cast<long>(pieces[2].dim()), static_cast<long>(pieces[3].dim()),
          static_cast<long>(pieces[4].dim())};
}

}  // namespace

bool has_ci_hilbert_pattern(const std::vector<Form>& quadrics) {
  return ideal_dims(quadrics) == std::vector<long>{3, 12, 27};
}

bool is_special_revlex_instance(const std::vector<Form>& quadrics) {
  if (!has_ci_hilbert_pattern(quadrics)) return false;
  return initial_ideal_truncated(quadrics, kTruncation, MonomialOrder::revlex) == ideal_j2();
}

std::optional<std::vector<Form>> find_special_revlex_instance() {
  // Leading parts x1*(x1, x2, x3). A tail is empty, one term, or two terms
  // over distinct monomials, coefficients in {-2, -1, 1, 2}. The third
  // quadric only gets monomials below x1x3 so its lead stays x1x3.
  const std::array<const char*, 7> pool = {"x2^2", "x2*x3", "x3^2", "x4^2",
                                           "x3*x4", "x2*x4", "x1*x4"};
  const std::array<int, 4> coefficients = {1, -1, 2, -2};

  auto build_tails = [&](std::size_t first_monomial, bool two_terms) {
    std::vector<Form> single;
    std::vector<std::size_t> owner;
    for (std::size_t i = first_monomial; i < pool.size(); ++i)
      for (int c : coefficients) {
        single.push_back(parse_form(pool[i], kVars) * Scalar(c));
        owner.push_back(i);
      }
    std::vector<Form> tails{Form(kVars, 2)};
    tails.insert(tails.end(), single.begin(), single.end());
    if (two_terms)
      for (std::size_t i = 0; i < single.size(); ++i)
        for (std::size_t j = i + 1; j < single.size(); ++j)
          if (owner[i] != owner[j]) tails.push_back(single[i] + single[j]);
    return tails;
  };
  const std::vector<Form> upper_tails = build_tails(0, true);
  const std::vector<Form> lower_tails = build_tails(1, false);

  const Form lead1 = parse_form("x1^2", kVars);
  const Form lead2 = parse_form("x1*x2", kVars);
  const Form lead3 = parse_form("x1*x3", kVars);
  for (const auto& t3 : lower_tails)
    for (const auto& t1 : upper_tails)
      for (const auto& t2 : upper_tails) {
        std::vector<Form> triple{lead1 + t1, lead2 + t2, lead3 + t3};
        if (is_special_revlex_instance(triple)) return triple;
      }
  return std::nullopt;
}

CiDemoReport ci_quadrics_demo(std::uint64_t seed, int trials, int bound) {
  CiDemoReport report;
  report.seed = seed;
  report.trials = trials;
  report.bound = bound;
  report.quadrics = random_quadrics(derive_seed(seed, 0), bound);

  report.ideal_dims = ideal_dims(report.quadrics);
  const bool ci = report.ideal_dims == std::vector<long>{3, 12, 27};
  report.steps.push_back({"(a) complete intersection", ci,
                          "dim I_2, I_3, I_4 = " + std::to_string(report.ideal_dims[0]) + ", " +
                              std::to_string(report.ideal_dims[1]) + ", " +
                              std::to_string(report.ideal_dims[2])});

  GinOptions options;
  options.trials = trials;
  options.bound = bound;
  options.seed = derive_seed(seed, 1);
  report.revlex_gin = gin_ideal_truncated(report.quadrics, kTruncation, options);
  report.gin_is_j1 = report.revlex_gin.stable && report.revlex_gin.result == ideal_j1();
  report.steps.push_back({"(b) revlex gin = J1", report.gin_is_j1,
                          format_ideal(report.revlex_gin.result) +
                              (report.revlex_gin.stable ? "" : " (unstable)")});

  report.mixed_initial =
      initial_ideal_truncated(report.quadrics, kTruncation, MonomialOrder::mixed_last_revlex);
  const bool mixed_is_j2 = report.mixed_initial == ideal_j2();
  report.steps.push_back({"(c) mixed-order initial ideal = J2", mixed_is_j2,
                          format_ideal(report.mixed_initial)});

  report.special_instance = find_special_revlex_instance();
  report.steps.push_back({"(d) special revlex instance with in(I) = J2",
                          report.special_instance.has_value(),
                          report.special_instance ? "found" : "no triple in search space"});

  report.candidates = enumerate_gin_candidates(kVars, ci_quadrics_hilbert(), kTruncation);
  const bool two_candidates = report.candidates.size() == 2 &&
                              report.candidates[0] == ideal_j1() &&
                              report.candidates[1] == ideal_j2();
  report.steps.push_back({"(e) candidates = {J1, J2}", two_candidates,
                          std::to_string(report.candidates.size()) + " candidate(s)"});


  report.passed = true;
  for (const auto& step : report.steps) report.passed = report.passed && step.passed;
  return report;
}

}  // namespace ginprop
