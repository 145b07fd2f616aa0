#include "ginprop/factor_theorem.hpp"

#include <stdexcept>

namespace ginprop {

namespace {
constexpr std::uint64_t kProbeStream = 2000;
}

CommonFactor common_factor(const Subspace& v) {
  if (v.dim() == 0) throw std::invalid_argument("common factor of the zero subspace");
  Form g = normalize_form(v.basis().front());
  for (std::size_t i = 1; i < v.basis().size() && g.degree() > 0; ++i)
    g = gcd_forms(g, v.basis()[i]);
  return CommonFactor{g, g.degree()};
}

Subspace divide_subspace(const Subspace& v, const Form& p) {
  if (p.num_vars() != v.num_vars()) throw std::invalid_argument("divisor lives in another ring");
  if (p.is_zero()) throw std::invalid_argument("division by the zero form");
  const int qdeg = v.degree() - p.degree();
  if (qdeg < 0) throw std::invalid_argument("divisor degree exceeds the subspace degree");
  std::vector<Form> quotients;
  for (const auto& f : v.basis()) {
    auto q = divide_exact(f, p);
    if (!q)
      throw std::invalid_argument("'" + format_form(p) + "' does not divide basis form '" +
                                  format_form(f) + "'");
    quotients.push_back(std::move(*q));
  }
  return echelonize(quotients, v.num_vars(), qdeg, v.order());
}

Subspace multiply_subspace(const Subspace& w, const Form& p) {
  std::vector<Form> products;
  for (const auto& f : w.basis()) products.push_back(f * p);
  return echelonize(products, w.num_vars(), w.degree() + p.degree(), w.order());
}

std::optional<GinShape> detect_gin_shape(const MonomialSet& set) {
  const int s = set.num_vars();
  const int degree = set.degree();
  if (set.empty() || s < 1) return std::nullopt;
  for (int m = degree; m >= 0; --m) {
    const int n = degree - m;
    const Exponent x1m = Exponent::unit(s, 0, m);
    bool divisible = true;
    int r = 1;
    for (const auto& e : set.members()) {
      if (!x1m.divides(e)) {
        divisible = false;
        break;
      }
      for (int i = s - 1; i >= 0; --i)
        if ((e - x1m)[i] > 0) {
          r = std::max(r, i + 1);
          break;
        }
    }
    if (!divisible) continue;
    if (n == 0) return GinShape{s, s, 0, m};
    if (static_cast<long>(set.size()) == count_monomials(r, n)) return GinShape{s, r, n, m};
  }
  return std::nullopt;
}

std::string_view status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::verified: return "verified";
    case VerifyStatus::not_applicable: return "not-applicable";
    case VerifyStatus::inconclusive: return "inconclusive";
    case VerifyStatus::violation: return "violation";
  }
  return "?";
}

VerifyOutcome verify_main_theorem(const Subspace& v, const GinOptions& options) {
  GinOptions revlex = options;
  revlex.order = MonomialOrder::revlex;
  VerifyOutcome out;
  out.gin = gin_subspace(v, revlex);
  if (!out.gin.stable) {
    out.status = VerifyStatus::inconclusive;
    out.message = "gin is unstable: " + std::to_string(out.gin.agreements) + " of " +
                  std::to_string(out.gin.trials) + " trials agree";
    return out;
  }
  out.shape = detect_gin_shape(out.gin.result);
  if (!out.shape) {
    out.status = VerifyStatus::not_applicable;
    out.message = "gin V is not of the form W^n x1^m";
    return out;
  }
  if (out.shape->r < 3 || out.shape->m < 1) {
    out.status = VerifyStatus::not_applicable;
    out.message = "gin V = W^n x1^m with r = " + std::to_string(out.shape->r) +
                  ", m = " + std::to_string(out.shape->m) + " (needs r >= 3 and m >= 1)";
    return out;
  }
  const int m = out.shape->m;
  out.factor = common_factor(v);
  if (out.factor->degree != m) {
    out.status = VerifyStatus::violation;
    out.message = "gin V = W^n x1^m with m = " + std::to_string(m) +
                  " but the common factor of V has degree " +
                  std::to_string(out.factor->degree);
    return out;
  }
  const Subspace source = with_order(v, MonomialOrder::revlex);
  Subspace w_n = divide_subspace(source, out.factor->p);
  const Subspace product = multiply_subspace(w_n, out.factor->p);
  const bool checked = is_subspace_of(source, product) && is_subspace_of(product, source) &&
                       w_n.dim() == source.dim();
  out.certificate = FactorCertificate{out.factor->p, m, std::move(w_n), *out.shape, checked};
  if (!checked) {
    out.status = VerifyStatus::violation;
    out.message = "V differs from W_n * p";
    return out;
  }
  out.status = VerifyStatus::verified;
  out.message = "V = W_n * p with deg p = " + std::to_string(m);
  return out;
}

PlantedInstance make_instance(int s, int r, int n, int m, std::uint64_t seed, int bound) {
  if (!(s >= r && r >= 3)) throw std::invalid_argument("need s >= r >= 3");
  if (n < 0) throw std::invalid_argument("need n >= 0");
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  SeededRng rng(derive_seed(seed, 0));
  Form p(s, m);
  while (p.is_zero()) p = random_form(rng, s, m, bound);
  p = normalize_form(p);
  const int dim = static_cast<int>(count_monomials(r, n));
  Subspace w_n = random_subspace(RingContext{s}, n, dim, derive_seed(seed, 1), bound);
  Subspace v = multiply_subspace(w_n, p);
  return PlantedInstance{std::move(v), std::move(p), std::move(w_n), GinShape{s, r, n, m}};
}

ProbeReport hyperplane_factor_probe(const Subspace& v, int expected_m, int trials,
                                    std::uint64_t seed, int bound) {
  if (v.num_vars() < 2) throw std::invalid_argument("probe needs at least two variables");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  ProbeReport report;
  report.expected_m = expected_m;
  report.source_factor_degree = common_factor(v).degree;
  bool all_reach_expected = true;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t sd = derive_seed(seed, kProbeStream + static_cast<std::uint64_t>(t));
    SeededRng rng(sd);
    Form h(v.num_vars(), 1);
    while (h.is_zero()) h = random_form(rng, v.num_vars(), 1, bound);
    const Subspace section = restrict_subspace(v, h);
    const int degree = section.dim() == 0 ? -1 : common_factor(section).degree;
    report.seeds.push_back(sd);
    report.hyperplanes.push_back(h);
    report.section_degrees.push_back(degree);
    if (degree >= 0 && degree < report.source_factor_degree)
      report.sections_respect_source = false;
    if (degree >= 0 && degree < expected_m) all_reach_expected = false;
  }
  report.anomaly =
      expected_m >= 1 && report.source_factor_degree < expected_m && all_reach_expected;
  return report;
}

}  // namespace ginprop
