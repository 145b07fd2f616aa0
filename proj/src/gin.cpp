#include "ginprop/gin.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginprop {

namespace {
constexpr std::uint64_t kTrialStream = 100;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return derive_seed(seed, kTrialStream + static_cast<std::uint64_t>(trial));
}

CoordinateChange random_change(const RingContext& ring, std::uint64_t seed, int bound) {
  if (bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  const int s = ring.num_vars;
  SeededRng rng(seed);
  while (true) {
    std::vector<std::vector<Scalar>> m(s, std::vector<Scalar>(s));
    for (auto& row : m)
      for (auto& entry : row) entry = rng.uniform(-bound, bound);
    if (determinant(m) != 0) return CoordinateChange(std::move(m));
  }
}

namespace {

// Index of the majority value; ties go to the earliest value.
template <class T>
std::pair<std::size_t, int> majority(const std::vector<T>& outcomes) {
  std::size_t best = 0;
  int best_count = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const int count =
        static_cast<int>(std::count(outcomes.begin(), outcomes.end(), outcomes[i]));
    if (count > best_count) {
      best = i;
      best_count = count;
    }
  }
  return {best, best_count};
}

void check_trials(const GinOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (options.bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
}

}  // namespace

GinReport gin_subspace(const Subspace& v, const GinOptions& options) {
  check_trials(options);
  const Subspace source = with_order(v, options.order);
  std::vector<MonomialSet> outcomes;
  GinReport report{MonomialSet(v.num_vars(), v.degree()), options.trials, 0, {}, false};
  for (int t = 0; t < options.trials; ++t) {
    const std::uint64_t seed = trial_seed(options.seed, t);
    report.seeds.push_back(seed);
    const auto change = random_change(RingContext{v.num_vars()}, seed, options.bound);
    outcomes.push_back(initial_subspace(transform_subspace(source, change)));
  }
  const auto [index, count] = majority(outcomes);
  report.result = outcomes[index];
  report.agreements = count;
  report.stable = count == options.trials;
  return report;
}

std::vector<Subspace> ideal_graded_pieces(std::span<const Form> gens, int dmax,
                                          MonomialOrder order) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const int s = gens.front().num_vars();
  for (const auto& g : gens) {
    if (g.num_vars() != s) throw std::invalid_argument("generators live in different rings");
    if (g.degree() > dmax)
      throw std::invalid_argument("dmax is below a generator degree");
  }
  std::vector<Subspace> pieces;
  for (int d = 0; d <= dmax; ++d) {
    std::vector<Form> spanning;
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > d) continue;
      for (const auto& m : monomials_of_degree(s, d - g.degree()))
        spanning.push_back(Form::monomial(m) * g);
    }
    pieces.push_back(echelonize(spanning, s, d, order));
  }
  return pieces;
}

namespace {

MonomialIdeal ideal_from_pieces(int num_vars, const std::vector<Subspace>& pieces,
                                std::vector<MonomialSet>* per_degree) {
  std::vector<Exponent> gens;
  for (const auto& piece : pieces) {
    MonomialSet in = initial_subspace(piece);
    gens.insert(gens.end(), in.members().begin(), in.members().end());
    if (per_degree) per_degree->push_back(std::move(in));
  }
  return minimalize(num_vars, std::move(gens));
}

}  // namespace

MonomialIdeal initial_ideal_truncated(std::span<const Form> gens, int dmax,
                                      MonomialOrder order) {
  const auto pieces = ideal_graded_pieces(gens, dmax, order);
  return ideal_from_pieces(gens.front().num_vars(), pieces, nullptr);
}

GinIdealReport gin_ideal_truncated(std::span<const Form> gens, int dmax,
                                   const GinOptions& options) {
  check_trials(options);
  if (gens.empty()) throw std::invalid_argument("no generators");
  const int s = gens.front().num_vars();
  for (const auto& g : gens)
    if (g.degree() > dmax) throw std::invalid_argument("dmax is below a generator degree");

  std::vector<MonomialIdeal> outcomes;
  std::vector<std::vector<MonomialSet>> degree_outcomes;
  GinIdealReport report{MonomialIdeal(s), dmax, options.trials, 0, {}, false, {}, {}};
  for (int t = 0; t < options.trials; ++t) {
    const std::uint64_t seed = trial_seed(options.seed, t);
    report.seeds.push_back(seed);
    const auto change = random_change(RingContext{s}, seed, options.bound);
    std::vector<Form> moved;
    for (const auto& g : gens) moved.push_back(apply_change(g, change));
    std::vector<MonomialSet> per_degree;
    outcomes.push_back(
        ideal_from_pieces(s, ideal_graded_pieces(moved, dmax, options.order), &per_degree));
    degree_outcomes.push_back(std::move(per_degree));
  }
  const auto [index, count] = majority(outcomes);
  report.result = outcomes[index];
  report.agreements = count;
  report.stable = count == options.trials;

  for (int d = 0; d <= dmax; ++d) {
    std::vector<MonomialSet> column;
    for (const auto& trial : degree_outcomes) column.push_back(trial[d]);
    const auto [di, dc] = majority(column);
    report.per_degree.push_back(
        GinReport{column[di], options.trials, dc, report.seeds, dc == options.trials});
  }
  report.caveat = "generators of the generic initial ideal above degree " +
                  std::to_string(dmax) + " are not detected";
  return report;
}

CommutationReport restriction_commutation_check(const Subspace& v,
                                                const GinOptions& options) {
  if (v.num_vars() < 2) throw std::invalid_argument("restriction needs at least two variables");
  GinOptions revlex = options;
  revlex.order = MonomialOrder::revlex;
  const Subspace source = with_order(v, MonomialOrder::revlex);

  const std::uint64_t change_seed = derive_seed(options.seed, 1000);
  const auto change = random_change(RingContext{v.num_vars()}, change_seed, options.bound);
  const Subspace section = restrict_subspace(transform_subspace(source, change),
                                             Form::variable(v.num_vars(), v.num_vars() - 1));

  GinOptions first = revlex;
  first.seed = derive_seed(options.seed, 1001);
  GinOptions second = revlex;
  second.seed = derive_seed(options.seed, 1002);
  const GinReport a = gin_subspace(section, first);
  const GinReport b = gin_subspace(source, second);

  CommutationReport report{a.result, restrict_to_last_hyperplane(b.result), a.stable && b.stable,
                           false, {change_seed, first.seed, second.seed}};
  report.equal = report.restricted_then_gin == report.gin_then_restricted;
  return report;
}

}  // namespace ginprop
