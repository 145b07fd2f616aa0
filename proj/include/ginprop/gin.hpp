#ifndef GINPROP_GIN_HPP
#define GINPROP_GIN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ginprop/coordinate_change.hpp"
#include "ginprop/monomial_ideal.hpp"
#include "ginprop/monomial_set.hpp"
#include "ginprop/subspace.hpp"

namespace ginprop {

struct GinOptions {
  MonomialOrder order = MonomialOrder::revlex;
  int trials = 3;
  std::uint64_t seed = 0;
  int bound = 100;
};

/// Outcome of a randomized gin computation. `result` is the majority over
/// the trials (first-seen wins a tie); `stable` means every trial agreed.
struct GinReport {
  MonomialSet result{0, 0};
  int trials = 0;
  int agreements = 0;
  std::vector<std::uint64_t> seeds;
  bool stable = false;
};

struct GinIdealReport {
  MonomialIdeal result{0};
  int dmax = 0;
  int trials = 0;
  int agreements = 0;
  std::vector<std::uint64_t> seeds;
  bool stable = false;
  // Majority initial subspace of I_d for d = 0..dmax.
  std::vector<GinReport> per_degree;
  std::string caveat;
};

// Integer matrix with entries uniform in [-bound, bound], re-drawn until
// invertible. Deterministic in `seed`.
CoordinateChange random_change(const RingContext& ring, std::uint64_t seed, int bound);

// Seed used by trial t of a run started with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

// in(M_t . V) for independent random M_t, majority-merged.
GinReport gin_subspace(const Subspace& v, const GinOptions& options = {});

// Graded pieces I_d = span{m * g : deg(m * g) = d} for d = 0..dmax.
std::vector<Subspace> ideal_graded_pieces(std::span<const Form> gens, int dmax,
                                          MonomialOrder order);

// Monomial ideal generated by in(I_d) for d <= dmax, no coordinate change.
MonomialIdeal initial_ideal_truncated(std::span<const Form> gens, int dmax,
                                      MonomialOrder order);

// gin of the ideal generated by `gens`, truncated at dmax: each trial applies
// one random change to every generator and takes in(I_d) for all d <= dmax.
// Throws std::invalid_argument when dmax is below a generator degree.
GinIdealReport gin_ideal_truncated(std::span<const Form> gens, int dmax,
                                   const GinOptions& options = {});

struct CommutationReport {
  MonomialSet restricted_then_gin;  // gin((M.V)|_{x_s=0})
  MonomialSet gin_then_restricted;  // gin(V)|_{x_s=0}
  bool stable = false;              // both gin runs unanimous
  bool equal = false;
  std::vector<std::uint64_t> seeds;
};

// Compares gin of a generic hyperplane section with the restriction of gin V.
// Requires s >= 2; uses revlex regardless of options.order.
CommutationReport restriction_commutation_check(const Subspace& v,
                                                const GinOptions& options = {});

}  // namespace ginprop

#endif
