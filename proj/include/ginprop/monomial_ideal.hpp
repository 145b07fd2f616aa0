#ifndef GINPROP_MONOMIAL_IDEAL_HPP
#define GINPROP_MONOMIAL_IDEAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ginprop/exponent.hpp"
#include "ginprop/monomial_set.hpp"

namespace ginprop {

/// Monomial ideal given by its minimal generators, stored by ascending degree
/// and then descending revlex.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  int max_generator_degree() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  friend MonomialIdeal minimalize(int, std::vector<Exponent>);

  int num_vars_;
  std::vector<Exponent> generators_;
};

// Ideal generated by `gens`, keeping only the minimal ones.
MonomialIdeal minimalize(int num_vars, std::vector<Exponent> gens);

bool contains_monomial(const MonomialIdeal& ideal, const Exponent& m);

// The monomials of degree d lying in the ideal.
MonomialSet degree_part(const MonomialIdeal& ideal, int degree);

// Number of degree-d monomials outside the ideal: the Hilbert function of
// S/J in degree d.
long hilbert_function(const MonomialIdeal& ideal, int degree);

// Characteristic-zero Borel test: for every generator m, every i with x_i | m
// and every j < i, the monomial (x_j / x_i) m lies in the ideal.
bool is_borel_fixed(const MonomialIdeal& ideal);

// J : x_s, minimally generated by m / x_s (when x_s | m) and m otherwise.
MonomialIdeal colon_by_last_variable(const MonomialIdeal& ideal);

// "x1^2, x1*x2, x2^2"; the zero ideal prints as "0".
std::string format_ideal(const MonomialIdeal& ideal);
// Comma- or newline-separated monomials; "0" or empty text is the zero ideal.
MonomialIdeal parse_ideal(std::string_view text, int num_vars);

// Quotient Hilbert function value in degree d: hf[d] when listed, the last
// listed value otherwise.
long hilbert_target(const std::vector<long>& hf, int degree);

// All monomial ideals J generated in degrees <= dmax with
//   (1) hilbert_function(J, d) == hilbert_target(hf, d) for d <= dmax + 1,
//   (2) J Borel-fixed,
//   (3) J : x_s == J.
// Each graded piece is searched over Borel-closed monomial sets. Candidates
// are returned in a deterministic order (by their generator lists). Throws
// std::logic_error if a surviving candidate has a minimal generator involving
// x_s.
std::vector<MonomialIdeal> enumerate_gin_candidates(int num_vars,
                                                    const std::vector<long>& hf,
                                                    int dmax);

}  // namespace ginprop

#endif
