#ifndef GINPROP_MONOMIAL_SET_HPP
#define GINPROP_MONOMIAL_SET_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "ginprop/exponent.hpp"
#include "ginprop/monomial_order.hpp"

namespace ginprop {

/// A set of monomials of one degree; the initial subspace in(V) and gin V of
/// a subspace V of S_d are values of this type.
class MonomialSet {
 public:
  MonomialSet(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {}
  // Throws std::invalid_argument when a member has the wrong degree.
  MonomialSet(int num_vars, int degree, const std::vector<Exponent>& members);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Exponent& e) const { return members_.count(e) > 0; }
  const std::set<Exponent>& members() const { return members_; }

  void insert(const Exponent& e);

  // Members in descending order under `order`.
  std::vector<Exponent> sorted(MonomialOrder order = MonomialOrder::revlex) const;

  bool operator==(const MonomialSet&) const = default;
  auto operator<=>(const MonomialSet&) const = default;

 private:
  int num_vars_;
  int degree_;
  std::set<Exponent> members_;
};

// Drops the members divisible by the last variable and removes that variable:
// the monomial side of "set x_s = 0".
MonomialSet restrict_to_last_hyperplane(const MonomialSet& set);

// The full set of degree-d monomials.
MonomialSet all_monomials(int num_vars, int degree);

}  // namespace ginprop

#endif
