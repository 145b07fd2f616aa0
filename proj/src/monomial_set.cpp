#include "ginprop/monomial_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginprop {

MonomialSet::MonomialSet(int num_vars, int degree, const std::vector<Exponent>& members)
    : MonomialSet(num_vars, degree) {
  for (const auto& e : members) insert(e);
}

void MonomialSet::insert(const Exponent& e) {
  if (e.num_vars() != static_cast<std::size_t>(num_vars_) || e.degree() != degree_)
    throw std::invalid_argument("monomial does not belong to this graded piece");
  members_.insert(e);
}

std::vector<Exponent> MonomialSet::sorted(MonomialOrder order) const {
  std::vector<Exponent> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end(), GreaterInOrder{order});
  return out;
}

MonomialSet restrict_to_last_hyperplane(const MonomialSet& set) {
  if (set.num_vars() < 2) throw std::invalid_argument("restriction needs at least two variables");
  const std::size_t last = set.num_vars() - 1;
  MonomialSet out(set.num_vars() - 1, set.degree());
  for (const auto& e : set.members())
    if (e[last] == 0) out.insert(e.drop_variable(last));
  return out;
}

MonomialSet all_monomials(int num_vars, int degree) {
  return MonomialSet(num_vars, degree, monomials_of_degree(num_vars, degree));
}

}  // namespace ginprop
