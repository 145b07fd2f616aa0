#include "ginprop/exponent.hpp"

#include <numeric>
#include <stdexcept>

namespace ginprop {

int Exponent::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Exponent::divides(const Exponent& other) const {
  if (other.exps_.size() != exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (other.exps_.size() != exps_.size())
    throw std::invalid_argument("exponent length mismatch");
  Exponent r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& other) const {
  if (!other.divides(*this))
    throw std::invalid_argument("monomial quotient is not a monomial");
  Exponent r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Exponent Exponent::drop_variable(std::size_t index) const {
  std::vector<int> e;
  e.reserve(exps_.size() - 1);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (i != index) e.push_back(exps_[i]);
  return Exponent(std::move(e));
}

Exponent Exponent::unit(std::size_t num_vars, std::size_t index, int power) {
  Exponent e(num_vars);
  e.exps_[index] = power;
  return e;
}

namespace {

void fill_monomials(std::vector<int>& current, std::size_t pos, int remaining,
                    std::vector<Exponent>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current[pos] = k;
    fill_monomials(current, pos + 1, remaining - k, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int num_vars, int degree) {
  std::vector<Exponent> out;
  if (num_vars <= 0 || degree < 0) {
    if (num_vars == 0 && degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> current(num_vars, 0);
  fill_monomials(current, 0, degree, out);
  return out;
}

long count_monomials(int num_vars, int degree) {
  if (degree < 0 || num_vars < 0) return 0;
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  // C(degree + num_vars - 1, num_vars - 1), computed incrementally.
  long result = 1;
  for (int i = 1; i < num_vars; ++i) result = result * (degree + i) / i;
  return result;
}

}  // namespace ginprop
