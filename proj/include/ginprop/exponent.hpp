#ifndef GINPROP_EXPONENT_HPP
#define GINPROP_EXPONENT_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ginprop {

/// Exponent vector (i_1, ..., i_s) of the monomial x_1^{i_1} ... x_s^{i_s}.
/// Index 0 corresponds to x1. The defaulted ordering is plain lexicographic
/// comparison of the vectors; it is used for container keys, not as a
/// monomial order (see monomial_order.hpp).
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t num_vars) : exps_(num_vars, 0) {}
  Exponent(std::initializer_list<int> exps) : exps_(exps) {}
  explicit Exponent(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t num_vars() const { return exps_.size(); }
  int degree() const;

  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }

  // True when this monomial divides `other`.
  bool divides(const Exponent& other) const;

  Exponent operator+(const Exponent& other) const;
  // Requires divisibility; throws std::invalid_argument otherwise.
  Exponent operator-(const Exponent& other) const;

  // Exponent with variable `index` removed (s-1 entries).
  Exponent drop_variable(std::size_t index) const;

  static Exponent unit(std::size_t num_vars, std::size_t index, int power = 1);

  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;

 private:
  std::vector<int> exps_;
};

// All exponents of total degree d in s variables, in lex-descending order.
std::vector<Exponent> monomials_of_degree(int num_vars, int degree);

// C(n + k - 1, k - 1): number of degree-n monomials in k variables.
long count_monomials(int num_vars, int degree);

}  // namespace ginprop

#endif
