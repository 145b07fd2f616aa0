#ifndef GINPROP_MONOMIAL_ORDER_HPP
#define GINPROP_MONOMIAL_ORDER_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ginprop/exponent.hpp"

namespace ginprop {

// Orders on monomials of a fixed degree, with x1 > x2 > ... > xs.
//   revlex: x^a > x^b iff a_r < b_r at the largest r with a_r != b_r.
//   lex:    x^a > x^b iff a_r > b_r at the smallest r with a_r != b_r.
//   mixed_last_revlex: a smaller exponent of the last variable wins; ties
//                      are broken by lex on the remaining variables.
enum class MonomialOrder { revlex, lex, mixed_last_revlex };

// Throws std::invalid_argument("incomparable degrees") when the degrees (or
// variable counts) differ.
std::strong_ordering compare_monomials(MonomialOrder order, const Exponent& a,
                                       const Exponent& b);

std::string_view order_name(MonomialOrder order);
// Accepts "revlex", "lex", "mixed" (and "mixed_last_revlex").
MonomialOrder parse_order(std::string_view name);

// Comparator for sorting in descending order.
struct GreaterInOrder {
  MonomialOrder order;
  bool operator()(const Exponent& a, const Exponent& b) const {
    return compare_monomials(order, a, b) > 0;
  }
};

// The monomials of degree d sorted descending under `order`.
std::vector<Exponent> sorted_monomials(int num_vars, int degree,
                                       MonomialOrder order);

}  // namespace ginprop

#endif
