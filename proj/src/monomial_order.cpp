#include "ginprop/monomial_order.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ginprop {

namespace {

std::strong_ordering lex_compare(const Exponent& a, const Exponent& b,
                                 std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(MonomialOrder order, const Exponent& a,
                                       const Exponent& b) {
  if (a.num_vars() != b.num_vars() || a.degree() != b.degree())
    throw std::invalid_argument("incomparable degrees");
  const std::size_t s = a.num_vars();
  switch (order) {
    case MonomialOrder::revlex:
      for (std::size_t r = s; r-- > 0;)
        if (a[r] != b[r]) return b[r] <=> a[r];
      return std::strong_ordering::equal;
    case MonomialOrder::lex:
      return lex_compare(a, b, s);
    case MonomialOrder::mixed_last_revlex:
      if (s == 0) return std::strong_ordering::equal;
      if (a[s - 1] != b[s - 1]) return b[s - 1] <=> a[s - 1];
      return lex_compare(a, b, s - 1);
  }
  throw std::logic_error("unknown monomial order");
}

std::string_view order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::revlex: return "revlex";
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::mixed_last_revlex: return "mixed";
  }
  return "?";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "revlex") return MonomialOrder::revlex;
  if (name == "lex") return MonomialOrder::lex;
  if (name == "mixed" || name == "mixed_last_revlex")
    return MonomialOrder::mixed_last_revlex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) +
                              "' (expected revlex, lex or mixed)");
}

std::vector<Exponent> sorted_monomials(int num_vars, int degree,
                                       MonomialOrder order) {
  auto monos = monomials_of_degree(num_vars, degree);
  std::sort(monos.begin(), monos.end(), GreaterInOrder{order});
  return monos;
}

}  // namespace ginprop
