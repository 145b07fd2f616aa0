#ifndef GINPROP_TEST_GCD_ORACLE_HPP
#define GINPROP_TEST_GCD_ORACLE_HPP

#include <optional>

#include "ginprop/form.hpp"

namespace oracle {

// Greatest common divisor of two nonzero forms found by linear algebra alone:
// the largest k with a nonzero solution of f*w = g*u (deg w = deg g - k,
// deg u = deg f - k) gives deg gcd = k, and the gcd is f / u. The quotient is
// checked against g / w as well. Returns nullopt if anything is inconsistent.
std::optional<ginprop::Form> gcd_by_linear_algebra(const ginprop::Form& f, const ginprop::Form& g);

// True when a and b are nonzero multiples of each other.
bool proportional(const ginprop::Form& a, const ginprop::Form& b);

}  // namespace oracle

#endif
