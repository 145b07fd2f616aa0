#ifndef GINPROP_GCD_HPP
#define GINPROP_GCD_HPP

#include "ginprop/form.hpp"

namespace ginprop {

// Scales f to integer coefficients with gcd 1 and a positive revlex-leading
// coefficient. The zero form is returned unchanged.
Form normalize_form(const Form& f);

// Greatest common divisor of two forms, normalized as above; a constant gcd
// is the degree-0 form 1. gcd(f, 0) is normalize_form(f). Throws
// std::invalid_argument when both inputs are zero.
//
// Works over Z after clearing denominators: the polynomials are viewed as
// univariate in their lowest-index variable with coefficients in the
// remaining ones, contents are split off recursively, and the primitive
// parts go through a subresultant pseudo-remainder sequence.
Form gcd_forms(const Form& f, const Form& g);

// f and g agree up to a nonzero rational factor.
bool equal_up_to_scalar(const Form& f, const Form& g);

}  // namespace ginprop

#endif
