#ifndef GINPROP_SCALAR_HPP
#define GINPROP_SCALAR_HPP

#include <gmpxx.h>

#include <string>

namespace ginprop {

// Exact rational coefficient. GMP keeps every value in lowest terms with a
// positive denominator after arithmetic; values built from a numerator and a
// denominator must go through make_scalar.
using Scalar = mpq_class;

inline Scalar make_scalar(const mpz_class& num, const mpz_class& den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline std::string format_scalar(const Scalar& q) { return q.get_str(); }

}  // namespace ginprop

#endif
