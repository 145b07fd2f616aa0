#ifndef GINPROP_TEST_HELPERS_HPP
#define GINPROP_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "ginprop/form.hpp"
#include "ginprop/monomial_ideal.hpp"
#include "ginprop/monomial_set.hpp"
#include "ginprop/random.hpp"
#include "ginprop/subspace.hpp"

namespace testutil {

using namespace ginprop;

inline Form F(const std::string& text, int s) { return parse_form(text, s); }

inline std::vector<Form> forms(const std::vector<std::string>& texts, int s) {
  std::vector<Form> out;
  for (const auto& t : texts) out.push_back(parse_form(t, s));
  return out;
}

inline Subspace span(const std::vector<std::string>& texts, int s,
                     MonomialOrder order = MonomialOrder::revlex) {
  auto fs = forms(texts, s);
  return echelonize(fs, order);
}

inline MonomialSet mset(const std::vector<std::string>& monos, int s, int d) {
  MonomialSet out(s, d);
  for (const auto& m : monos) out.insert(parse_monomial(m, s));
  return out;
}

inline MonomialIdeal ideal(const std::string& text, int s) { return parse_ideal(text, s); }

// Revlex straight from the definition: compare at the last differing index,
// the smaller exponent there is larger.
inline bool revlex_greater_oracle(const Exponent& a, const Exponent& b) {
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline Exponent random_exponent(SeededRng& rng, int s, int d) {
  Exponent e(static_cast<std::size_t>(s));
  for (int k = 0; k < d; ++k) e[static_cast<std::size_t>(rng.uniform(0, s - 1))] += 1;
  return e;
}

// Rank of a list of forms over Q via plain Gaussian elimination on a
// coefficient table; does not use the library's echelon code.
int rank_oracle(const std::vector<Form>& fs);

}  // namespace testutil

#endif
