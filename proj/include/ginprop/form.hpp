#ifndef GINPROP_FORM_HPP
#define GINPROP_FORM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ginprop/exponent.hpp"
#include "ginprop/monomial_order.hpp"
#include "ginprop/scalar.hpp"

namespace ginprop {

// The polynomial ring k[x1, ..., xs].
struct RingContext {
  int num_vars = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : std::runtime_error(what), position_(position), line_(line) {}

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// Homogeneous polynomial with exact rational coefficients.
///
/// Terms are kept in a sparse map; zero coefficients are never stored and
/// every key has the form's degree. The zero form still carries a degree so
/// that it can live inside a graded piece.
class Form {
 public:
  using TermMap = std::map<Exponent, Scalar>;

  Form(int num_vars, int degree);
  // Validates homogeneity and drops zero coefficients.
  Form(int num_vars, int degree, TermMap terms);

  static Form monomial(const Exponent& e, const Scalar& coeff = 1);
  static Form constant(int num_vars, const Scalar& c);
  // x_{index+1}.
  static Form variable(int num_vars, int index);
  static Form linear(std::span<const Scalar> coeffs);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Scalar coefficient(const Exponent& e) const;

  // Adds coeff * x^e in place; throws on a degree mismatch.
  Form& add_term(const Exponent& e, const Scalar& coeff);

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Scalar& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }

  bool operator==(const Form& other) const = default;

 private:
  void check_compatible(const Form& other) const;

  int num_vars_;
  int degree_;
  TermMap terms_;
};

Form multiply(const Form& f, const Form& g);
inline Form operator*(const Form& f, const Form& g) { return multiply(f, g); }

// Largest monomial with a nonzero coefficient. Throws std::invalid_argument
// ("initial monomial of zero") on the zero form.
Exponent initial_monomial(const Form& f, MonomialOrder order);
Scalar leading_coefficient(const Form& f, MonomialOrder order);

// Normal form of f modulo the linear form l: solves l = 0 for the variable of
// largest index with nonzero coefficient, substitutes, and drops that
// variable. The result lives in s-1 variables (later variables shift down
// by one). Requires s >= 2.
Form restrict_form(const Form& f, const Form& l);

// Substitutes x_i -> images[i]; all images are linear forms in the same ring
// as f.
Form apply_substitution(const Form& f, const std::vector<Form>& images);

// Index of the variable eliminated by restrict_form.
int eliminated_variable(const Form& l);

// Exact quotient f / p, or nullopt when p does not divide f.
std::optional<Form> divide_exact(const Form& f, const Form& p);

// Grammar: expr = [sign] term { ("+"|"-") term }, term = [rational "*"]
// factor {"*" factor} | rational, factor = "x" index ["^" exponent].
// "0" is the zero form; its degree comes from `degree` (default 0).
Form parse_form(std::string_view text, int num_vars,
                std::optional<int> degree = std::nullopt);
// Canonical text: terms in revlex-descending order.
std::string format_form(const Form& f);
// "x1^2*x3"; the empty monomial prints as "1".
std::string format_monomial(const Exponent& e);
Exponent parse_monomial(std::string_view text, int num_vars);

}  // namespace ginprop

#endif
