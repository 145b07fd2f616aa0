#include "ginprop/form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ginprop {

Form::Form(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

Form::Form(int num_vars, int degree, TermMap terms) : Form(num_vars, degree) {
  for (auto& [e, c] : terms) {
    if (e.num_vars() != static_cast<std::size_t>(num_vars) || e.degree() != degree)
      throw std::invalid_argument("term does not match the form's degree");
    if (c != 0) terms_.emplace(e, c);
  }
}

Form Form::monomial(const Exponent& e, const Scalar& coeff) {
  Form f(static_cast<int>(e.num_vars()), e.degree());
  if (coeff != 0) f.terms_.emplace(e, coeff);
  return f;
}

Form Form::constant(int num_vars, const Scalar& c) {
  return monomial(Exponent(num_vars), c);
}

Form Form::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars)
    throw std::out_of_range("variable index out of range");
  return monomial(Exponent::unit(num_vars, index));
}

Form Form::linear(std::span<const Scalar> coeffs) {
  const int s = static_cast<int>(coeffs.size());
  Form f(s, 1);
  for (int i = 0; i < s; ++i)
    if (coeffs[i] != 0) f.terms_.emplace(Exponent::unit(s, i), coeffs[i]);
  return f;
}

Scalar Form::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Form& Form::add_term(const Exponent& e, const Scalar& coeff) {
  if (e.num_vars() != static_cast<std::size_t>(num_vars_) || e.degree() != degree_)
    throw std::invalid_argument("term does not match the form's degree");
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void Form::check_compatible(const Form& other) const {
  if (other.num_vars_ != num_vars_)
    throw std::invalid_argument("forms live in different rings");
  if (other.degree_ != degree_)
    throw std::invalid_argument("forms have different degrees");
}

Form Form::operator-() const {
  Form r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Form& Form::operator+=(const Form& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Form multiply(const Form& f, const Form& g) {
  if (f.num_vars() != g.num_vars())
    throw std::invalid_argument("forms live in different rings");
  Form r(f.num_vars(), f.degree() + g.degree());
  for (const auto& [ef, cf] : f.terms())
    for (const auto& [eg, cg] : g.terms()) r.add_term(ef + eg, cf * cg);
  return r;
}

Exponent initial_monomial(const Form& f, MonomialOrder order) {
  if (f.is_zero()) throw std::invalid_argument("initial monomial of zero");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || compare_monomials(order, e, *best) > 0) best = &e;
  return *best;
}

Scalar leading_coefficient(const Form& f, MonomialOrder order) {
  return f.coefficient(initial_monomial(f, order));
}

namespace {

// Substitutes x_i -> images[i] (all of degree 1 in `target_vars` variables).
Form substitute(const Form& f, const std::vector<Form>& images, int target_vars) {
  const int s = f.num_vars();
  const int d = f.degree();
  // powers[i][k] = images[i]^k
  std::vector<std::vector<Form>> powers(s);
  for (int i = 0; i < s; ++i) {
    powers[i].push_back(Form::constant(target_vars, 1));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Form result(target_vars, d);
  for (const auto& [e, c] : f.terms()) {
    Form term = Form::constant(target_vars, c);
    for (int i = 0; i < s; ++i)
      if (e[i] > 0) term = term * powers[i][e[i]];
    result += term;
  }
  return result;
}

}  // namespace

int eliminated_variable(const Form& l) {
  if (l.degree() != 1) throw std::invalid_argument("restriction needs a linear form");
  if (l.is_zero()) throw std::invalid_argument("restriction by the zero linear form");
  for (int j = l.num_vars() - 1; j >= 0; --j)
    if (l.coefficient(Exponent::unit(l.num_vars(), j)) != 0) return j;
  throw std::logic_error("unreachable");
}

Form restrict_form(const Form& f, const Form& l) {
  if (f.num_vars() != l.num_vars())
    throw std::invalid_argument("forms live in different rings");
  const int s = f.num_vars();
  const int j = eliminated_variable(l);
  if (s < 2) throw std::invalid_argument("restriction needs at least two variables");
  const Scalar pivot = l.coefficient(Exponent::unit(s, j));
  std::vector<Form> images;
  images.reserve(s);
  Form solved(s - 1, 1);
  for (int i = 0; i < s; ++i) {
    if (i == j) continue;
    const int target = i < j ? i : i - 1;
    solved.add_term(Exponent::unit(s - 1, target),
                    -l.coefficient(Exponent::unit(s, i)) / pivot);
  }
  for (int i = 0; i < s; ++i) {
    if (i == j)
      images.push_back(solved);
    else
      images.push_back(Form::variable(s - 1, i < j ? i : i - 1));
  }
  return substitute(f, images, s - 1);
}

Form apply_substitution(const Form& f, const std::vector<Form>& images) {
  return substitute(f, images, f.num_vars());
}

std::optional<Form> divide_exact(const Form& f, const Form& p) {
  if (f.num_vars() != p.num_vars())
    throw std::invalid_argument("forms live in different rings");
  if (p.is_zero()) throw std::invalid_argument("division by the zero form");
  const int qdeg = f.degree() - p.degree();
  if (qdeg < 0) return std::nullopt;
  Form quotient(f.num_vars(), qdeg);
  Form rest = f;
  // Lex-leading terms are the last map entries.
  const auto& [plead, pcoeff] = *p.terms().rbegin();
  while (!rest.is_zero()) {
    const auto& [rlead, rcoeff] = *rest.terms().rbegin();
    if (!plead.divides(rlead)) return std::nullopt;
    Form t = Form::monomial(rlead - plead, rcoeff / pcoeff);
    quotient += t;
    rest -= t * p;
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, int num_vars) : text_(text), num_vars_(num_vars) {}

  Form parse(std::optional<int> degree_hint) {
    struct Term {
      Exponent exp;
      Scalar coeff;
      std::size_t pos;
    };
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      auto [e, c] = parse_term();
      if (negative) c = -c;
      terms.push_back({std::move(e), std::move(c), start});
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }

    std::optional<int> degree;
    std::size_t degree_pos = 0;
    for (const auto& t : terms) {
      if (t.coeff == 0) continue;
      const int d = t.exp.degree();
      if (!degree) {
        degree = d;
        degree_pos = t.pos;
      } else if (*degree != d) {
        std::ostringstream msg;
        msg << "inhomogeneous polynomial: found degrees " << *degree << " and " << d;
        throw ParseError(msg.str(), t.pos);
      }
    }
    if (degree && degree_hint && *degree != *degree_hint) {
      std::ostringstream msg;
      msg << "expected a form of degree " << *degree_hint << ", found degree " << *degree;
      throw ParseError(msg.str(), degree_pos);
    }
    Form f(num_vars_, degree.value_or(degree_hint.value_or(0)));
    for (const auto& t : terms)
      if (t.coeff != 0) f.add_term(t.exp, t.coeff);
    return f;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Exponent, Scalar> parse_term() {
    Exponent e(num_vars_);
    Scalar coeff = 1;
    skip_ws();
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      coeff = make_scalar(num, den);
      skip_ws();
      if (at_end() || peek() != '*') return {e, coeff};
      ++pos_;
    }
    while (true) {
      parse_factor(e);
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {e, coeff};
  }

  void parse_factor(Exponent& e) {
    skip_ws();
    if (at_end() || peek() != 'x') fail("expected a variable");
    ++pos_;
    const std::size_t index_pos = pos_;
    const std::string idx = digits();
    const long index = idx.size() > 9 ? -1 : std::stol(idx);
    if (index < 1 || index > num_vars_) {
      throw ParseError("variable x" + idx + " out of range (1.." +
                           std::to_string(num_vars_) + ") at position " +
                           std::to_string(index_pos),
                       index_pos);
    }
    int power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::string p = digits();
      if (p.size() > 6) fail("exponent too large");
      power = std::stoi(p);
    }
    e[index - 1] += power;
  }

  std::string_view text_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, int num_vars, std::optional<int> degree) {
  return FormParser(text, num_vars).parse(degree);
}

std::string format_monomial(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.num_vars(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

Exponent parse_monomial(std::string_view text, int num_vars) {
  Form f = parse_form(text, num_vars);
  if (f.size() != 1 || f.terms().begin()->second != 1)
    throw ParseError("expected a single monomial: '" + std::string(text) + "'", 0);
  return f.terms().begin()->first;
}

std::string format_form(const Form& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponent, Scalar>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return compare_monomials(MonomialOrder::revlex, a.first, b.first) > 0;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Scalar magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const bool is_constant = e.degree() == 0;
    if (is_constant) {
      out += format_scalar(magnitude);
    } else if (magnitude == 1) {
      out += format_monomial(e);
    } else {
      out += format_scalar(magnitude) + "*" + format_monomial(e);
    }
  }
  return out;
}

}  // namespace ginprop
