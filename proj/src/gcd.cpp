#include "ginprop/gcd.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ginprop {

namespace {

// Sparse polynomial over Z, not necessarily homogeneous. std::map orders the
// exponent vectors lexicographically, so the last entry is the lex-leading
// term (x1 > x2 > ...).
class IntPoly {
 public:
  using Terms = std::map<Exponent, mpz_class>;

  explicit IntPoly(int num_vars) : num_vars_(num_vars) {}

  static IntPoly constant(int num_vars, const mpz_class& c) {
    IntPoly p(num_vars);
    if (c != 0) p.terms_.emplace(Exponent(num_vars), c);
    return p;
  }

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
  }
  mpz_class constant_value() const {
    return terms_.empty() ? mpz_class(0) : terms_.begin()->second;
  }

  void add_term(const Exponent& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  bool involves(int var) const {
    for (const auto& [e, c] : terms_)
      if (e[var] > 0) return true;
    return false;
  }

  const mpz_class& lex_leading_coefficient() const { return terms_.rbegin()->second; }

  IntPoly operator-() const {
    IntPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  IntPoly& operator+=(const IntPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  IntPoly shifted(int var, int power) const {
    IntPoly r(num_vars_);
    const Exponent shift = Exponent::unit(num_vars_, var, power);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
    return r;
  }
  IntPoly scaled_down(const mpz_class& c) const {
    IntPoly r(num_vars_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v / c);
    return r;
  }

  bool operator==(const IntPoly&) const = default;

 private:
  int num_vars_;
  Terms terms_;
};

IntPoly power(const IntPoly& p, int k) {
  IntPoly r = IntPoly::constant(p.num_vars(), 1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

// Exact quotient a / b by lex division, or nullopt if b does not divide a.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  IntPoly quotient(a.num_vars());
  IntPoly rest = a;
  const auto& [blead, bcoeff] = *b.terms().rbegin();
  while (!rest.is_zero()) {
    const auto [rlead, rcoeff] = *rest.terms().rbegin();
    if (!blead.divides(rlead) || !mpz_divisible_p(rcoeff.get_mpz_t(), bcoeff.get_mpz_t()))
      return std::nullopt;
    IntPoly t(a.num_vars());
    t.add_term(rlead - blead, rcoeff / bcoeff);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

IntPoly divide_or_throw(const IntPoly& a, const IntPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("inexact division in the remainder sequence");
  return *q;
}

mpz_class integer_content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

IntPoly with_positive_lead(IntPoly p) {
  if (!p.is_zero() && p.lex_leading_coefficient() < 0) return -p;
  return p;
}

// Polynomial in `var` with coefficients free of `var`; index = power.
using Univariate = std::vector<IntPoly>;

Univariate to_univariate(const IntPoly& p, int var) {
  Univariate u(p.degree_in(var) + 1, IntPoly(p.num_vars()));
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    u[e[var]].add_term(rest, c);
  }
  return u;
}

IntPoly from_univariate(const Univariate& u, int var) {
  IntPoly p(u.empty() ? 0 : u.front().num_vars());
  for (std::size_t k = 0; k < u.size(); ++k) p += u[k].shifted(var, static_cast<int>(k));
  return p;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int degree(const Univariate& u) { return static_cast<int>(u.size()) - 1; }

bool is_zero(const Univariate& u) { return u.empty(); }

// lc(b)^(deg a - deg b + 1) * a  mod  b
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const int db = degree(b);
  int budget = degree(a) - db + 1;
  const IntPoly& lcb = b.back();
  while (!is_zero(a) && degree(a) >= db) {
    const IntPoly lca = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c = c * lcb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= lca * b[k];
    trim(a);
    --budget;
  }
  if (budget > 0) {
    const IntPoly scale = power(lcb, budget);
    for (auto& c : a) c = c * scale;
  }
  return a;
}

IntPoly gcd_poly(const IntPoly& a, const IntPoly& b);

IntPoly content_in(const Univariate& u) {
  IntPoly g(u.front().num_vars());
  for (const auto& c : u) {
    g = gcd_poly(g, c);
    if (g.is_constant() && abs(g.constant_value()) == 1) break;
  }
  return g;
}

Univariate primitive_part(Univariate u) {
  const IntPoly content = content_in(u);
  for (auto& c : u) c = divide_or_throw(c, content);
  return u;
}

// Last nonzero remainder of the subresultant sequence of two polynomials of
// positive degree; a result of degree 0 means the inputs are coprime in var.
Univariate subresultant_last(Univariate a, Univariate b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  const int n = a.front().num_vars();
  IntPoly g = IntPoly::constant(n, 1);
  IntPoly h = IntPoly::constant(n, 1);
  while (true) {
    const int delta = degree(a) - degree(b);
    Univariate r = pseudo_remainder(a, b);
    if (is_zero(r)) return b;
    if (degree(r) == 0) return r;
    const IntPoly divisor = g * power(h, delta);
    for (auto& c : r) c = divide_or_throw(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divide_or_throw(power(g, delta), power(h, delta - 1));
    }
  }
}

IntPoly gcd_poly(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return with_positive_lead(b);
  if (b.is_zero()) return with_positive_lead(a);
  const int n = a.num_vars();
  if (a.is_constant() || b.is_constant()) {
    const mpz_class c = gcd(integer_content(a), integer_content(b));
    return IntPoly::constant(n, c);
  }
  int var = 0;
  while (var < n && !a.involves(var) && !b.involves(var)) ++var;
  // Any common divisor is free of a variable missing from either input.
  if (!a.involves(var)) return gcd_poly(a, content_in(to_univariate(b, var)));
  if (!b.involves(var)) return gcd_poly(content_in(to_univariate(a, var)), b);

  const Univariate ua = to_univariate(a, var);
  const Univariate ub = to_univariate(b, var);
  const IntPoly ca = content_in(ua);
  const IntPoly cb = content_in(ub);
  const IntPoly c = gcd_poly(ca, cb);
  Univariate pa = ua, pb = ub;
  for (auto& x : pa) x = divide_or_throw(x, ca);
  for (auto& x : pb) x = divide_or_throw(x, cb);

  const Univariate last = subresultant_last(pa, pb);
  if (degree(last) == 0) return with_positive_lead(c);
  return with_positive_lead(c * from_univariate(primitive_part(last), var));
}

// Integer polynomial proportional to f.
IntPoly to_integer_poly(const Form& f) {
  mpz_class lcm_den = 1;
  for (const auto& [e, c] : f.terms()) lcm_den = lcm(lcm_den, c.get_den());
  IntPoly p(f.num_vars());
  for (const auto& [e, c] : f.terms()) p.add_term(e, c.get_num() * (lcm_den / c.get_den()));
  return p;
}

}  // namespace

Form normalize_form(const Form& f) {
  if (f.is_zero()) return f;
  const IntPoly p = to_integer_poly(f);
  const mpz_class content = integer_content(p);
  Form out(f.num_vars(), f.degree());
  for (const auto& [e, c] : p.terms()) out.add_term(e, Scalar(c / content));
  if (leading_coefficient(out, MonomialOrder::revlex) < 0) out = -out;
  return out;
}

Form gcd_forms(const Form& f, const Form& g) {
  if (f.num_vars() != g.num_vars()) throw std::invalid_argument("forms live in different rings");
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero forms");
  if (g.is_zero()) return normalize_form(f);
  if (f.is_zero()) return normalize_form(g);
  const IntPoly d = gcd_poly(to_integer_poly(f), to_integer_poly(g));
  int deg = -1;
  for (const auto& [e, c] : d.terms()) {
    if (deg >= 0 && e.degree() != deg) throw std::logic_error("inhomogeneous gcd");
    deg = e.degree();
  }
  Form out(f.num_vars(), deg);
  for (const auto& [e, c] : d.terms()) out.add_term(e, Scalar(c));
  return normalize_form(out);
}

bool equal_up_to_scalar(const Form& f, const Form& g) {
  if (f.num_vars() != g.num_vars() || f.degree() != g.degree()) return false;
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize_form(f) == normalize_form(g);
}

}  // namespace ginprop
