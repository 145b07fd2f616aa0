#include "ginprop/subspace.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ginprop {

Subspace Subspace::zero(int num_vars, int degree, MonomialOrder order) {
  return echelonize(std::span<const Form>(), num_vars, degree, order);
}

Subspace echelonize(std::span<const Form> forms, int num_vars, int degree,
                    MonomialOrder order) {
  for (const auto& f : forms) {
    if (f.num_vars() != num_vars) throw std::invalid_argument("forms live in different rings");
    if (f.degree() != degree) throw std::invalid_argument("forms have mixed degrees");
  }
  // Dense rows over the monomial basis of S_d, columns in descending order,
  // so the first nonzero column of a row is its leading monomial.
  const std::vector<Exponent> columns = sorted_monomials(num_vars, degree, order);
  std::map<Exponent, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(forms.size());
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    std::vector<Scalar> row(columns.size(), 0);
    for (const auto& [e, c] : f.terms()) row[column_of.at(e)] = c;
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < columns.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    auto& prow = rows[rank];
    const Scalar inv = 1 / prow[col];
    for (std::size_t c = col; c < columns.size(); ++c)
      if (prow[c] != 0) prow[c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < columns.size(); ++c)
        if (prow[c] != 0) rows[r][c] -= factor * prow[c];
    }
    pivots.push_back(col);
    ++rank;
  }

  std::vector<Form> basis;
  basis.reserve(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    Form f(num_vars, degree);
    for (std::size_t c = pivots[r]; c < columns.size(); ++c)
      if (rows[r][c] != 0) f.add_term(columns[c], rows[r][c]);
    basis.push_back(std::move(f));
  }
  return Subspace(num_vars, degree, order, std::move(basis));
}

Subspace echelonize(std::span<const Form> forms, MonomialOrder order) {
  if (forms.empty())
    throw std::invalid_argument("cannot infer the graded piece of an empty list");
  return echelonize(forms, forms.front().num_vars(), forms.front().degree(), order);
}

Subspace with_order(const Subspace& v, MonomialOrder order) {
  return echelonize(v.basis(), v.num_vars(), v.degree(), order);
}

MonomialSet initial_subspace(const Subspace& v) {
  MonomialSet out(v.num_vars(), v.degree());
  for (const auto& f : v.basis()) out.insert(initial_monomial(f, v.order()));
  return out;
}

bool contains(const Subspace& v, const Form& f) {
  if (f.num_vars() != v.num_vars() || f.degree() != v.degree())
    throw std::invalid_argument("form does not belong to the subspace's graded piece");
  Form rest = f;
  for (const auto& b : v.basis()) {
    const Scalar c = rest.coefficient(initial_monomial(b, v.order()));
    if (c != 0) rest -= b * c;
  }
  return rest.is_zero();
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  return std::all_of(inner.basis().begin(), inner.basis().end(),
                     [&](const Form& f) { return contains(outer, f); });
}

Subspace transform_subspace(const Subspace& v, const CoordinateChange& change) {
  std::vector<Form> images;
  images.reserve(v.dim());
  for (const auto& f : v.basis()) images.push_back(apply_change(f, change));
  return echelonize(images, v.num_vars(), v.degree(), v.order());
}

Subspace restrict_subspace(const Subspace& v, const Form& l) {
  if (v.num_vars() < 2) throw std::invalid_argument("restriction needs at least two variables");
  eliminated_variable(l);  // validates l
  std::vector<Form> images;
  images.reserve(v.dim());
  for (const auto& f : v.basis()) images.push_back(restrict_form(f, l));
  return echelonize(images, v.num_vars() - 1, v.degree(), v.order());
}

Form random_form(SeededRng& rng, int num_vars, int degree, int bound) {
  Form f(num_vars, degree);
  for (const auto& e : monomials_of_degree(num_vars, degree))
    f.add_term(e, Scalar(rng.uniform(-bound, bound)));
  return f;
}

Subspace random_subspace(const RingContext& ring, int degree, int dim,
                         std::uint64_t seed, int bound, MonomialOrder order) {
  const long full = count_monomials(ring.num_vars, degree);
  if (dim < 0 || dim > full)
    throw std::invalid_argument("subspace dimension out of range");
  if (bound < 1 && dim > 0) throw std::invalid_argument("coefficient bound must be >= 1");
  SeededRng rng(seed);
  std::vector<Form> forms;
  Subspace current = Subspace::zero(ring.num_vars, degree, order);
  while (static_cast<int>(current.dim()) < dim) {
    Form f = random_form(rng, ring.num_vars, degree, bound);
    if (f.is_zero() || contains(current, f)) continue;
    forms.push_back(std::move(f));
    current = echelonize(forms, ring.num_vars, degree, order);
  }
  return current;
}

Subspace full_graded_piece(int num_vars, int degree, MonomialOrder order) {
  std::vector<Form> forms;
  for (const auto& e : monomials_of_degree(num_vars, degree))
    forms.push_back(Form::monomial(e));
  return echelonize(forms, num_vars, degree, order);
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_header_int(std::string_view value, std::size_t line, std::string_view key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(value), &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad value for '" +
                         std::string(key) + "'",
                     0, line);
  }
}

SubspaceHeader parse_header(std::string_view text, std::size_t line) {
  SubspaceHeader h;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": malformed header token '" +
                           token + "'",
                       0, line);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "s") {
      h.num_vars = parse_header_int(value, line, key);
      if (*h.num_vars < 1)
        throw ParseError("line " + std::to_string(line) + ": s must be >= 1", 0, line);
    } else if (key == "d") {
      h.degree = parse_header_int(value, line, key);
      if (*h.degree < 0)
        throw ParseError("line " + std::to_string(line) + ": d must be >= 0", 0, line);
    } else if (key == "order") {
      try {
        h.order = parse_order(value);
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line) + ": " + e.what(), 0, line);
      }
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown header key '" + key + "'",
                       0, line);
    }
  }
  return h;
}

}  // namespace

SubspaceDocument parse_subspace_document(std::string_view text,
                                         const SubspaceHeader& fallback) {
  SubspaceDocument doc;
  bool seen_content = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!seen_content) {
      seen_content = true;
      if (line.find('=') != std::string_view::npos) {
        doc.header = parse_header(line, line_no);
        doc.num_vars = doc.header.num_vars.value_or(fallback.num_vars.value_or(0));
        doc.degree = doc.header.degree ? doc.header.degree : fallback.degree;
        doc.order = doc.header.order.value_or(fallback.order.value_or(MonomialOrder::revlex));
        if (end == text.size()) break;
        continue;
      }
      doc.num_vars = fallback.num_vars.value_or(0);
      doc.degree = fallback.degree;
      doc.order = fallback.order.value_or(MonomialOrder::revlex);
    }
    if (doc.num_vars < 1)
      throw ParseError("line " + std::to_string(line_no) +
                           ": number of variables unknown (no header and no default)",
                       0, line_no);
    try {
      doc.forms.push_back(parse_form(line, doc.num_vars, doc.degree));
      doc.lines.push_back(line_no);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position(),
                       line_no);
    }
    if (end == text.size()) break;
  }
  if (!seen_content) {
    doc.num_vars = fallback.num_vars.value_or(0);
    doc.degree = fallback.degree;
    doc.order = fallback.order.value_or(MonomialOrder::revlex);
  }
  return doc;
}

std::string format_subspace(const Subspace& v) {
  std::ostringstream out;
  out << "s=" << v.num_vars() << " d=" << v.degree() << " order=" << order_name(v.order())
      << "\n";
  for (const auto& f : v.basis()) out << format_form(f) << "\n";
  return out.str();
}

}  // namespace ginprop
