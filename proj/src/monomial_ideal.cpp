#include "ginprop/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ginprop/form.hpp"

namespace ginprop {

int MonomialIdeal::max_generator_degree() const {
  int d = -1;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal minimalize(int num_vars, std::vector<Exponent> gens) {
  for (const auto& g : gens)
    if (g.num_vars() != static_cast<std::size_t>(num_vars))
      throw std::invalid_argument("generator lives in a different ring");
  // Ascending degree puts every potential divisor before its multiples.
  std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return compare_monomials(MonomialOrder::revlex, a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal ideal(num_vars);
  for (const auto& g : gens) {
    const bool redundant = std::any_of(ideal.generators_.begin(), ideal.generators_.end(),
                                       [&](const Exponent& h) { return h.divides(g); });
    if (!redundant) ideal.generators_.push_back(g);
  }
  return ideal;
}

bool contains_monomial(const MonomialIdeal& ideal, const Exponent& m) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Exponent& g) { return g.divides(m); });
}

MonomialSet degree_part(const MonomialIdeal& ideal, int degree) {
  MonomialSet out(ideal.num_vars(), degree);
  for (const auto& m : monomials_of_degree(ideal.num_vars(), degree))
    if (contains_monomial(ideal, m)) out.insert(m);
  return out;
}

long hilbert_function(const MonomialIdeal& ideal, int degree) {
  if (degree < 0) return 0;
  long count = 0;
  for (const auto& m : monomials_of_degree(ideal.num_vars(), degree))
    if (!contains_monomial(ideal, m)) ++count;
  return count;
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 1; i < g.num_vars(); ++i) {
      if (g[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        Exponent moved = g;
        --moved[i];
        ++moved[j];
        if (!contains_monomial(ideal, moved)) return false;
      }
    }
  }
  return true;
}

MonomialIdeal colon_by_last_variable(const MonomialIdeal& ideal) {
  const std::size_t last = ideal.num_vars() - 1;
  std::vector<Exponent> gens;
  for (auto g : ideal.generators()) {
    if (g[last] > 0) --g[last];
    gens.push_back(std::move(g));
  }
  return minimalize(ideal.num_vars(), std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

MonomialIdeal parse_ideal(std::string_view text, int num_vars) {
  std::vector<Exponent> gens;
  std::string cleaned;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') {
      in_comment = false;
      cleaned += ',';
      continue;
    }
    if (!in_comment && c != '(' && c != ')') cleaned += c;
  }
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    auto end = cleaned.find(',', start);
    if (end == std::string::npos) end = cleaned.size();
    std::string token = cleaned.substr(start, end - start);
    start = end + 1;
    const auto first = token.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      token = token.substr(first, token.find_last_not_of(" \t\r") - first + 1);
      if (token != "0") gens.push_back(parse_monomial(token, num_vars));
    }
    if (end == cleaned.size()) break;
  }
  return minimalize(num_vars, std::move(gens));
}

long hilbert_target(const std::vector<long>& hf, int degree) {
  if (hf.empty()) throw std::invalid_argument("empty Hilbert function");
  return degree < static_cast<int>(hf.size()) ? hf[degree] : hf.back();
}

// ---------------------------------------------------------------------------

namespace {

class CandidateSearch {
 public:
  CandidateSearch(int num_vars, const std::vector<long>& hf, int dmax)
      : num_vars_(num_vars), hf_(hf), dmax_(dmax) {}

  std::vector<MonomialIdeal> run() {
    pieces_.clear();
    extend(0);
    std::sort(found_.begin(), found_.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                return a.generators() < b.generators();
              });
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return found_;
  }

 private:
  using Piece = std::set<Exponent>;

  Piece multiples_of_previous(int degree) const {
    Piece out;
    if (degree == 0 || pieces_.empty()) return out;
    for (const auto& m : pieces_.back())
      for (int k = 0; k < num_vars_; ++k) out.insert(m + Exponent::unit(num_vars_, k));
    return out;
  }

  long target_size(int degree) const {
    return count_monomials(num_vars_, degree) - hilbert_target(hf_, degree);
  }

  void extend(int degree) {
    Piece forced = multiples_of_previous(degree);
    if (degree == dmax_ + 1) {
      if (static_cast<long>(forced.size()) == target_size(degree)) accept();
      return;
    }
    const long need = target_size(degree) - static_cast<long>(forced.size());
    if (need < 0) return;
    std::vector<Exponent> pool;
    for (const auto& m : sorted_monomials(num_vars_, degree, MonomialOrder::revlex))
      if (!forced.count(m)) pool.push_back(m);
    choose(degree, forced, pool, 0, need);
  }

  // Borel moves x_i -> x_j (j < i) raise a monomial in revlex, so walking the
  // pool in descending revlex decides every elementary move before its source.
  bool borel_ups_present(const Exponent& m, const Piece& piece) const {
    for (int i = 1; i < num_vars_; ++i) {
      if (m[i] == 0) continue;
      Exponent up = m;
      --up[i];
      ++up[i - 1];
      if (!piece.count(up)) return false;
    }
    return true;
  }

  void choose(int degree, Piece& piece, const std::vector<Exponent>& pool,
              std::size_t index, long need) {
    if (need == 0) {
      pieces_.push_back(piece);
      extend(degree + 1);
      pieces_.pop_back();
      return;
    }
    if (static_cast<long>(pool.size() - index) < need) return;
    const Exponent& m = pool[index];
    if (borel_ups_present(m, piece)) {
      piece.insert(m);
      choose(degree, piece, pool, index + 1, need - 1);
      piece.erase(m);
    }
    choose(degree, piece, pool, index + 1, need);
  }

  void accept() {
    std::vector<Exponent> gens;
    for (const auto& piece : pieces_) gens.insert(gens.end(), piece.begin(), piece.end());
    MonomialIdeal ideal = minimalize(num_vars_, std::move(gens));
    if (!is_borel_fixed(ideal)) return;
    if (!(colon_by_last_variable(ideal) == ideal)) return;
    for (int d = 0; d <= dmax_ + 1; ++d)
      if (hilbert_function(ideal, d) != hilbert_target(hf_, d)) return;
    const std::size_t last = num_vars_ - 1;
    for (const auto& g : ideal.generators())
      if (g[last] != 0)
        throw std::logic_error("saturated Borel-fixed candidate has a generator involving x" +
                               std::to_string(num_vars_) + ": " + format_ideal(ideal));
    found_.push_back(std::move(ideal));
  }

  int num_vars_;
  const std::vector<long>& hf_;
  int dmax_;
  std::vector<Piece> pieces_;
  std::vector<MonomialIdeal> found_;
};

}  // namespace

std::vector<MonomialIdeal> enumerate_gin_candidates(int num_vars,
                                                    const std::vector<long>& hf,
                                                    int dmax) {
  if (num_vars < 1) throw std::invalid_argument("need at least one variable");
  if (dmax < 0) throw std::invalid_argument("dmax must be >= 0");
  if (hf.empty()) throw std::invalid_argument("empty Hilbert function");
  return CandidateSearch(num_vars, hf, dmax).run();
}

}  // namespace ginprop
