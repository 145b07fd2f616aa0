#ifndef GINPROP_SUBSPACE_HPP
#define GINPROP_SUBSPACE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ginprop/coordinate_change.hpp"
#include "ginprop/form.hpp"
#include "ginprop/monomial_set.hpp"
#include "ginprop/random.hpp"

namespace ginprop {

/// A subspace V of S_d stored as its reduced echelon basis with respect to a
/// monomial order: every basis form has leading coefficient 1, its leading
/// monomial occurs in no other basis form, and the basis is sorted by
/// descending leading monomial. Two subspaces are equal iff their bases are
/// equal term by term.
class Subspace {
 public:
  static Subspace zero(int num_vars, int degree, MonomialOrder order);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  MonomialOrder order() const { return order_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Form>& basis() const { return basis_; }

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(int num_vars, int degree, MonomialOrder order, std::vector<Form> basis)
      : num_vars_(num_vars), degree_(degree), order_(order), basis_(std::move(basis)) {}

  friend Subspace echelonize(std::span<const Form>, int, int, MonomialOrder);

  int num_vars_;
  int degree_;
  MonomialOrder order_;
  std::vector<Form> basis_;
};

// Canonical reduced echelon basis of the span of `forms`. The list may be
// dependent, empty, scaled or shuffled; the result depends only on the span.
// Throws std::invalid_argument on mixed degrees or rings.
Subspace echelonize(std::span<const Form> forms, int num_vars, int degree,
                    MonomialOrder order);
// Ring and degree taken from the first form; the list must be nonempty.
Subspace echelonize(std::span<const Form> forms, MonomialOrder order);

// Same span, re-echelonized for another order.
Subspace with_order(const Subspace& v, MonomialOrder order);

// Leading monomials of the echelon basis.
MonomialSet initial_subspace(const Subspace& v);

bool contains(const Subspace& v, const Form& f);
// Every basis form of `inner` lies in `outer`.
bool is_subspace_of(const Subspace& inner, const Subspace& outer);

Subspace transform_subspace(const Subspace& v, const CoordinateChange& change);

// Image of V in S/(l), in s-1 variables (see restrict_form).
Subspace restrict_subspace(const Subspace& v, const Form& l);

// Span of `dim` random forms with integer coefficients in [-bound, bound],
// re-drawn until independent. Deterministic in `seed`.
Subspace random_subspace(const RingContext& ring, int degree, int dim,
                         std::uint64_t seed, int bound,
                         MonomialOrder order = MonomialOrder::revlex);

// Random form of degree d with integer coefficients in [-bound, bound];
// may be zero.
Form random_form(SeededRng& rng, int num_vars, int degree, int bound);

Subspace full_graded_piece(int num_vars, int degree, MonomialOrder order);

// Subspace file: a header line "s=<int> d=<int> order=<revlex|lex|mixed>"
// followed by one form per line. '#' starts a comment. Header fields are
// optional; missing ones fall back to the caller's defaults.
struct SubspaceHeader {
  std::optional<int> num_vars;
  std::optional<int> degree;
  std::optional<MonomialOrder> order;
};

struct SubspaceDocument {
  SubspaceHeader header;  // as written in the file
  int num_vars = 0;       // effective values after fallback
  std::optional<int> degree;
  MonomialOrder order = MonomialOrder::revlex;
  std::vector<Form> forms;
  std::vector<std::size_t> lines;  // 1-based source line of each form
};

// Errors are ParseError carrying the 1-based line number.
SubspaceDocument parse_subspace_document(std::string_view text,
                                         const SubspaceHeader& fallback);
std::string format_subspace(const Subspace& v);

}  // namespace ginprop

#endif
