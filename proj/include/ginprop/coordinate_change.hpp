#ifndef GINPROP_COORDINATE_CHANGE_HPP
#define GINPROP_COORDINATE_CHANGE_HPP

#include <vector>

#include "ginprop/form.hpp"
#include "ginprop/scalar.hpp"

namespace ginprop {

/// Invertible linear substitution x_i -> sum_j M[i][j] x_j.
///
/// Substituting M1 and then M2 equals substituting the product M1 * M2.
class CoordinateChange {
 public:
  // Throws std::invalid_argument for a non-square or singular matrix.
  explicit CoordinateChange(std::vector<std::vector<Scalar>> matrix);

  static CoordinateChange identity(int num_vars);
  // x_i -> x_{perm[i]} (0-based).
  static CoordinateChange permutation(const std::vector<int>& perm);

  int num_vars() const { return static_cast<int>(matrix_.size()); }
  const Scalar& at(int row, int col) const { return matrix_[row][col]; }
  const std::vector<std::vector<Scalar>>& matrix() const { return matrix_; }

  // The linear form that x_{index+1} is sent to.
  Form image_of_variable(int index) const;

  CoordinateChange operator*(const CoordinateChange& other) const;
  bool operator==(const CoordinateChange&) const = default;

 private:
  std::vector<std::vector<Scalar>> matrix_;
};

Scalar determinant(std::vector<std::vector<Scalar>> matrix);

Form apply_change(const Form& f, const CoordinateChange& change);

}  // namespace ginprop

#endif
