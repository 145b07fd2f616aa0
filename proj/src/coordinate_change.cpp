#include "ginprop/coordinate_change.hpp"

#include <stdexcept>
#include <utility>

namespace ginprop {

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Scalar factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

CoordinateChange::CoordinateChange(std::vector<std::vector<Scalar>> matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.empty()) throw std::invalid_argument("empty coordinate change");
  for (const auto& row : matrix_)
    if (row.size() != matrix_.size())
      throw std::invalid_argument("coordinate change must be square");
  if (determinant(matrix_) == 0)
    throw std::invalid_argument("singular coordinate change");
}

CoordinateChange CoordinateChange::identity(int num_vars) {
  std::vector<std::vector<Scalar>> m(num_vars, std::vector<Scalar>(num_vars, 0));
  for (int i = 0; i < num_vars; ++i) m[i][i] = 1;
  return CoordinateChange(std::move(m));
}

CoordinateChange CoordinateChange::permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n) throw std::invalid_argument("bad permutation");
    m[i][perm[i]] = 1;
  }
  return CoordinateChange(std::move(m));
}

Form CoordinateChange::image_of_variable(int index) const {
  return Form::linear(matrix_.at(index));
}

CoordinateChange CoordinateChange::operator*(const CoordinateChange& other) const {
  const int n = num_vars();
  if (other.num_vars() != n) throw std::invalid_argument("size mismatch");
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (matrix_[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) m[i][j] += matrix_[i][k] * other.matrix_[k][j];
    }
  return CoordinateChange(std::move(m));
}

Form apply_change(const Form& f, const CoordinateChange& change) {
  if (f.num_vars() != change.num_vars())
    throw std::invalid_argument("coordinate change has the wrong size");
  std::vector<Form> images;
  images.reserve(change.num_vars());
  for (int i = 0; i < change.num_vars(); ++i) images.push_back(change.image_of_variable(i));
  return apply_substitution(f, images);
}

}  // namespace ginprop
