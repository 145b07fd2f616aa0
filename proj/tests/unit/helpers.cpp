#include "helpers.hpp"

#include <map>

namespace testutil {

int rank_oracle(const std::vector<Form>& fs) {
  std::map<Exponent, int> column;
  for (const auto& f : fs) {
    for (const auto& [e, c] : f.terms()) column.emplace(e, 0);
  }
  int k = 0;
  for (auto& [e, idx] : column) idx = k++;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& f : fs) {
    std::vector<mpq_class> row(static_cast<std::size_t>(k));
    for (const auto& [e, c] : f.terms()) row[static_cast<std::size_t>(column[e])] = c;
    rows.push_back(row);
  }
  int rank = 0;
  for (int col = 0; col < k && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      mpq_class t = rows[i][col] / rows[rank][col];
      for (int j = col; j < k; ++j) rows[i][j] -= t * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace testutil
