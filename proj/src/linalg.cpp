#include "operm/linalg.hpp"

#include <stdexcept>

namespace operm {

void RowSpace::reduce(std::vector<Rat>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c == 0) continue;
    Rat factor = c;  // pivot entries are 1
    for (int j = 0; j < dim_; ++j)
      if (rows_[r][j] != 0) v[j] -= factor * rows_[r][j];
  }
}

bool RowSpace::insert(std::vector<Rat> v) {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("row space: dimension mismatch");
  reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Rat lead = v[pivot];
  for (int j = 0; j < dim_; ++j) v[j] /= lead;
  // back-substitute into existing rows to keep the form reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat c = rows_[r][pivot];
    if (c == 0) continue;
    for (int j = 0; j < dim_; ++j)
      if (v[j] != 0) rows_[r][j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::contains(std::vector<Rat> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("row space: dimension mismatch");
  reduce(v);
  for (const Rat& c : v)
    if (c != 0) return false;
  return true;
}

int rank_of(const std::vector<std::vector<Rat>>& rows, int dim) {
  RowSpace space(dim);
  for (const auto& r : rows) space.insert(r);
  return space.rank();
}

}  // namespace operm
