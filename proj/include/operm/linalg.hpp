#pragma once

#include <vector>

#include "operm/algebra.hpp"

namespace operm {

/// Row space in reduced echelon form over exact rationals. Supports rank
/// queries, membership tests, and incremental span growth.
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds the vector to the span; returns true iff the rank grew.
  bool insert(std::vector<Rat> v);

  bool contains(std::vector<Rat> v) const;

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<Rat>& v) const;

  int dim_;
  std::vector<std::vector<Rat>> rows_;   // reduced, pivot 1
  std::vector<int> pivots_;              // pivot column per row, ascending insert order
};

int rank_of(const std::vector<std::vector<Rat>>& rows, int dim);

}  // namespace operm
