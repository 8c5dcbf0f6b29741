// Dense exact linear algebra over Q.
#pragma once

#include "pushpull/rational.hpp"

#include <optional>
#include <vector>

namespace pushpull {

class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static LinMap from_rows(const RatMat& rows, std::size_t cols);
  static LinMap identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  RatVec row(std::size_t r) const;
  RatVec apply(const RatVec& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Reduced row echelon form; `pivots[k]` is the pivot column of row k.
struct Rref {
  LinMap reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(LinMap m);
std::size_t rank(const LinMap& m);

/// Basis of the right kernel; one vector per free column (free entry 1).
std::vector<RatVec> kernel(const LinMap& m);

/// Particular solution of m x = rhs with all free variables zero, if solvable.
std::optional<RatVec> solve(const LinMap& m, const RatVec& rhs);

/// Determinant of a square matrix given as rows.
Rat determinant(RatMat rows);

/// Affine rank (dimension of the affine hull) of a point set; -1 when empty.
int affine_dimension(const std::vector<RatVec>& points);

}  // namespace pushpull
