#include "pushpull/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pushpull {

LinMap LinMap::from_rows(const RatMat& rows, std::size_t cols) {
  LinMap m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("LinMap::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

LinMap LinMap::identity(std::size_t n) {
  LinMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVec LinMap::row(std::size_t r) const {
  return RatVec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVec LinMap::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("LinMap::apply: length mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c) != 0 && v[c] != 0) s += at(r, c) * v[c];
    }
    out[r] = s;
  }
  return out;
}

Rref rref(LinMap m) {
  Rref out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(p, k), m.at(lead_row, k));
    }
    Rat inv = 1 / m.at(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (m.at(lead_row, k) != 0) m.at(lead_row, k) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, c) == 0) continue;
      Rat f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m.at(lead_row, k) != 0) m.at(r, k) -= f * m.at(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const LinMap& m) { return rref(m).rank(); }

std::vector<RatVec> kernel(const LinMap& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const LinMap& m, const RatVec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  LinMap aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  Rref red = rref(std::move(aug));
  RatVec x(m.cols());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    if (red.pivots[k] == m.cols()) return std::nullopt;
    x[red.pivots[k]] = red.reduced.at(k, m.cols());
  }
  return x;
}

Rat determinant(RatMat a) {
  std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  }
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

int affine_dimension(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  std::size_t n = points.front().size();
  LinMap m(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) m.at(i - 1, k) = points[i][k] - points[0][k];
  }
  return static_cast<int>(rank(m));
}

}  // namespace pushpull
