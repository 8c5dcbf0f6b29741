#include "pushpull/hull.hpp"

#include "pushpull/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace pushpull {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  Bits operator&(const Bits& o) const {
    Bits r(*this);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RatVec v;
  Bits zero;
};

}  // namespace

RatMat extreme_rays(const RatMat& rows) {
  if (rows.empty()) throw std::invalid_argument("extreme_rays: no constraints");
  const std::size_t dim = rows.front().size();
  const std::size_t m = rows.size();

  // initial simplicial cone from the first independent rows
  std::vector<std::size_t> basis;
  {
    RatMat chosen;
    for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
      chosen.push_back(rows[i]);
      if (rank(LinMap::from_rows(chosen, dim)) == chosen.size()) {
        basis.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  if (basis.size() != dim) throw std::invalid_argument("extreme_rays: constraint matrix is rank deficient (cone not pointed)");

  std::vector<Ray> rays;
  {
    RatMat b;
    for (auto i : basis) b.push_back(rows[i]);
    LinMap bm = LinMap::from_rows(b, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      RatVec e(dim);
      e[k] = 1;
      auto col = solve(bm, e);
      Ray r{primitive(*col), Bits(m)};
      for (std::size_t j = 0; j < dim; ++j) {
        if (j != k) r.zero.set(basis[j]);
      }
      rays.push_back(std::move(r));
    }
  }

  std::vector<bool> used(m, false);
  for (auto i : basis) used[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    const RatVec& a = rows[i];
    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].v);
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] >= 0) {
        Ray kept = rays[r];
        if (val[r] == 0) kept.zero.set(i);
        next.push_back(std::move(kept));
      }
    }
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        RatVec w(dim);
        for (std::size_t k = 0; k < dim; ++k) w[k] = val[p] * rays[n].v[k] - val[n] * rays[p].v[k];
        Ray nr{primitive(w), common};
        nr.zero.set(i);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    used[i] = true;
  }

  RatMat out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pushpull
