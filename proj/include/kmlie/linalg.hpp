// Exact rational linear algebra: sparse Gaussian elimination, kernels, rank.
// Pivots are chosen by a smallest-denominator heuristic to limit coefficient
// blow-up; everything stays in mpq, no tolerances.
#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "kmlie/numeric.hpp"

namespace kmlie {

// One sparse row: (column, value) sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rat>>;

inline SparseRow row_axpy(const SparseRow& a, const Rat& c, const SparseRow& b) {
  // a + c*b
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat v = c * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      Rat v = a[i].second + c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

struct SparseMat {
  int ncols = 0;
  std::vector<SparseRow> rows;

  void add_row(SparseRow r) {
    if (!r.empty()) ncols = std::max(ncols, r.back().first + 1);
    rows.push_back(std::move(r));
  }

  void set(int r, int c, const Rat& v) {
    if (r >= static_cast<int>(rows.size())) rows.resize(r + 1);
    ncols = std::max(ncols, c + 1);
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
      if (v == 0)
        row.erase(it);
      else
        it->second = v;
    } else if (v != 0) {
      row.insert(it, {c, v});
    }
  }
};

// Row echelon state after elimination.
struct Echelon {
  std::vector<SparseRow> rows;  // each begins at its pivot column
  std::vector<int> pivot_col;   // per kept row
  int ncols = 0;

  int rank() const { return static_cast<int>(rows.size()); }
};

namespace detail {
inline size_t denom_size(const Rat& q) { return mpz_sizeinbase(q.get_den().get_mpz_t(), 2); }
}  // namespace detail

inline Echelon echelon_form(const SparseMat& m) {
  Echelon e;
  e.ncols = m.ncols;
  std::vector<SparseRow> work = m.rows;
  // pending rows processed column by column
  for (int col = 0; col < m.ncols; ++col) {
    // pick the pending row with a leading entry in this column whose leading
    // value has the smallest denominator (ties: smallest numerator size)
    int best = -1;
    size_t best_den = 0, best_num = 0;
    for (size_t r = 0; r < work.size(); ++r) {
      if (work[r].empty() || work[r].front().first != col) continue;
      size_t d = detail::denom_size(work[r].front().second);
      size_t n = mpz_sizeinbase(work[r].front().second.get_num().get_mpz_t(), 2);
      if (best < 0 || d < best_den || (d == best_den && n < best_num)) {
        best = static_cast<int>(r);
        best_den = d;
        best_num = n;
      }
    }
    if (best < 0) continue;
    SparseRow piv = std::move(work[best]);
    work.erase(work.begin() + best);
    Rat lead = piv.front().second;
    for (auto& [c, v] : piv) v /= lead;
    for (auto& row : work) {
      if (!row.empty() && row.front().first == col) row = row_axpy(row, -row.front().second, piv);
    }
    e.pivot_col.push_back(col);
    e.rows.push_back(std::move(piv));
  }
  return e;
}

inline int rank(const SparseMat& m) { return echelon_form(m).rank(); }

// Back-substitute to reduced echelon form.
inline void reduce(Echelon& e) {
  for (int i = static_cast<int>(e.rows.size()) - 1; i >= 0; --i) {
    for (int j = 0; j < i; ++j) {
      // eliminate pivot_col[i] from row j
      const int pc = e.pivot_col[i];
      auto& row = e.rows[j];
      auto it = std::lower_bound(row.begin(), row.end(), pc,
                                 [](const auto& p, int col) { return p.first < col; });
      if (it != row.end() && it->first == pc) row = row_axpy(row, -it->second, e.rows[i]);
    }
  }
}

// Basis of {x : M x = 0}, one dense vector per free column, deterministic order.
inline std::vector<VecQ> kernel_basis(const SparseMat& m) {
  Echelon e = echelon_form(m);
  reduce(e);
  std::vector<bool> is_pivot(m.ncols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<VecQ> basis;
  for (int free = 0; free < m.ncols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(m.ncols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < e.rows.size(); ++r) {
      const auto& row = e.rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), free,
                                 [](const auto& p, int col) { return p.first < col; });
      if (it != row.end() && it->first == free) v[e.pivot_col[r]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact determinant of a dense integer matrix (Bareiss fraction-free).
inline Int det_bareiss(std::vector<VecZ> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Rank of a set of rational vectors (as rows).
inline int rank_of(const std::vector<VecQ>& vectors) {
  SparseMat m;
  for (const auto& v : vectors) {
    SparseRow r;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) r.emplace_back(static_cast<int>(j), v[j]);
    m.ncols = std::max(m.ncols, static_cast<int>(v.size()));
    m.rows.push_back(std::move(r));
  }
  return rank(m);
}

}  // namespace kmlie
