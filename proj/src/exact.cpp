#include "ginv/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginv {

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    Rational inv = m[rank][c];
    for (std::size_t j = c; j < cols; ++j) m[rank][j] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t sparse_rational_rank(
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows) {
  std::size_t rank = 0;
  auto prune = [](std::vector<std::pair<std::size_t, Rational>>& r) {
    r.erase(std::remove_if(r.begin(), r.end(),
                           [](const auto& e) { return e.second == 0; }),
            r.end());
  };
  for (auto& r : rows) prune(r);
  while (true) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i].empty() && (best == rows.size() || rows[i].size() < rows[best].size()))
        best = i;
    if (best == rows.size()) break;
    auto pivot_row = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    ++rank;
    const std::size_t pivot_col = pivot_row[0].first;
    const Rational pivot_val = pivot_row[0].second;
    for (auto& r : rows) {
      auto it = std::find_if(r.begin(), r.end(),
                             [&](const auto& e) { return e.first == pivot_col; });
      if (it == r.end()) continue;
      Rational f = it->second / pivot_val;
      // r -= f * pivot_row (merge sorted by column)
      std::vector<std::pair<std::size_t, Rational>> merged;
      std::size_t ia = 0, ib = 0;
      while (ia < r.size() || ib < pivot_row.size()) {
        if (ib == pivot_row.size() || (ia < r.size() && r[ia].first < pivot_row[ib].first)) {
          merged.push_back(r[ia++]);
        } else if (ia == r.size() || pivot_row[ib].first < r[ia].first) {
          merged.emplace_back(pivot_row[ib].first, -f * pivot_row[ib].second);
          ++ib;
        } else {
          Rational v = r[ia].second - f * pivot_row[ib].second;
          if (v != 0) merged.emplace_back(r[ia].first, std::move(v));
          ++ia;
          ++ib;
        }
      }
      r = std::move(merged);
    }
  }
  return rank;
}

// Phase-1 simplex on the tableau for A x - s = b, x,s >= 0 with artificials.
bool lp_feasible(const std::vector<std::vector<Rational>>& A,
                 const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  if (m == 0) return true;
  const std::size_t n = A[0].size();
  // columns: x (n) | surplus s (m) | artificial a (m) ; rows: m constraints
  const std::size_t total = n + 2 * m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(total + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;  // keep rhs nonnegative
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? -A[i][j] : A[i][j];
    T[i][n + i] = flip ? Rational(1) : Rational(-1);
    T[i][n + m + i] = 1;
    T[i][total] = flip ? -b[i] : b[i];
    basis[i] = n + m + i;
  }
  // objective: minimize sum of artificials -> row of reduced costs
  std::vector<Rational> obj(total + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= total; ++j) obj[j] += T[i][j];
  // artificial columns have cost 1; reduced cost = sum(rows) for others
  for (std::size_t i = 0; i < m; ++i) obj[n + m + i] = 0;

  while (true) {
    // Bland: smallest index with positive reduced cost
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter == total) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][total] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 simplex unbounded");
    // pivot
    Rational piv = T[leave][enter];
    for (std::size_t j = 0; j <= total; ++j) T[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= total; ++j) T[i][j] -= f * T[leave][j];
    }
    Rational f = obj[enter];
    for (std::size_t j = 0; j <= total; ++j) obj[j] -= f * T[leave][j];
    basis[leave] = enter;
  }
  return obj[total] == 0;  // all artificials driven to zero
}

}  // namespace ginv
