#include "planegen/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace pg {

namespace {

// Phase-1 simplex: decide feasibility of A x >= b over free x.
bool linear_feasible(const std::vector<std::vector<Q>>& A, const std::vector<Q>& b) {
  const std::size_t m = A.size();
  if (m == 0) return true;
  const std::size_t k = A[0].size();
  const std::size_t n = 2 * k + 2 * m;  // split vars, surplus, artificials
  const std::size_t art0 = 2 * k + m;

  // Rows: sum_j A_ij (p_j - n_j) - s_i + y_i = b_i, normalized to b_i >= 0.
  std::vector<std::vector<Q>> T(m, std::vector<Q>(n + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      T[i][j] = sign * A[i][j];
      T[i][k + j] = -sign * A[i][j];
    }
    T[i][2 * k + i] = -sign;
    T[i][art0 + i] = 1;
    T[i][n] = sign * b[i];
  }

  // Maximize -sum(artificials); reduced-cost row starts with the artificial
  // basis priced out.
  std::vector<Q> obj(n + 1, 0);
  for (std::size_t j = art0; j < n; ++j) obj[j] = -1;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = art0 + i;
    for (std::size_t j = 0; j <= n; ++j) obj[j] += T[i][j];
  }

  while (true) {
    // Bland's rule: entering column = smallest index with positive reduced cost.
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;

    std::size_t leave = m;
    Q best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] > 0) {
        Q ratio = T[i][n] / T[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) throw std::logic_error("phase-1 objective unbounded");

    Q piv = T[leave][enter];
    for (std::size_t j = 0; j <= n; ++j) T[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Q factor = T[i][enter];
      for (std::size_t j = 0; j <= n; ++j) T[i][j] -= factor * T[leave][j];
    }
    if (obj[enter] != 0) {
      Q factor = obj[enter];
      for (std::size_t j = 0; j <= n; ++j) obj[j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
  }

  return obj[n] == 0;  // all artificials driven to zero
}

}  // namespace

bool strict_homogeneous_feasible(const std::vector<std::vector<Q>>& strict_rows,
                                 const std::vector<std::vector<Q>>& weak_rows) {
  std::vector<std::vector<Q>> A;
  std::vector<Q> b;
  for (const auto& r : strict_rows) {
    A.push_back(r);
    b.push_back(1);
  }
  for (const auto& r : weak_rows) {
    A.push_back(r);
    b.push_back(0);
  }
  return linear_feasible(A, b);
}

}  // namespace pg
