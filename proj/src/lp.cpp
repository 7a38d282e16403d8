#include "smg/lp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smg {

void check_matrix(const Matrix& m, const char* what) {
  if (m.empty() || m.front().empty()) throw std::invalid_argument(std::string(what) + ": matrix must be nonempty");
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw std::invalid_argument(std::string(what) + ": ragged matrix");
  }
}

LpResult maximize_standard(const Matrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  for (const auto& row : A) {
    if (row.size() != n) throw std::invalid_argument("lp: constraint width mismatch");
  }
  if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
  for (const auto& bi : b) {
    if (bi.sign() < 0) throw std::invalid_argument("lp: rhs must be nonnegative");
  }

  // Columns: n structural, m slack, then rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) T[r][j] = A[r][j];
    T[r][n + r] = 1;
    T[r][width - 1] = b[r];
    basis[r] = n + r;
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];

  LpResult result;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (T[m][j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (T[r][enter].sign() <= 0) continue;
      Rational ratio = T[r][width - 1] / T[r][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      result.bounded = false;
      return result;
    }

    const Rational pivot = T[leave][enter];
    for (auto& x : T[leave]) x /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || T[r][enter].sign() == 0) continue;
      const Rational f = T[r][enter];
      for (std::size_t j = 0; j < width; ++j) T[r][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  result.objective = T[m][width - 1];
  result.primal.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) result.primal[basis[r]] = T[r][width - 1];
  }
  result.duals.resize(m);
  for (std::size_t r = 0; r < m; ++r) result.duals[r] = T[m][n + r];
  return result;
}

MatrixGameSolution solve_matrix_game(const Matrix& g) {
  check_matrix(g, "matrix game");
  Rational lo = g[0][0];
  for (const auto& row : g) {
    for (const auto& x : row) lo = std::min(lo, x);
  }
  const Rational shift = Rational(1) - lo;
  Matrix shifted = g;
  for (auto& row : shifted) {
    for (auto& x : row) x += shift;
  }
  const std::size_t rows = g.size();
  const std::size_t cols = g.front().size();
  auto lp = maximize_standard(shifted, std::vector<Rational>(rows, Rational(1)), std::vector<Rational>(cols, Rational(1)));
  if (!lp.bounded || lp.objective.sign() <= 0) throw std::logic_error("matrix game LP failed");

  MatrixGameSolution sol;
  sol.value = Rational(1) / lp.objective - shift;
  sol.col_strategy.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) sol.col_strategy[j] = lp.primal[j] / lp.objective;
  sol.row_strategy.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) sol.row_strategy[i] = lp.duals[i] / lp.objective;
  return sol;
}

}  // namespace smg
