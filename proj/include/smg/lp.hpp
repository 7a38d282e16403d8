#pragma once

#include <vector>

#include "smg/rational.hpp"

namespace smg {

using Matrix = std::vector<std::vector<Rational>>;

/// Throws std::invalid_argument on an empty or ragged matrix.
void check_matrix(const Matrix& m, const char* what);

/// max c^T y  s.t.  A y <= b, y >= 0, with b >= 0 so the origin is feasible.
/// Exact tableau simplex with Bland's rule. `bounded` is false when the
/// objective is unbounded; `duals` holds the optimal row prices.
struct LpResult {
  bool bounded = true;
  Rational objective;
  std::vector<Rational> primal;
  std::vector<Rational> duals;
};
LpResult maximize_standard(const Matrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

/// Mixed extension of the matrix game where the row player maximizes g.
struct MatrixGameSolution {
  Rational value;
  std::vector<Rational> row_strategy;
  std::vector<Rational> col_strategy;
};
MatrixGameSolution solve_matrix_game(const Matrix& g);

}  // namespace smg
