#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "smg/geometry.hpp"
#include "smg/lp.hpp"
#include "smg/piecewise.hpp"
#include "smg/rational.hpp"

namespace smg {

enum class GameClass { FiniteBimatrix, ZeroSum, StrictlyCompetitive, Potential, Transfer, RepeatedStage };

std::string_view to_string(GameClass c);

/// Player 1 is the man (row player), player 2 the woman (column player).
enum class Role { Row, Col };

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A payoff level of a zero-sum (or strictly competitive) game realized by
/// mixing two pure cells that share a row or a column:
/// level = (1 - weight) * g(from) + weight * g(to).
struct LevelPoint {
  Rational level;
  Cell from;
  Cell to;
  Rational weight;
  friend bool operator==(const LevelPoint&, const LevelPoint&) = default;
};

/// Net transfer t paid to player 1.
struct TransferPoint {
  Rational t;
  friend bool operator==(const TransferPoint&, const TransferPoint&) = default;
};

/// Long-run frequencies of stage cells; the payoff is the weighted average.
struct Mixture {
  std::vector<std::pair<Cell, Rational>> weights;
  friend bool operator==(const Mixture&, const Mixture&) = default;
};

using Realization = std::variant<Cell, LevelPoint, TransferPoint, Mixture>;

struct Contract {
  std::size_t id = 0;
  Realization strategy;
  Rational u;
  Rational v;
  friend bool operator==(const Contract&, const Contract&) = default;
};

struct BimatrixPayload {
  Matrix U, V;
};
struct ZeroSumPayload {
  Matrix g;
};
/// u = F(g), v = H(-g).
struct CompetitivePayload {
  Matrix g;
  PiecewiseLinear F, H;
};
struct PotentialPayload {
  Matrix U, V, Phi;
};
/// Grid {t_min, t_min + step, ..., t_max}; u = Fu(t), v = Fv(-t).
struct TransferPayload {
  Rational t_min, t_max, step;
  PiecewiseLinear Fu, Fv;
};
struct RepeatedPayload {
  Matrix U, V;
};

using Payload =
    std::variant<BimatrixPayload, ZeroSumPayload, CompetitivePayload, PotentialPayload, TransferPayload, RepeatedPayload>;

/// Immutable two-player game with a finite contract menu. Copies share state.
class Game {
 public:
  static Game bimatrix(Matrix U, Matrix V);
  static Game zero_sum(Matrix g, Rational resolution);
  static Game strictly_competitive(Matrix g, PiecewiseLinear F, PiecewiseLinear H, Rational resolution);
  static Game potential(Matrix U, Matrix V, Matrix Phi);
  static Game transfer(Rational t_min, Rational t_max, Rational step, PiecewiseLinear Fu, PiecewiseLinear Fv);
  static Game repeated(Matrix U, Matrix V, Rational resolution);

  GameClass kind() const;
  const Payload& payload() const;
  template <class T>
  const T& as() const {
    return std::get<T>(payload());
  }

  /// Grid step for level, transfer and repeated classes; absent for pure classes.
  std::optional<Rational> resolution() const;

  const std::vector<Contract>& menu() const;
  /// Throws std::out_of_range for an unknown id.
  const Contract& contract(std::size_t id) const;
  /// True iff `c` is exactly the menu entry with its id.
  bool owns(const Contract& c) const;

  /// Payoff recomputed from the realization. Throws std::invalid_argument for a
  /// contract that is not on this game's menu.
  std::pair<Rational, Rational> payoff(const Contract& c) const;
  /// Payoff of an arbitrary realization (no menu membership required).
  std::pair<Rational, Rational> evaluate(const Realization& r) const;

  /// Menu ids the given player can reach by a unilateral deviation that
  /// strictly raises his or her own payoff.
  std::vector<std::size_t> profitable_deviations(const Contract& c, Role who) const;
  bool is_nash(const Contract& c) const;

  /// Pure cell of a contract in the pure-action classes.
  std::optional<Cell> pure_cell(const Contract& c) const;
  bool has_pure_actions() const;
  std::size_t rows() const;
  std::size_t cols() const;

  /// Level classes (zero-sum, strictly competitive, transfer): the scalar each
  /// contract sits at (g or t) and the equilibrium level w.
  bool is_level_class() const;
  Rational level_of(const Contract& c) const;
  Rational pivot() const;
  /// Menu id of the contract at exactly this level, if any.
  std::optional<std::size_t> at_level(const Rational& level) const;
  /// Map a payoff bound of player 1 (resp. player 2) to level space.
  Rational level_for_u(const Rational& u) const;
  Rational level_for_v(const Rational& v) const;

  /// Repeated stage games: punishment levels, payoff hull and the
  /// non-punished region E = hull ∩ {u >= alpha, v >= beta}.
  Rational alpha() const;
  Rational beta() const;
  const PayoffPolygon& hull() const;
  const PayoffPolygon& equilibrium_region() const;

  /// Potential value of a contract (potential class only).
  const Rational& potential_of(const Contract& c) const;

  friend bool operator==(const Game& a, const Game& b) { return a.state_ == b.state_; }

 private:
  struct State;
  explicit Game(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  std::shared_ptr<const State> state_;
};

std::pair<Rational, Rational> payoff(const Game& game, const Contract& c);
const std::vector<Contract>& contract_menu(const Game& game);

/// Exact value of the mixed extension (row player maximizes g).
Rational zero_sum_value(const Matrix& g);
/// Mixed minmax levels (alpha for player 1, beta for player 2).
std::pair<Rational, Rational> punishment_levels(const Matrix& U, const Matrix& V);
PayoffPolygon feasible_payoff_hull(const Matrix& U, const Matrix& V);
/// Ordinal potential check. Throws std::invalid_argument on shape mismatch.
bool validate_potential(const Matrix& U, const Matrix& V, const Matrix& Phi);

}  // namespace smg
