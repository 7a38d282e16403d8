#include "smg/game.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace smg {

std::string_view to_string(GameClass c) {
  switch (c) {
    case GameClass::FiniteBimatrix: return "bimatrix";
    case GameClass::ZeroSum: return "zero-sum";
    case GameClass::StrictlyCompetitive: return "strictly-competitive";
    case GameClass::Potential: return "potential";
    case GameClass::Transfer: return "transfer";
    case GameClass::RepeatedStage: return "repeated";
  }
  return "?";
}

struct Game::State {
  GameClass kind{};
  Payload payload;
  std::optional<Rational> resolution;
  std::vector<Contract> menu;

  // level classes
  std::vector<Rational> levels;
  Rational pivot;

  // repeated
  Rational alpha, beta;
  PayoffPolygon hull, region;
  std::vector<Cell> vertex_cells;
};

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.size() != b.size() || a.front().size() != b.front().size()) {
    throw std::invalid_argument(std::string(what) + ": matrices must share dimensions");
  }
}

void require_positive(const Rational& r, const char* what) {
  if (r.sign() <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

std::vector<Contract> pure_menu(const Matrix& U, const Matrix& V) {
  std::vector<Contract> menu;
  const std::size_t n = U.front().size();
  for (std::size_t r = 0; r < U.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) menu.push_back({r * n + c, Cell{r, c}, U[r][c], V[r][c]});
  }
  return menu;
}

// Sorted grid lo, lo+step, ... (<= hi) together with hi and the extra levels.
std::vector<Rational> level_grid(const Rational& lo, const Rational& hi, const Rational& step,
                                 std::initializer_list<Rational> extra) {
  std::set<Rational> levels;
  for (Rational x = lo; x <= hi; x += step) levels.insert(x);
  levels.insert(hi);
  for (const auto& e : extra) {
    if (lo <= e && e <= hi) levels.insert(e);
  }
  return {levels.begin(), levels.end()};
}

struct Extremes {
  Cell lo, hi;
};

Extremes extreme_cells(const Matrix& g) {
  Extremes e;
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (g[r][c] < g[e.lo.row][e.lo.col]) e.lo = {r, c};
      if (g[r][c] > g[e.hi.row][e.hi.col]) e.hi = {r, c};
    }
  }
  return e;
}

const Rational& at(const Matrix& m, const Cell& c) { return m[c.row][c.col]; }

// Path lo -> (lo.row, hi.col) -> hi; each leg keeps a row or a column fixed,
// so the mixed profile on a leg is one pure strategy against a two-point mix.
LevelPoint realize_level(const Matrix& g, const Rational& level) {
  const auto ex = extreme_cells(g);
  const Cell corner{ex.lo.row, ex.hi.col};
  auto on_leg = [&](const Cell& a, const Cell& b) {
    const Rational ga = at(g, a);
    const Rational gb = at(g, b);
    Rational w = ga == gb ? Rational(0) : (level - ga) / (gb - ga);
    return LevelPoint{level, a, b, w};
  };
  if (level <= at(g, corner)) return on_leg(ex.lo, corner);
  return on_leg(corner, ex.hi);
}

Rational level_of_point(const Matrix& g, const LevelPoint& p) {
  if (p.from.row != p.to.row && p.from.col != p.to.col) {
    throw std::invalid_argument("level realization anchors must share a row or a column");
  }
  if (p.weight.sign() < 0 || p.weight > Rational(1)) throw std::invalid_argument("level weight outside [0,1]");
  if (p.from.row >= g.size() || p.to.row >= g.size() || p.from.col >= g[0].size() || p.to.col >= g[0].size()) {
    throw std::invalid_argument("level realization anchor outside the matrix");
  }
  return (Rational(1) - p.weight) * at(g, p.from) + p.weight * at(g, p.to);
}

std::vector<Contract> level_menu(const Matrix& g, const std::vector<Rational>& levels,
                                 const std::function<std::pair<Rational, Rational>(const Rational&)>& pay) {
  std::vector<Contract> menu;
  for (const auto& l : levels) {
    auto [u, v] = pay(l);
    menu.push_back({menu.size(), realize_level(g, l), u, v});
  }
  return menu;
}

Rational min_entry(const Matrix& g) {
  Rational m = g[0][0];
  for (const auto& row : g)
    for (const auto& x : row) m = std::min(m, x);
  return m;
}

Rational max_entry(const Matrix& g) {
  Rational m = g[0][0];
  for (const auto& row : g)
    for (const auto& x : row) m = std::max(m, x);
  return m;
}

void add_chord(const PayoffPolygon& poly, bool vertical, const Rational& x, const Rational& lo, const Rational& step,
               std::set<Point>& out) {
  const PayoffPolygon chord = vertical ? poly.clip(1, 0, x).clip(-1, 0, -x) : poly.clip(0, 1, x).clip(0, -1, -x);
  if (chord.empty()) return;
  Rational a = vertical ? chord.vertices().front().v : chord.vertices().front().u;
  Rational b = a;
  for (const auto& p : chord.vertices()) {
    const Rational& y = vertical ? p.v : p.u;
    a = std::min(a, y);
    b = std::max(b, y);
  }
  auto emit = [&](const Rational& y) { out.insert(vertical ? Point{x, y} : Point{y, x}); };
  emit(a);
  emit(b);
  Rational y = lo + ((a - lo) / step).ceil() * step;
  for (; y <= b; y += step) emit(y);
}

}  // namespace

Game Game::bimatrix(Matrix U, Matrix V) {
  check_matrix(U, "bimatrix U");
  check_matrix(V, "bimatrix V");
  require_same_shape(U, V, "bimatrix");
  auto s = std::make_shared<State>();
  s->kind = GameClass::FiniteBimatrix;
  s->menu = pure_menu(U, V);
  s->payload = BimatrixPayload{std::move(U), std::move(V)};
  return Game(std::move(s));
}

Game Game::potential(Matrix U, Matrix V, Matrix Phi) {
  check_matrix(U, "potential U");
  check_matrix(V, "potential V");
  check_matrix(Phi, "potential Phi");
  if (!validate_potential(U, V, Phi)) throw std::invalid_argument("potential: Phi is not an ordinal potential of (U, V)");
  auto s = std::make_shared<State>();
  s->kind = GameClass::Potential;
  s->menu = pure_menu(U, V);
  s->payload = PotentialPayload{std::move(U), std::move(V), std::move(Phi)};
  return Game(std::move(s));
}

Game Game::zero_sum(Matrix g, Rational resolution) {
  check_matrix(g, "zero-sum g");
  require_positive(resolution, "zero-sum resolution");
  auto s = std::make_shared<State>();
  s->kind = GameClass::ZeroSum;
  s->resolution = resolution;
  s->pivot = zero_sum_value(g);
  s->levels = level_grid(min_entry(g), max_entry(g), resolution, {s->pivot});
  s->menu = level_menu(g, s->levels, [](const Rational& l) { return std::make_pair(l, -l); });
  s->payload = ZeroSumPayload{std::move(g)};
  return Game(std::move(s));
}

Game Game::strictly_competitive(Matrix g, PiecewiseLinear F, PiecewiseLinear H, Rational resolution) {
  check_matrix(g, "strictly-competitive g");
  require_positive(resolution, "strictly-competitive resolution");
  if (F.breakpoints().empty() || H.breakpoints().empty()) {
    throw std::invalid_argument("strictly-competitive game needs both maps");
  }
  auto s = std::make_shared<State>();
  s->kind = GameClass::StrictlyCompetitive;
  s->resolution = resolution;
  s->pivot = zero_sum_value(g);
  const Rational slope = std::max({Rational(1), F.max_slope(), H.max_slope()});
  s->levels = level_grid(min_entry(g), max_entry(g), resolution / slope, {s->pivot});
  s->menu = level_menu(g, s->levels, [&](const Rational& l) { return std::make_pair(F(l), H(-l)); });
  s->payload = CompetitivePayload{std::move(g), std::move(F), std::move(H)};
  return Game(std::move(s));
}

Game Game::transfer(Rational t_min, Rational t_max, Rational step, PiecewiseLinear Fu, PiecewiseLinear Fv) {
  require_positive(step, "transfer step");
  if (t_max < t_min) throw std::invalid_argument("transfer grid: t_max below t_min");
  if (!((t_max - t_min) / step).is_integer()) {
    throw std::invalid_argument("transfer grid: step must divide t_max - t_min");
  }
  if (Fu.breakpoints().empty() || Fv.breakpoints().empty()) throw std::invalid_argument("transfer game needs both maps");
  auto s = std::make_shared<State>();
  s->kind = GameClass::Transfer;
  s->resolution = step;
  s->pivot = std::clamp(Rational(0), t_min, t_max);
  s->levels = level_grid(t_min, t_max, step, {s->pivot});
  for (const auto& t : s->levels) s->menu.push_back({s->menu.size(), TransferPoint{t}, Fu(t), Fv(-t)});
  s->payload = TransferPayload{std::move(t_min), std::move(t_max), std::move(step), std::move(Fu), std::move(Fv)};
  return Game(std::move(s));
}

Game Game::repeated(Matrix U, Matrix V, Rational resolution) {
  check_matrix(U, "repeated U");
  check_matrix(V, "repeated V");
  require_same_shape(U, V, "repeated");
  require_positive(resolution, "repeated resolution");
  auto s = std::make_shared<State>();
  s->kind = GameClass::RepeatedStage;
  s->resolution = resolution;
  std::tie(s->alpha, s->beta) = punishment_levels(U, V);
  s->hull = feasible_payoff_hull(U, V);
  s->region = s->hull.clip_lower(s->alpha, s->beta);

  for (const auto& vert : s->hull.vertices()) {
    bool found = false;
    for (std::size_t r = 0; r < U.size() && !found; ++r) {
      for (std::size_t c = 0; c < U[r].size() && !found; ++c) {
        if (U[r][c] == vert.u && V[r][c] == vert.v) {
          s->vertex_cells.push_back({r, c});
          found = true;
        }
      }
    }
  }

  std::set<Point> points(s->hull.vertices().begin(), s->hull.vertices().end());
  points.insert(s->region.vertices().begin(), s->region.vertices().end());
  const Point lo{min_entry(U), min_entry(V)};
  const Point hi{max_entry(U), max_entry(V)};
  for (Rational x = lo.u; x <= hi.u; x += resolution) add_chord(s->hull, true, x, lo.v, resolution, points);
  for (Rational y = lo.v; y <= hi.v; y += resolution) add_chord(s->hull, false, y, lo.u, resolution, points);

  for (const auto& p : points) {
    const auto w = s->hull.weights_of(p);
    Mixture mix;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k].sign() != 0) mix.weights.push_back({s->vertex_cells[k], w[k]});
    }
    s->menu.push_back({s->menu.size(), std::move(mix), p.u, p.v});
  }
  s->payload = RepeatedPayload{std::move(U), std::move(V)};
  return Game(std::move(s));
}

GameClass Game::kind() const { return state_->kind; }
const Payload& Game::payload() const { return state_->payload; }
std::optional<Rational> Game::resolution() const { return state_->resolution; }
const std::vector<Contract>& Game::menu() const { return state_->menu; }

const Contract& Game::contract(std::size_t id) const {
  if (id >= state_->menu.size()) throw std::out_of_range("contract id " + std::to_string(id) + " not on the menu");
  return state_->menu[id];
}

bool Game::owns(const Contract& c) const { return c.id < state_->menu.size() && state_->menu[c.id] == c; }

std::pair<Rational, Rational> Game::payoff(const Contract& c) const {
  if (!owns(c)) throw std::invalid_argument("contract " + std::to_string(c.id) + " does not belong to this game");
  return evaluate(c.strategy);
}

std::pair<Rational, Rational> Game::evaluate(const Realization& r) const {
  const auto& s = *state_;
  auto pure = [&](const Matrix& U, const Matrix& V) -> std::pair<Rational, Rational> {
    const auto* cell = std::get_if<Cell>(&r);
    if (!cell) throw std::invalid_argument("pure-action game expects a cell realization");
    if (cell->row >= U.size() || cell->col >= U[0].size()) throw std::invalid_argument("cell outside the matrix");
    return {at(U, *cell), at(V, *cell)};
  };
  switch (s.kind) {
    case GameClass::FiniteBimatrix: {
      const auto& p = std::get<BimatrixPayload>(s.payload);
      return pure(p.U, p.V);
    }
    case GameClass::Potential: {
      const auto& p = std::get<PotentialPayload>(s.payload);
      return pure(p.U, p.V);
    }
    case GameClass::ZeroSum: {
      const auto* lp = std::get_if<LevelPoint>(&r);
      if (!lp) throw std::invalid_argument("zero-sum game expects a level realization");
      const Rational g = level_of_point(std::get<ZeroSumPayload>(s.payload).g, *lp);
      return {g, -g};
    }
    case GameClass::StrictlyCompetitive: {
      const auto* lp = std::get_if<LevelPoint>(&r);
      if (!lp) throw std::invalid_argument("strictly competitive game expects a level realization");
      const auto& p = std::get<CompetitivePayload>(s.payload);
      const Rational g = level_of_point(p.g, *lp);
      return {p.F(g), p.H(-g)};
    }
    case GameClass::Transfer: {
      const auto* tp = std::get_if<TransferPoint>(&r);
      if (!tp) throw std::invalid_argument("transfer game expects a transfer realization");
      const auto& p = std::get<TransferPayload>(s.payload);
      return {p.Fu(tp->t), p.Fv(-tp->t)};
    }
    case GameClass::RepeatedStage: {
      const auto* mix = std::get_if<Mixture>(&r);
      if (!mix) throw std::invalid_argument("repeated game expects a mixture realization");
      const auto& p = std::get<RepeatedPayload>(s.payload);
      Rational u, v, total;
      for (const auto& [cell, w] : mix->weights) {
        if (w.sign() < 0) throw std::invalid_argument("negative mixture weight");
        if (cell.row >= p.U.size() || cell.col >= p.U[0].size()) throw std::invalid_argument("cell outside the matrix");
        u += w * at(p.U, cell);
        v += w * at(p.V, cell);
        total += w;
      }
      if (total != Rational(1)) throw std::invalid_argument("mixture weights must sum to 1");
      return {u, v};
    }
  }
  throw std::logic_error("unknown game class");
}

bool Game::has_pure_actions() const {
  return state_->kind == GameClass::FiniteBimatrix || state_->kind == GameClass::Potential;
}

bool Game::is_level_class() const {
  return state_->kind == GameClass::ZeroSum || state_->kind == GameClass::StrictlyCompetitive ||
         state_->kind == GameClass::Transfer;
}

std::size_t Game::rows() const {
  return std::visit(
      [](const auto& p) -> std::size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TransferPayload>) {
          return 0;
        } else if constexpr (std::is_same_v<T, ZeroSumPayload> || std::is_same_v<T, CompetitivePayload>) {
          return p.g.size();
        } else {
          return p.U.size();
        }
      },
      state_->payload);
}

std::size_t Game::cols() const {
  return std::visit(
      [](const auto& p) -> std::size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TransferPayload>) {
          return 0;
        } else if constexpr (std::is_same_v<T, ZeroSumPayload> || std::is_same_v<T, CompetitivePayload>) {
          return p.g.front().size();
        } else {
          return p.U.front().size();
        }
      },
      state_->payload);
}

std::optional<Cell> Game::pure_cell(const Contract& c) const {
  if (!has_pure_actions()) return std::nullopt;
  return std::get<Cell>(c.strategy);
}

Rational Game::level_of(const Contract& c) const {
  if (!is_level_class()) throw std::logic_error("level_of: not a level class");
  return state_->levels.at(c.id);
}

Rational Game::pivot() const {
  if (!is_level_class()) throw std::logic_error("pivot: not a level class");
  return state_->pivot;
}

std::optional<std::size_t> Game::at_level(const Rational& level) const {
  const auto& lv = state_->levels;
  auto it = std::lower_bound(lv.begin(), lv.end(), level);
  if (it == lv.end() || *it != level) return std::nullopt;
  return static_cast<std::size_t>(it - lv.begin());
}

Rational Game::level_for_u(const Rational& u) const {
  switch (state_->kind) {
    case GameClass::ZeroSum: return u;
    case GameClass::StrictlyCompetitive: return std::get<CompetitivePayload>(state_->payload).F.inverse(u);
    case GameClass::Transfer: return std::get<TransferPayload>(state_->payload).Fu.inverse(u);
    default: throw std::logic_error("level_for_u: not a level class");
  }
}

Rational Game::level_for_v(const Rational& v) const {
  switch (state_->kind) {
    case GameClass::ZeroSum: return -v;
    case GameClass::StrictlyCompetitive: return -std::get<CompetitivePayload>(state_->payload).H.inverse(v);
    case GameClass::Transfer: return -std::get<TransferPayload>(state_->payload).Fv.inverse(v);
    default: throw std::logic_error("level_for_v: not a level class");
  }
}

Rational Game::alpha() const {
  if (state_->kind != GameClass::RepeatedStage) throw std::logic_error("alpha: not a repeated game");
  return state_->alpha;
}

Rational Game::beta() const {
  if (state_->kind != GameClass::RepeatedStage) throw std::logic_error("beta: not a repeated game");
  return state_->beta;
}

const PayoffPolygon& Game::hull() const {
  if (state_->kind != GameClass::RepeatedStage) throw std::logic_error("hull: not a repeated game");
  return state_->hull;
}

const PayoffPolygon& Game::equilibrium_region() const {
  if (state_->kind != GameClass::RepeatedStage) throw std::logic_error("equilibrium_region: not a repeated game");
  return state_->region;
}

const Rational& Game::potential_of(const Contract& c) const {
  if (state_->kind != GameClass::Potential) throw std::logic_error("potential_of: not a potential game");
  const auto cell = std::get<Cell>(c.strategy);
  return at(std::get<PotentialPayload>(state_->payload).Phi, cell);
}

std::vector<std::size_t> Game::profitable_deviations(const Contract& c, Role who) const {
  if (!owns(c)) throw std::invalid_argument("contract " + std::to_string(c.id) + " does not belong to this game");
  std::vector<std::size_t> out;
  const auto& s = *state_;
  if (has_pure_actions()) {
    const Cell cell = std::get<Cell>(c.strategy);
    const std::size_t n = cols();
    if (who == Role::Row) {
      for (std::size_t r = 0; r < rows(); ++r) {
        const auto& d = s.menu[r * n + cell.col];
        if (r != cell.row && d.u > c.u) out.push_back(d.id);
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& d = s.menu[cell.row * n + k];
        if (k != cell.col && d.v > c.v) out.push_back(d.id);
      }
    }
    return out;
  }
  if (is_level_class()) {
    // Player 1 gains with the level, player 2 loses. Below the equilibrium
    // level player 1 can climb up to it; above it player 2 can push down to it.
    const Rational& l = s.levels[c.id];
    for (std::size_t k = 0; k < s.levels.size(); ++k) {
      const Rational& x = s.levels[k];
      if (who == Role::Row && l < s.pivot && l < x && x <= s.pivot) out.push_back(k);
      if (who == Role::Col && l > s.pivot && s.pivot <= x && x < l) out.push_back(k);
    }
    return out;
  }
  // Repeated: a deviation is punished down to the minmax level, so it only pays
  // for a player currently below that level.
  for (const auto& d : s.menu) {
    if (who == Role::Row && c.u < s.alpha && d.u > c.u) out.push_back(d.id);
    if (who == Role::Col && c.v < s.beta && d.v > c.v) out.push_back(d.id);
  }
  return out;
}

bool Game::is_nash(const Contract& c) const {
  return profitable_deviations(c, Role::Row).empty() && profitable_deviations(c, Role::Col).empty();
}

std::pair<Rational, Rational> payoff(const Game& game, const Contract& c) { return game.payoff(c); }

const std::vector<Contract>& contract_menu(const Game& game) { return game.menu(); }

Rational zero_sum_value(const Matrix& g) { return solve_matrix_game(g).value; }

std::pair<Rational, Rational> punishment_levels(const Matrix& U, const Matrix& V) {
  check_matrix(U, "stage U");
  check_matrix(V, "stage V");
  require_same_shape(U, V, "stage game");
  Matrix Vt(V.front().size(), std::vector<Rational>(V.size()));
  for (std::size_t r = 0; r < V.size(); ++r)
    for (std::size_t c = 0; c < V[r].size(); ++c) Vt[c][r] = V[r][c];
  return {zero_sum_value(U), zero_sum_value(Vt)};
}

PayoffPolygon feasible_payoff_hull(const Matrix& U, const Matrix& V) {
  check_matrix(U, "stage U");
  check_matrix(V, "stage V");
  require_same_shape(U, V, "stage game");
  std::vector<Point> pts;
  for (std::size_t r = 0; r < U.size(); ++r)
    for (std::size_t c = 0; c < U[r].size(); ++c) pts.push_back({U[r][c], V[r][c]});
  return PayoffPolygon::hull_of(std::move(pts));
}

bool validate_potential(const Matrix& U, const Matrix& V, const Matrix& Phi) {
  check_matrix(U, "potential U");
  check_matrix(V, "potential V");
  check_matrix(Phi, "potential Phi");
  require_same_shape(U, V, "potential");
  require_same_shape(U, Phi, "potential");
  const std::size_t m = U.size();
  const std::size_t n = U.front().size();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t r2 = 0; r2 < m; ++r2)
        if ((U[r2][c] - U[r][c]).sign() != (Phi[r2][c] - Phi[r][c]).sign()) return false;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t c2 = 0; c2 < n; ++c2)
        if ((V[r][c2] - V[r][c]).sign() != (Phi[r][c2] - Phi[r][c]).sign()) return false;
  return true;
}

}  // namespace smg
