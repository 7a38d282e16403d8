#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace smg::testing {

Rational median3(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<Rational> v{a, b, c};
  std::sort(v.begin(), v.end());
  return v[1];
}

bool naive_externally_stable(const Instance& inst, const MatchingProfile& pi, const Rational& eps) {
  std::vector<Rational> u(inst.num_men()), v(inst.num_women());
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    u[i] = inst.irp_man(i);
    if (const Contract* c = pi.contract_of_man(i)) {
      if (c->u < inst.irp_man(i)) return false;
      u[i] = c->u;
    }
  }
  for (std::size_t j = 0; j < inst.num_women(); ++j) {
    v[j] = inst.irp_woman(j);
    if (const Contract* c = pi.contract_of_woman(j)) {
      if (c->v < inst.irp_woman(j)) return false;
      v[j] = c->v;
    }
  }
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      if (pi.partner_of_man(i) == j) continue;
      for (const auto& c : inst.game(i, j).menu()) {
        if (c.u > u[i] + eps && c.v > v[j] + eps) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].sign() == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].sign() == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = b[r] / a[r][r];
  return x;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) s.push_back(k);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Rational maxmin_by_supports(const Matrix& g) {
  const std::size_t m = g.size(), n = g.at(0).size();
  std::optional<Rational> best;
  for (const auto& rows : subsets(m)) {
    for (const auto& cols : subsets(n)) {
      if (rows.size() != cols.size()) continue;
      const std::size_t k = rows.size();
      // Unknowns x_rows..., w. Equalize the chosen columns, mass one.
      std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1));
      std::vector<Rational> b(k + 1);
      for (std::size_t e = 0; e < k; ++e) {
        for (std::size_t s = 0; s < k; ++s) a[e][s] = g[rows[s]][cols[e]];
        a[e][k] = -1;
      }
      for (std::size_t s = 0; s < k; ++s) a[k][s] = 1;
      b[k] = 1;
      auto sol = solve_linear(a, b);
      if (!sol) continue;
      bool ok = true;
      for (std::size_t s = 0; s < k; ++s) ok = ok && (*sol)[s].sign() >= 0;
      if (!ok) continue;
      std::optional<Rational> worst;
      for (std::size_t c = 0; c < n; ++c) {
        Rational pay;
        for (std::size_t s = 0; s < k; ++s) pay += (*sol)[s] * g[rows[s]][c];
        if (!worst || pay < *worst) worst = pay;
      }
      if (!best || *worst > *best) best = worst;
    }
  }
  return *best;
}

Rational minmax_by_supports(const Matrix& g) {
  Matrix t(g.at(0).size(), std::vector<Rational>(g.size()));
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g[r].size(); ++c) t[c][r] = -g[r][c];
  }
  return -maxmin_by_supports(t);
}

std::vector<int> gale_shapley(const OrdinalModel& m) {
  const std::size_t nm = m.men.size(), nw = m.women.size();
  auto woman_idx = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(m.women.begin(), m.women.end(), s) - m.women.begin());
  };
  auto man_idx = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(m.men.begin(), m.men.end(), s) - m.men.begin());
  };
  std::vector<std::vector<std::size_t>> rank_w(nw, std::vector<std::size_t>(nm));
  for (std::size_t j = 0; j < nw; ++j) {
    for (std::size_t p = 0; p < nm; ++p) rank_w[j][man_idx(m.prefs_women[j][p])] = p;
  }
  std::vector<std::size_t> next(nm, 0);
  std::vector<int> wife(nm, -1), husband(nw, -1);
  std::vector<std::size_t> free;
  for (std::size_t i = nm; i-- > 0;) free.push_back(i);
  while (!free.empty()) {
    const std::size_t i = free.back();
    free.pop_back();
    if (next[i] == nw) continue;
    const std::size_t j = woman_idx(m.prefs_men[i][next[i]++]);
    if (husband[j] < 0) {
      husband[j] = static_cast<int>(i);
      wife[i] = static_cast<int>(j);
    } else if (rank_w[j][i] < rank_w[j][static_cast<std::size_t>(husband[j])]) {
      const auto old = static_cast<std::size_t>(husband[j]);
      wife[old] = -1;
      free.push_back(old);
      husband[j] = static_cast<int>(i);
      wife[i] = static_cast<int>(j);
    } else {
      free.push_back(i);
    }
  }
  return wife;
}

Matrix solan_U() {
  auto r = [](long long x) { return Rational(x); };
  return {{r(2), r(-10), r(3)}, {r(3), r(2), r(-10)}, {r(-10), r(3), r(2)}};
}

Matrix solan_V() {
  auto r = [](long long x) { return Rational(x); };
  return {{r(1), r(-10), r(0)}, {r(0), r(1), r(-10)}, {r(-10), r(0), r(1)}};
}

namespace {

// Is there a point of hull{(a_k, b_k)} with b >= 0 and a * scale > target?
bool improving_point(const long long a[3], const long long b[3], long long scale, long long target) {
  for (int k = 0; k < 3; ++k) {
    if (b[k] >= 0 && static_cast<__int128>(a[k]) * scale > target) return true;
  }
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      if (!(b[r] < 0 && b[s] >= 0)) continue;
      // Crossing of segment r-s with b = 0: a = (a_r b_s - a_s b_r) / (b_s - b_r).
      const __int128 num = static_cast<__int128>(a[r]) * b[s] - static_cast<__int128>(a[s]) * b[r];
      if (num * scale > static_cast<__int128>(target) * (b[s] - b[r])) return true;
    }
  }
  return false;
}

}  // namespace

SolanScan solan_mixed_grid_scan(int steps) {
  const long long U[3][3] = {{2, -10, 3}, {3, 2, -10}, {-10, 3, 2}};
  const long long V[3][3] = {{1, -10, 0}, {0, 1, -10}, {-10, 0, 1}};
  std::vector<std::array<long long, 3>> grid;
  for (long long p = 0; p <= steps; ++p) {
    for (long long q = 0; p + q <= steps; ++q) grid.push_back({p, q, steps - p - q});
  }
  SolanScan out;
  for (const auto& y : grid) {
    long long A[3], B[3];
    for (int r = 0; r < 3; ++r) {
      A[r] = B[r] = 0;
      for (int c = 0; c < 3; ++c) {
        A[r] += U[r][c] * y[c];
        B[r] += V[r][c] * y[c];
      }
    }
    for (const auto& x : grid) {
      ++out.grid_profiles;
      long long u = 0, v = 0, C[3], D[3];
      for (int r = 0; r < 3; ++r) {
        u += x[r] * A[r];
        v += x[r] * B[r];
      }
      if (u < 0 || v < 0) continue;
      ++out.feasible;
      // Row player: better u while the column player keeps v >= 0.
      if (improving_point(A, B, steps, u)) continue;
      for (int c = 0; c < 3; ++c) {
        C[c] = D[c] = 0;
        for (int r = 0; r < 3; ++r) {
          C[c] += x[r] * U[r][c];
          D[c] += x[r] * V[r][c];
        }
      }
      if (improving_point(D, C, steps, v)) continue;
      ++out.survivors;
    }
  }
  return out;
}

bool brute_force_constrained_equilibrium(const GameTree& tree, const TreeStrategy& s, const std::vector<Rational>& outs,
                                         std::size_t from) {
  const auto& base = outcome(tree, s, from);
  if (!meets_options(base, outs)) return false;
  // Decision nodes of the subgame.
  std::vector<std::size_t> inside;
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const TreeNode& n = tree.node(id);
    if (n.is_leaf()) continue;
    inside.push_back(id);
    stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  for (std::size_t p = 0; p < tree.players(); ++p) {
    std::vector<std::size_t> mine;
    for (std::size_t id : inside) {
      if (*tree.node(id).player == p) mine.push_back(id);
    }
    // Odometer over every strategy of player p inside the subgame.
    TreeStrategy alt = s;
    std::vector<std::size_t> digit(mine.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < mine.size(); ++k) alt[mine[k]] = digit[k];
      const auto& pay = outcome(tree, alt, from);
      if (pay[p] > base[p] && meets_options(pay, outs)) return false;
      std::size_t k = 0;
      while (k < mine.size() && ++digit[k] == tree.node(mine[k]).children.size()) digit[k++] = 0;
      if (k == mine.size()) break;
    }
  }
  return true;
}

bool hm_stable(const ContractsModel& m, const std::map<std::size_t, std::size_t>& allocation) {
  // Position in the list; unlisted contracts sit after everything.
  auto pos = [](const std::vector<std::optional<std::string>>& list, const std::optional<std::string>& what) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k] == what) return static_cast<long long>(k);
    }
    return static_cast<long long>(list.size()) + (what ? 1 : 0);
  };
  auto man_of = [&](const std::string& n) { return std::find(m.men.begin(), m.men.end(), n) - m.men.begin(); };
  auto woman_of = [&](const std::string& n) { return std::find(m.women.begin(), m.women.end(), n) - m.women.begin(); };

  std::map<std::size_t, std::optional<std::string>> held_m, held_w;
  for (auto [i, k] : allocation) {
    const ContractSpec& c = m.contracts.at(k);
    if (static_cast<std::size_t>(man_of(c.man)) != i) return false;
    const auto j = static_cast<std::size_t>(woman_of(c.woman));
    if (held_w.count(j)) return false;
    held_m[i] = c.name;
    held_w[j] = c.name;
    if (pos(m.prefs_men[i], c.name) > pos(m.prefs_men[i], std::nullopt)) return false;
    if (pos(m.prefs_women[j], c.name) > pos(m.prefs_women[j], std::nullopt)) return false;
  }
  for (const auto& c : m.contracts) {
    const auto i = static_cast<std::size_t>(man_of(c.man));
    const auto j = static_cast<std::size_t>(woman_of(c.woman));
    const auto hm = held_m.count(i) ? held_m[i] : std::nullopt;
    const auto hw = held_w.count(j) ? held_w[j] : std::nullopt;
    if (hm == c.name) continue;
    if (pos(m.prefs_men[i], c.name) < pos(m.prefs_men[i], hm) && pos(m.prefs_women[j], c.name) < pos(m.prefs_women[j], hw)) {
      return false;
    }
  }
  return true;
}

}  // namespace smg::testing
