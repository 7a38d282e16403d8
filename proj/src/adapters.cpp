#include "smg/adapters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace smg {

namespace {

void require_distinct(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw std::invalid_argument(std::string("duplicate ") + what + " name");
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name, const char* what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument(std::string("unknown ") + what + " '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

// rank[k] = 1-based position of others[k] in the list.
std::vector<long long> ranks(const std::vector<std::string>& list, const std::vector<std::string>& others,
                             const std::string& owner) {
  if (list.size() != others.size()) throw std::invalid_argument("preference list of '" + owner + "' is incomplete");
  std::vector<long long> r(others.size(), 0);
  for (std::size_t pos = 0; pos < list.size(); ++pos) {
    const std::size_t k = index_of(others, list[pos], "agent");
    if (r[k]) throw std::invalid_argument("preference list of '" + owner + "' repeats '" + list[pos] + "'");
    r[k] = static_cast<long long>(pos) + 1;
  }
  return r;
}

void check_grid(const PriceGrid& g) {
  if (g.step.sign() <= 0) throw std::invalid_argument("grid step must be positive");
  if (g.max < g.min) throw std::invalid_argument("grid max below grid min");
}

}  // namespace

Instance from_ordinal(const OrdinalModel& m) {
  require_distinct(m.men, "man");
  require_distinct(m.women, "woman");
  if (m.prefs_men.size() != m.men.size() || m.prefs_women.size() != m.women.size()) {
    throw std::invalid_argument("one preference list per agent is required");
  }
  const long long nm = static_cast<long long>(m.men.size());
  const long long nw = static_cast<long long>(m.women.size());
  std::vector<std::vector<long long>> rm, rw;
  for (std::size_t i = 0; i < m.men.size(); ++i) rm.push_back(ranks(m.prefs_men[i], m.women, m.men[i]));
  for (std::size_t j = 0; j < m.women.size(); ++j) rw.push_back(ranks(m.prefs_women[j], m.men, m.women[j]));
  std::vector<std::vector<Game>> games(m.men.size());
  for (std::size_t i = 0; i < m.men.size(); ++i) {
    for (std::size_t j = 0; j < m.women.size(); ++j) {
      games[i].push_back(Game::bimatrix({{Rational(nw + 1 - rm[i][j])}}, {{Rational(nm + 1 - rw[j][i])}}));
    }
  }
  return Instance(m.men, m.women, std::vector<Rational>(m.men.size()), std::vector<Rational>(m.women.size()),
                  std::move(games));
}

Instance from_shapley_shubik(const ShapleyShubikModel& m) {
  check_grid(m.grid);
  if (m.costs.size() != m.sellers.size()) throw std::invalid_argument("one cost per seller is required");
  if (m.values.size() != m.sellers.size()) throw std::invalid_argument("one value row per seller is required");
  GaleDemangeModel gd{m.sellers, m.buyers, {}, {}, m.grid};
  for (std::size_t i = 0; i < m.sellers.size(); ++i) {
    if (m.values[i].size() != m.buyers.size()) throw std::invalid_argument("one value per buyer is required");
    gd.F.emplace_back();
    gd.H.emplace_back();
    for (std::size_t j = 0; j < m.buyers.size(); ++j) {
      gd.F[i].push_back(PiecewiseLinear::affine(1, -m.costs[i]));
      gd.H[i].push_back(PiecewiseLinear::affine(1, m.values[i][j]));
    }
  }
  return from_gale_demange(gd);
}

Instance from_gale_demange(const GaleDemangeModel& m) {
  check_grid(m.grid);
  require_distinct(m.men, "man");
  require_distinct(m.women, "woman");
  if (m.F.size() != m.men.size() || m.H.size() != m.men.size()) throw std::invalid_argument("one map row per man");
  std::vector<std::vector<Game>> games(m.men.size());
  for (std::size_t i = 0; i < m.men.size(); ++i) {
    if (m.F[i].size() != m.women.size() || m.H[i].size() != m.women.size()) {
      throw std::invalid_argument("one map per couple is required");
    }
    for (std::size_t j = 0; j < m.women.size(); ++j) {
      games[i].push_back(Game::transfer(m.grid.min, m.grid.max, m.grid.step, m.F[i][j], m.H[i][j]));
    }
  }
  return Instance(m.men, m.women, std::vector<Rational>(m.men.size()), std::vector<Rational>(m.women.size()),
                  std::move(games));
}

std::vector<std::optional<Rational>> contract_scores(const ContractsModel& m, Side side, std::size_t agent) {
  const auto& names = side == Side::Men ? m.men : m.women;
  const auto& prefs = side == Side::Men ? m.prefs_men : m.prefs_women;
  if (prefs.size() != names.size()) throw std::invalid_argument("one preference list per agent is required");
  const auto& list = prefs.at(agent);
  const std::string& me = names.at(agent);

  std::vector<std::string> cnames;
  for (const auto& c : m.contracts) cnames.push_back(c.name);
  auto mine = [&](std::size_t k) { return (side == Side::Men ? m.contracts[k].man : m.contracts[k].woman) == me; };

  std::optional<long long> empty_pos;
  std::vector<std::optional<long long>> pos(m.contracts.size());
  for (std::size_t p = 0; p < list.size(); ++p) {
    if (!list[p]) {
      if (empty_pos) throw std::invalid_argument("preference list of '" + me + "' names the empty contract twice");
      empty_pos = static_cast<long long>(p);
      continue;
    }
    const std::size_t k = index_of(cnames, *list[p], "contract");
    if (!mine(k)) throw std::invalid_argument("'" + me + "' ranks contract '" + *list[p] + "' that is not theirs");
    if (pos[k]) throw std::invalid_argument("preference list of '" + me + "' repeats '" + *list[p] + "'");
    pos[k] = static_cast<long long>(p);
  }
  const long long len = static_cast<long long>(list.size());
  const long long e = empty_pos.value_or(len);
  std::vector<std::optional<Rational>> out(m.contracts.size());
  for (std::size_t k = 0; k < m.contracts.size(); ++k) {
    if (!mine(k)) continue;
    const long long p = pos[k].value_or(std::max(len, e + 1));
    out[k] = Rational(e - p);
  }
  return out;
}

Instance from_hatfield_milgrom(const ContractsModel& m) {
  require_distinct(m.men, "man");
  require_distinct(m.women, "woman");
  std::vector<std::string> cnames;
  for (const auto& c : m.contracts) {
    cnames.push_back(c.name);
    index_of(m.men, c.man, "man");
    index_of(m.women, c.woman, "woman");
  }
  require_distinct(cnames, "contract");

  std::vector<std::vector<std::optional<Rational>>> sm, sw;
  for (std::size_t i = 0; i < m.men.size(); ++i) sm.push_back(contract_scores(m, Side::Men, i));
  for (std::size_t j = 0; j < m.women.size(); ++j) sw.push_back(contract_scores(m, Side::Women, j));

  const std::size_t n = std::max<std::size_t>(1, m.contracts.size());
  const Rational low(-static_cast<long long>(m.contracts.size()) - 2);
  std::vector<std::vector<Game>> games(m.men.size());
  for (std::size_t i = 0; i < m.men.size(); ++i) {
    for (std::size_t j = 0; j < m.women.size(); ++j) {
      Matrix U(n, std::vector<Rational>(n, low)), V = U;
      for (std::size_t k = 0; k < m.contracts.size(); ++k) {
        if (m.contracts[k].man == m.men[i] && m.contracts[k].woman == m.women[j]) {
          U[k][k] = *sm[i][k];
          V[k][k] = *sw[j][k];
        }
      }
      games[i].push_back(Game::bimatrix(std::move(U), std::move(V)));
    }
  }
  return Instance(m.men, m.women, std::vector<Rational>(m.men.size()), std::vector<Rational>(m.women.size()),
                  std::move(games));
}

}  // namespace smg
