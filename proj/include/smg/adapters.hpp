#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smg/instance.hpp"

namespace smg {

/// Strict preference lists by agent name, best first; lists must be complete.
struct OrdinalModel {
  std::vector<std::string> men, women;
  std::vector<std::vector<std::string>> prefs_men;    // prefs_men[i] ranks all women
  std::vector<std::vector<std::string>> prefs_women;  // prefs_women[j] ranks all men
};

/// 1x1 games with u = |W| + 1 - rank and v = |M| + 1 - rank (rank 1 is the
/// favourite), single payoff 0, so every partner beats staying single.
Instance from_ordinal(const OrdinalModel& model);

struct PriceGrid {
  Rational min, max, step;
};

/// Sellers are the men, buyers the women. At price p the seller gets
/// p - cost and the buyer value - p; single payoffs are 0.
struct ShapleyShubikModel {
  std::vector<std::string> sellers, buyers;
  std::vector<Rational> costs;                // per seller
  std::vector<std::vector<Rational>> values;  // values[seller][buyer]
  PriceGrid grid;
};

Instance from_shapley_shubik(const ShapleyShubikModel& model);

/// u = F[i][j](t), v = H[i][j](-t) over a grid of net transfers t paid to
/// the man. Single payoffs are 0.
struct GaleDemangeModel {
  std::vector<std::string> men, women;
  std::vector<std::vector<PiecewiseLinear>> F, H;
  PriceGrid grid;
};

Instance from_gale_demange(const GaleDemangeModel& model);

struct ContractSpec {
  std::string name, man, woman;
};

/// One-to-one matching with contracts. Each preference list ranks contract
/// names best first and may contain the empty contract (std::nullopt);
/// contracts after it, or missing from the list, are unacceptable.
struct ContractsModel {
  std::vector<std::string> men, women;
  std::vector<ContractSpec> contracts;
  std::vector<std::vector<std::optional<std::string>>> prefs_men, prefs_women;
};

/// Every couple plays the |X| x |X| game in which both name a contract.
/// Agreeing on a contract between them pays each side its rank score
/// (position of the empty contract minus position of the contract, so
/// positive iff acceptable); anything else pays -(|X| + 2). Singles get 0.
Instance from_hatfield_milgrom(const ContractsModel& model);

/// Score an agent gives each contract under the encoding above; contracts
/// not involving the agent are absent.
std::vector<std::optional<Rational>> contract_scores(const ContractsModel& model, Side side, std::size_t agent);

}  // namespace smg
