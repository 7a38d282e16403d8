#include "smg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "smg/io.hpp"
#include "smg/lattice.hpp"
#include "smg/oracle.hpp"
#include "smg/propose_dispose.hpp"
#include "smg/refine.hpp"
#include "smg/stability.hpp"

namespace smg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_profile(std::ostream& out, const Instance& inst, const MatchingProfile& pi) {
  out << "profile:\n";
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    if (auto j = pi.partner_of_man(i)) {
      const Contract& c = *pi.contract_of_man(i);
      out << "  " << inst.man(i) << " -- " << inst.woman(*j) << " contract=" << c.id << " u=" << c.u << " v=" << c.v
          << "\n";
    } else {
      out << "  " << inst.man(i) << " single u=" << inst.irp_man(i) << "\n";
    }
  }
  for (std::size_t j = 0; j < inst.num_women(); ++j) {
    if (!pi.partner_of_woman(j)) out << "  " << inst.woman(j) << " single v=" << inst.irp_woman(j) << "\n";
  }
}

std::string one_line(const Instance& inst, const MatchingProfile& pi) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    if (!first) os << "; ";
    first = false;
    if (auto j = pi.partner_of_man(i)) {
      const Contract& c = *pi.contract_of_man(i);
      os << inst.man(i) << "-" << inst.woman(*j) << "#" << c.id << "(" << c.u << "," << c.v << ")";
    } else {
      os << inst.man(i) << "-single";
    }
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not a rational number: '" + text + "'");
  }
}

bool integral(const Instance& inst) {
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    if (!inst.irp_man(i).is_integer()) return false;
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      for (const auto& c : inst.game(i, j).menu()) {
        if (!c.u.is_integer() || !c.v.is_integer()) return false;
      }
    }
  }
  for (std::size_t j = 0; j < inst.num_women(); ++j) {
    if (!inst.irp_woman(j).is_integer()) return false;
  }
  return true;
}

// Integer instances default to eps = 1; anything else must say.
Rational resolve_eps(const Instance& inst, const std::string& text) {
  if (!text.empty()) return parse_rational(text, "--eps");
  if (integral(inst)) return 1;
  throw UsageError("--eps is required for instances with non-integer payoffs");
}

Side parse_side(const std::string& s) { return s == "women" ? Side::Women : Side::Men; }

// Every class the policy applies to gets it; the rest keep their default.
std::map<GameClass, CnePolicy> policies_for(const Instance& inst, const std::string& name) {
  std::map<GameClass, CnePolicy> out;
  if (name == "auto") return out;
  const CnePolicy p = name == "max-potential" ? CnePolicy::MaxPotential
                      : name == "zero-sum"    ? CnePolicy::ZeroSumMedian
                                              : CnePolicy::RepeatedOracle;
  bool used = false;
  for (GameClass c : {GameClass::FiniteBimatrix, GameClass::ZeroSum, GameClass::StrictlyCompetitive,
                      GameClass::Potential, GameClass::Transfer, GameClass::RepeatedStage}) {
    if (policy_applies(p, c)) out[c] = p;
  }
  for (std::size_t i = 0; i < inst.num_men() && !used; ++i) {
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      if (policy_applies(p, inst.game(i, j).kind())) used = true;
    }
  }
  if (!used) throw UsageError("--policy " + name + " fits no game of this instance");
  return out;
}

void print_trace(std::ostream& os, const Instance& inst, const MarketState& st) {
  for (const auto& e : st.trace) os << to_line(inst, st.side, e) << "\n";
}

std::vector<Rational> parse_outs(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item, "--outs"));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching games: stable profiles and constrained equilibria", "smg"};
  app.require_subcommand(1);

  std::string file, eps_text, side = "men", trace_path, out_path, profile_path, notion, a_path, b_path, outs_text;
  std::string policy = "auto", model_kind;
  std::size_t max_passes = 0;
  std::uint64_t cap = kDefaultProfileCap;

  auto* ext = app.add_subcommand("solve-external", "propose-dispose; prints the profile and its external stability");
  ext->add_option("file", file, "instance file")->required();
  ext->add_option("--eps", eps_text, "improvement step (default 1 for integer instances)");
  ext->add_option("--side", side, "proposing side")->check(CLI::IsMember({"men", "women"}));
  ext->add_option("--trace", trace_path, "write the event trace here");
  ext->add_option("-o,--out", out_path, "write the profile here");

  auto* stable = app.add_subcommand("solve-stable", "propose-dispose followed by constrained-equilibrium refinement");
  stable->add_option("file", file, "instance file")->required();
  stable->add_option("--eps", eps_text, "improvement step (default 1 for integer instances)");
  stable->add_option("--side", side, "proposing side")->check(CLI::IsMember({"men", "women"}));
  stable->add_option("--policy", policy, "equilibrium selection")
      ->check(CLI::IsMember({"auto", "max-potential", "zero-sum", "repeated"}));
  stable->add_option("--max-passes", max_passes, "refinement pass cap (0 = automatic)");
  stable->add_option("--trace", trace_path, "write both traces here");
  stable->add_option("-o,--out", out_path, "write the profile here");

  auto* verify = app.add_subcommand("verify", "check one stability notion of a profile");
  verify->add_option("file", file, "instance file")->required();
  verify->add_option("--profile", profile_path, "profile file")->required();
  verify->add_option("--notion", notion, "notion")->required()->check(CLI::IsMember({"ext", "int", "weak", "uni", "nash", "ir"}));
  verify->add_option("--eps", eps_text, "margin (default 1 for integer instances)");

  auto* enumerate = app.add_subcommand("enumerate", "list every profile satisfying a notion");
  enumerate->add_option("file", file, "instance file")->required();
  enumerate->add_option("--eps", eps_text, "margin (default 1 for integer instances)");
  enumerate->add_option("--notion", notion, "notion")->required()->check(CLI::IsMember({"ext", "int"}));
  enumerate->add_option("--cap", cap, "refuse instances with more profiles than this");

  auto* join_cmd = app.add_subcommand("join", "side-wise join of two externally stable profiles");
  join_cmd->add_option("file", file, "instance file")->required();
  join_cmd->add_option("--a", a_path, "first profile")->required();
  join_cmd->add_option("--b", b_path, "second profile")->required();
  join_cmd->add_option("--side", side, "side taking its maximum")->check(CLI::IsMember({"men", "women"}));
  join_cmd->add_option("--eps", eps_text, "stability margin (default 0)");
  join_cmd->add_option("-o,--out", out_path, "write the profile here");

  auto* spe = app.add_subcommand("spe", "constrained subgame-perfect equilibrium of a game tree");
  spe->add_option("file", file, "tree file")->required();
  spe->add_option("--outs", outs_text, "comma separated outside options, one per player")->required();

  auto* adapt = app.add_subcommand("adapt", "convert a classical model into an instance");
  adapt->add_option("kind", model_kind, "model kind")
      ->required()
      ->check(CLI::IsMember({"ordinal", "shapley-shubik", "gale-demange", "contracts"}));
  adapt->add_option("file", file, "model file")->required();
  adapt->add_option("-o,--out", out_path, "instance file to write")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (*adapt) {
      const Json model = read_json_file(file);
      Instance inst = model_kind == "ordinal"          ? from_ordinal(ordinal_from_json(model))
                      : model_kind == "shapley-shubik" ? from_shapley_shubik(shapley_shubik_from_json(model))
                      : model_kind == "gale-demange"   ? from_gale_demange(gale_demange_from_json(model))
                                                       : from_hatfield_milgrom(contracts_from_json(model));
      write_file(out_path, dump(instance_to_json(inst)));
      out << "wrote " << out_path << " (" << inst.num_men() << " x " << inst.num_women() << ")\n";
      return kOk;
    }

    if (*spe) {
      const GameTree tree = tree_from_json(read_json_file(file));
      const auto outs = parse_outs(outs_text);
      if (outs.size() != tree.players()) throw UsageError("--outs needs one value per player");
      const auto s = constrained_spe(tree, outs);
      out << "admissible: " << (is_admissible(tree, outs) ? "yes" : "no") << "\n";
      if (!s) {
        out << "no constrained equilibrium\n";
        return kSolverFailure;
      }
      for (auto [node, child] : *s) out << "  node " << node << " -> child " << child << "\n";
      out << "outcome:";
      for (const auto& x : outcome(tree, *s)) out << " " << x;
      out << "\n";
      return kOk;
    }

    const Instance inst = instance_from_json(read_json_file(file));

    if (*ext || *stable) {
      const Rational eps = resolve_eps(inst, eps_text);
      if (eps.sign() <= 0) throw UsageError("--eps must be positive");
      const auto pd = run_propose_dispose(inst, eps, parse_side(side));
      std::ostringstream trace;
      print_trace(trace, inst, pd.state);
      MatchingProfile result = pd.profile;
      int code = kOk;
      if (*stable) {
        RefineOptions opt;
        opt.policies = policies_for(inst, policy);
        opt.max_passes = max_passes;
        const RefineResult r = refine(inst, pd.profile, eps, opt);
        for (const auto& e : r.trace) trace << to_line(inst, e) << "\n";
        result = r.profile;
        out << "status: " << to_string(r.status) << " passes=" << r.passes << "\n";
        if (r.status != RefineStatus::Converged) code = kSolverFailure;
        if (r.offending) {
          out << "offending couple: " << inst.man(r.offending->first) << " -- " << inst.woman(r.offending->second);
          if (r.failure) out << " (" << to_string(*r.failure) << ")";
          out << "\n";
        }
      }
      print_profile(out, inst, result);
      out << format_report(inst, is_externally_stable(inst, result, eps)) << "\n";
      if (*stable && code == kOk) out << format_report(inst, is_internally_stable(inst, result, eps)) << "\n";
      if (!trace_path.empty()) write_file(trace_path, trace.str());
      if (!out_path.empty()) write_file(out_path, dump(profile_to_json(inst, result)));
      return code;
    }

    if (*verify) {
      const MatchingProfile pi = profile_from_json(inst, read_json_file(profile_path));
      const Rational eps = resolve_eps(inst, eps_text);
      StabilityReport rep;
      if (notion == "ext") {
        rep = is_externally_stable(inst, pi, eps);
      } else if (notion == "int") {
        const StabilityReport ext_rep = is_externally_stable(inst, pi, eps);
        if (ext_rep.holds) {
          rep = is_internally_stable(inst, pi, eps);
        } else {
          // Internal stability is only defined on top of external stability.
          rep = ext_rep;
          rep.notion = Notion::Internal;
        }
      } else if (notion == "weak") {
        rep = is_stable_variant(inst, pi, StableVariant::Weak);
      } else if (notion == "uni") {
        rep = is_stable_variant(inst, pi, StableVariant::Unilateral);
      } else if (notion == "nash") {
        rep = is_nash_stable(inst, pi);
      } else {
        rep = check_individually_rational(inst, pi);
      }
      out << format_report(inst, rep) << "\n";
      return kOk;
    }

    if (*enumerate) {
      const Rational eps = resolve_eps(inst, eps_text);
      const auto all = enumerate_stable(inst, eps, notion == "ext" ? OracleNotion::External : OracleNotion::Internal, cap);
      out << "profiles: " << all.size() << "\n";
      for (const auto& pi : all) out << "  " << one_line(inst, pi) << "\n";
      return kOk;
    }

    if (*join_cmd) {
      const MatchingProfile a = profile_from_json(inst, read_json_file(a_path));
      const MatchingProfile b = profile_from_json(inst, read_json_file(b_path));
      const Rational eps = eps_text.empty() ? Rational(0) : parse_rational(eps_text, "--eps");
      const MatchingProfile j = join(inst, a, b, parse_side(side), eps);
      print_profile(out, inst, j);
      out << format_report(inst, is_externally_stable(inst, j, eps)) << "\n";
      if (!out_path.empty()) write_file(out_path, dump(profile_to_json(inst, j)));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}

}  // namespace smg::cli
