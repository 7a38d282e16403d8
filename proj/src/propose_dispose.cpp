#include "smg/propose_dispose.hpp"

#include <sstream>
#include <stdexcept>

namespace smg {

namespace {

// Side-neutral access: "own" is the proposer's payoff, "other" the receiver's.
struct View {
  const Instance& inst;
  Side side;

  std::size_t proposers() const { return side == Side::Men ? inst.num_men() : inst.num_women(); }
  std::size_t receivers() const { return side == Side::Men ? inst.num_women() : inst.num_men(); }
  const Game& game(std::size_t p, std::size_t r) const { return side == Side::Men ? inst.game(p, r) : inst.game(r, p); }
  const Rational& own(const Contract& c) const { return side == Side::Men ? c.u : c.v; }
  const Rational& other(const Contract& c) const { return side == Side::Men ? c.v : c.u; }
  const Rational& irp_proposer(std::size_t p) const { return side == Side::Men ? inst.irp_man(p) : inst.irp_woman(p); }
  const Rational& irp_receiver(std::size_t r) const { return side == Side::Men ? inst.irp_woman(r) : inst.irp_man(r); }
  const std::string& proposer_name(std::size_t p) const { return side == Side::Men ? inst.man(p) : inst.woman(p); }
  const std::string& receiver_name(std::size_t r) const { return side == Side::Men ? inst.woman(r) : inst.man(r); }

  std::optional<std::size_t> partner_of_receiver(const MatchingProfile& pi, std::size_t r) const {
    return side == Side::Men ? pi.partner_of_woman(r) : pi.partner_of_man(r);
  }
  void match(MatchingProfile& pi, std::size_t p, std::size_t r, Contract c) const {
    if (side == Side::Men) {
      pi.match(p, r, std::move(c));
    } else {
      pi.match(r, p, std::move(c));
    }
  }
  void unmatch_proposer(MatchingProfile& pi, std::size_t p) const {
    if (side == Side::Men) {
      pi.unmatch_man(p);
    } else if (auto m = pi.partner_of_woman(p)) {
      pi.unmatch_man(*m);
    }
  }
  void set_contract(MatchingProfile& pi, std::size_t p, std::size_t r, Contract c) const {
    pi.set_contract(side == Side::Men ? p : r, std::move(c));
  }
};

std::string_view kind_name(EventKind k) {
  switch (k) {
    case EventKind::Propose: return "propose";
    case EventKind::Single: return "single";
    case EventKind::Accept: return "accept";
    case EventKind::Compete: return "compete";
    case EventKind::Replace: return "replace";
    case EventKind::AutoReplace: return "auto-replace";
    case EventKind::Reject: return "reject";
  }
  return "?";
}

}  // namespace

ProposalSolution solve_Pi(const Instance& inst, std::size_t proposer, const std::vector<Rational>& receiver_payoffs,
                          const Rational& eps, Side side, std::optional<std::size_t> exclude) {
  const View view{inst, side};
  if (receiver_payoffs.size() != view.receivers()) throw std::invalid_argument("solve_Pi: payoff vector size mismatch");
  ProposalSolution best;
  for (std::size_t r = 0; r < view.receivers(); ++r) {
    if (exclude == r) continue;
    const Rational floor = receiver_payoffs[r] + eps;
    for (const auto& c : view.game(proposer, r).menu()) {
      if (view.other(c) < floor) continue;
      if (!best.target || view.own(c) > best.objective) {
        best.target = r;
        best.contract = c;
        best.objective = view.own(c);
      }
    }
  }
  const Rational& single = view.irp_proposer(proposer);
  if (!best.target || single > best.objective) return {std::nullopt, std::nullopt, single};
  return best;
}

LowerBound solve_Pmax(const Instance& inst, std::size_t proposer, std::size_t receiver, const Rational& beta,
                      Side side) {
  const View view{inst, side};
  LowerBound best;
  for (const auto& c : view.game(proposer, receiver).menu()) {
    if (view.own(c) >= beta && greater(view.other(c), best)) best = view.other(c);
  }
  return best;
}

Contract solve_Pnew(const Instance& inst, std::size_t proposer, std::size_t receiver, const LowerBound& lambda,
                    Side side) {
  const View view{inst, side};
  const Contract* best = nullptr;
  for (const auto& c : view.game(proposer, receiver).menu()) {
    if (lambda && view.other(c) < *lambda) continue;
    if (!best || view.own(c) > view.own(*best)) best = &c;
  }
  if (!best) throw std::logic_error("P^new infeasible: no contract reaches lambda = " + to_string(lambda));
  return *best;
}

std::string to_line(const Instance& inst, Side side, const TraceEvent& e) {
  const View view{inst, side};
  std::ostringstream os;
  os << "iter=" << e.iteration << " event=" << kind_name(e.kind) << " proposer=" << view.proposer_name(e.proposer);
  if (e.receiver) os << " receiver=" << view.receiver_name(*e.receiver);
  if (e.incumbent) os << " incumbent=" << view.proposer_name(*e.incumbent);
  if (e.contract) os << " contract=" << e.contract->id << " u=" << e.contract->u << " v=" << e.contract->v;
  if (e.kind == EventKind::Compete) {
    os << " beta_proposer=" << to_string(e.beta_proposer) << " lambda_proposer=" << to_string(e.lambda_proposer)
       << " beta_incumbent=" << to_string(e.beta_incumbent) << " lambda_incumbent=" << to_string(e.lambda_incumbent);
  }
  if (e.receiver_before) os << " before=" << *e.receiver_before;
  if (e.receiver_after) os << " after=" << *e.receiver_after;
  return os.str();
}

std::size_t iteration_bound(const Instance& inst, const Rational& eps, Side side) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  const View view{inst, side};
  Rational total;
  for (std::size_t r = 0; r < view.receivers(); ++r) {
    LowerBound top;
    for (std::size_t p = 0; p < view.proposers(); ++p) {
      for (const auto& c : view.game(p, r).menu()) {
        if (greater(view.other(c), top)) top = view.other(c);
      }
    }
    if (top && *top > view.irp_receiver(r)) total += ((*top - view.irp_receiver(r)) / eps).ceil();
  }
  return static_cast<std::size_t>(total.raw().get_num().get_ui()) + view.proposers();
}

ProposeDisposeResult run_propose_dispose(const Instance& inst, const Rational& eps, Side side) {
  if (eps.sign() <= 0) throw std::invalid_argument("propose-dispose needs eps > 0");
  const View view{inst, side};
  const std::size_t bound = iteration_bound(inst, eps, side);

  ProposeDisposeResult out{MatchingProfile::all_single(inst), {}};
  MarketState& st = out.state;
  MatchingProfile& pi = out.profile;
  st.side = side;
  for (std::size_t p = 0; p < view.proposers(); ++p) st.queue.push_back(p);
  for (std::size_t r = 0; r < view.receivers(); ++r) st.receiver_payoffs.push_back(view.irp_receiver(r));
  auto& v = st.receiver_payoffs;

  while (!st.queue.empty()) {
    if (++st.iterations > bound) throw std::logic_error("propose-dispose exceeded its iteration bound");
    const std::size_t p = st.queue.front();
    st.queue.pop_front();
    TraceEvent ev;
    ev.iteration = st.iterations;
    ev.proposer = p;

    const ProposalSolution sol = solve_Pi(inst, p, v, eps, side);
    if (!sol.target) {
      ev.kind = EventKind::Single;
      st.trace.push_back(ev);
      continue;
    }
    const std::size_t r = *sol.target;
    ev.kind = EventKind::Propose;
    ev.receiver = r;
    ev.contract = sol.contract;
    st.trace.push_back(ev);
    ev.receiver_before = v[r];

    const auto q = view.partner_of_receiver(pi, r);
    if (!q) {
      view.match(pi, p, r, *sol.contract);
      v[r] = view.other(*sol.contract);
      ev.kind = EventKind::Accept;
      ev.receiver_after = v[r];
      st.trace.push_back(ev);
      continue;
    }
    const std::size_t qq = *q;
    ev.incumbent = qq;

    // The incumbent may already be at the worst contract he accepts; if any
    // eps-improvement for r makes him prefer someone else, he leaves.
    if (solve_Pi(inst, qq, v, eps, side).target != r) {
      view.unmatch_proposer(pi, qq);
      view.match(pi, p, r, *sol.contract);
      v[r] = view.other(*sol.contract);
      st.queue.push_front(qq);
      ev.kind = EventKind::AutoReplace;
      ev.receiver_after = v[r];
      st.trace.push_back(ev);
      continue;
    }

    ev.beta_proposer = solve_Pi(inst, p, v, eps, side, r).objective;
    ev.lambda_proposer = solve_Pmax(inst, p, r, *ev.beta_proposer, side);
    ev.beta_incumbent = solve_Pi(inst, qq, v, eps, side, r).objective;
    ev.lambda_incumbent = solve_Pmax(inst, qq, r, *ev.beta_incumbent, side);
    ev.kind = EventKind::Compete;
    ev.contract.reset();
    st.trace.push_back(ev);

    if (greater(ev.lambda_proposer, ev.lambda_incumbent)) {
      Contract c = solve_Pnew(inst, p, r, ev.lambda_incumbent, side);
      view.unmatch_proposer(pi, qq);
      view.match(pi, p, r, c);
      v[r] = view.other(c);
      st.queue.push_front(qq);
      ev.kind = EventKind::Replace;
      ev.contract = c;
    } else {
      Contract c = solve_Pnew(inst, qq, r, ev.lambda_proposer, side);
      view.set_contract(pi, qq, r, c);
      v[r] = view.other(c);
      st.queue.push_front(p);
      ev.kind = EventKind::Reject;
      ev.contract = c;
    }
    ev.receiver_after = v[r];
    st.trace.push_back(ev);
  }
  return out;
}

LimitResult propose_dispose_limit(const Instance& inst, Side side, const Rational& eps0, std::size_t max_runs) {
  if (eps0.sign() <= 0) throw std::invalid_argument("starting eps must be positive");
  if (max_runs == 0) throw std::invalid_argument("max_runs must be positive");
  LimitResult res;
  Rational eps = eps0;
  std::optional<MatchingProfile> previous;
  for (std::size_t run = 1; run <= max_runs; ++run) {
    MatchingProfile current = run_propose_dispose(inst, eps, side).profile;
    res.runs = run;
    res.final_eps = eps;
    if (previous && *previous == current) {
      res.settled = true;
      res.profile = std::move(current);
      break;
    }
    previous = std::move(current);
    res.profile = *previous;
    eps /= 2;
  }
  res.exact = is_externally_stable(inst, res.profile, 0);
  return res;
}

}  // namespace smg
