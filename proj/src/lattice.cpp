#include "smg/lattice.hpp"

#include <stdexcept>

#include "smg/stability.hpp"

namespace smg {

namespace {

bool close(const Rational& x, const Rational& y, const Rational& eps) { return (x - y).abs() <= eps; }

// Pick, per agent of one side, the profile preferred by `better`; a tie keeps a.
template <class Prefer>
std::optional<MatchingProfile> combine(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b,
                                       Side side, Prefer prefer_b) {
  MatchingProfile out = MatchingProfile::all_single(inst);
  if (side == Side::Men) {
    for (std::size_t i = 0; i < inst.num_men(); ++i) {
      const MatchingProfile& src = prefer_b(a.u(inst, i), b.u(inst, i)) ? b : a;
      auto j = src.partner_of_man(i);
      if (!j) continue;
      if (out.partner_of_woman(*j)) return std::nullopt;
      out.match(i, *j, *src.contract_of_man(i));
    }
  } else {
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      const MatchingProfile& src = prefer_b(a.v(inst, j), b.v(inst, j)) ? b : a;
      auto i = src.partner_of_woman(j);
      if (!i) continue;
      if (out.partner_of_man(*i)) return std::nullopt;
      out.match(*i, j, *src.contract_of_woman(j));
    }
  }
  return out;
}

void require_joinable(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b, const Rational& eps) {
  if (find_blocking_pair(inst, a, eps)) throw std::invalid_argument("join: first profile is not externally stable");
  if (find_blocking_pair(inst, b, eps)) throw std::invalid_argument("join: second profile is not externally stable");
  if (!check_condition_star2(inst, a, b, eps)) {
    throw std::invalid_argument("join: equal payoffs with different partners");
  }
}

}  // namespace

bool check_condition_star2(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b,
                           const Rational& eps) {
  validate_profile(inst, a);
  validate_profile(inst, b);
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    if (close(a.u(inst, i), b.u(inst, i), eps) && a.partner_of_man(i) != b.partner_of_man(i)) return false;
  }
  for (std::size_t j = 0; j < inst.num_women(); ++j) {
    if (close(a.v(inst, j), b.v(inst, j), eps) && a.partner_of_woman(j) != b.partner_of_woman(j)) return false;
  }
  return true;
}

MatchingProfile join(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b, Side side,
                     const Rational& eps) {
  require_joinable(inst, a, b, eps);
  auto out = combine(inst, a, b, side, [](const Rational& x, const Rational& y) { return y > x; });
  if (!out) throw std::logic_error("join: two agents claimed the same partner");
  return *out;
}

std::optional<MatchingProfile> men_meet(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b) {
  validate_profile(inst, a);
  validate_profile(inst, b);
  return combine(inst, a, b, Side::Men, [](const Rational& x, const Rational& y) { return y < x; });
}

DualityResult meet_zero_sum_duality(const Instance& inst, const MatchingProfile& a, const MatchingProfile& b,
                                    const Rational& eps) {
  for (std::size_t i = 0; i < inst.num_men(); ++i) {
    for (std::size_t j = 0; j < inst.num_women(); ++j) {
      if (!inst.game(i, j).is_level_class()) {
        throw std::invalid_argument("duality needs zero-sum, strictly competitive or transfer games only");
      }
    }
  }
  DualityResult r{join(inst, a, b, Side::Women, eps), men_meet(inst, a, b), false, false};
  r.agree = r.men_meet && *r.men_meet == r.women_join;
  r.stable = !find_blocking_pair(inst, r.women_join, eps);
  return r;
}

}  // namespace smg
