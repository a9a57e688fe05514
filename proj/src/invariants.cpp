#include "toriclogk/invariants.hpp"

#include "toriclogk/error.hpp"

namespace toriclogk {

namespace {

void require_beta(const Rational& beta, bool allow_zero, bool allow_one) {
  const bool low_ok = allow_zero ? beta >= 0 : beta > 0;
  const bool high_ok = allow_one ? beta <= 1 : beta < 1;
  if (!low_ok || !high_ok) {
    throw Error(ErrorCode::BetaOutOfRange,
                "beta = " + to_string(beta) + " outside " + (allow_zero ? "[0, " : "(0, ") +
                    (allow_one ? "1]" : "1)"));
  }
}

}  // namespace

void require_reflexive(const LatticePolytope& p) {
  if (!is_reflexive(p)) throw Error(ErrorCode::NotReflexive, "polytope is not reflexive");
}

RatVec exit_point(const LatticePolytope& p) {
  require_reflexive(p);
  const RatVec& pc = p.barycenter();
  if (pc.is_zero()) throw Error(ErrorCode::BarycenterAtOrigin, "barycenter is the origin");
  const RatVec away = -pc;
  return ray_exit_scale(p, away) * away;
}

Rational r_invariant(const LatticePolytope& p) {
  require_reflexive(p);
  const RatVec& pc = p.barycenter();
  if (pc.is_zero()) return 1;
  const Rational t = ray_exit_scale(p, -pc);
  return t / (1 + t);
}

Rational classical_futaki(const LatticePolytope& p, const RatVec& lambda) {
  require_reflexive(p);
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroDirection, "lambda must be nonzero");
  return -p.volume() * dot(p.barycenter(), lambda);
}

RatVec q_beta(const LatticePolytope& p, const Rational& beta_in) {
  const Rational beta = canonical(beta_in);
  require_beta(beta, false, false);
  const RatVec q = exit_point(p);
  const Rational r = r_invariant(p);
  return (beta * (1 - r)) / ((1 - beta) * r) * q;
}

LogFutakiResult log_futaki_toric(const LatticePolytope& p, const RatVec& lambda,
                                 const Rational& beta_in) {
  const Rational beta = canonical(beta_in);
  require_reflexive(p);
  require_beta(beta, true, false);
  LogFutakiResult out;
  out.beta = beta;
  out.lambda = lambda;
  out.support = support(p, lambda);
  out.pairing = dot(p.barycenter(), lambda);
  out.volume = p.volume();
  out.value = out.recompute();
  return out;
}

Rational log_futaki_algebraic(const CoeffTuple& c, const Rational& beta_in) {
  const Rational beta = canonical(beta_in);
  if (c.b0 == 0) throw Error(ErrorCode::ZeroB0, "b0 must be nonzero");
  require_beta(beta, true, true);
  const Rational futaki = 2 * (c.a1 * c.b0 - c.a0 * c.b1) / c.b0;
  const Rational divisor_term = -c.a0_tilde + c.b0_tilde / c.b0 * c.a0;
  return futaki + (1 - beta) * divisor_term;
}

std::optional<Rational> critical_beta(const LatticePolytope& p, const RatVec& lambda) {
  require_reflexive(p);
  const Rational w = support(p, lambda);
  const Rational gap = w - dot(p.barycenter(), lambda);
  if (gap == 0) return std::nullopt;
  Rational beta = w / gap;
  if (beta <= 0 || beta >= 1) return std::nullopt;
  return beta;
}

}  // namespace toriclogk
