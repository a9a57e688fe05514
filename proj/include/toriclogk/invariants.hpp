#pragma once

#include <optional>

#include "toriclogk/ehrhart_oracle.hpp"
#include "toriclogk/polytope.hpp"
#include "toriclogk/rational.hpp"

namespace toriclogk {

/// Log-Futaki invariant of the product test configuration induced by lambda
/// for the pair (X, beta Y), Y a general anticanonical section:
///   value = -(beta <P_c, lambda> + (1 - beta) W(lambda)) Vol.
/// Convention: F <= 0 is the stable side.
struct LogFutakiResult {
  Rational value;
  Rational beta;
  RatVec lambda;
  Rational support;  // W(lambda)
  Rational pairing;  // <P_c, lambda>
  Rational volume;

  /// Recomputes value from the other fields.
  Rational recompute() const { return -(beta * pairing + (1 - beta) * support) * volume; }
};

/// Throws NotReflexive unless is_reflexive(p).
void require_reflexive(const LatticePolytope& p);

/// Exit point of the ray from the origin in direction -P_c. Throws
/// BarycenterAtOrigin when P_c = O.
RatVec exit_point(const LatticePolytope& p);

/// 1 when P_c = O, otherwise t / (1 + t) with t the exit scale along -P_c.
Rational r_invariant(const LatticePolytope& p);

/// -Vol <P_c, lambda>.
Rational classical_futaki(const LatticePolytope& p, const RatVec& lambda);

/// (beta (1 - R)) / ((1 - beta) R) * Q for 0 < beta < 1.
RatVec q_beta(const LatticePolytope& p, const Rational& beta);

/// 0 <= beta < 1.
LogFutakiResult log_futaki_toric(const LatticePolytope& p, const RatVec& lambda,
                                 const Rational& beta);

/// F = 2 (a1 b0 - a0 b1) / b0 + (1 - beta) (-a0~ + (b0~ / b0) a0), 0 <= beta <= 1.
/// At beta = 0 this is the log-Futaki invariant of the full divisor; at
/// beta = 1 the divisor term drops out.
Rational log_futaki_algebraic(const CoeffTuple& c, const Rational& beta);

/// The beta in (0, 1) where log_futaki_toric vanishes, W / (W - <P_c, lambda>),
/// or nullopt when that root is not in the open interval.
std::optional<Rational> critical_beta(const LatticePolytope& p, const RatVec& lambda);

}  // namespace toriclogk
