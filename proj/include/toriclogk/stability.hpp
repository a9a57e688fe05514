#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclogk/polytope.hpp"
#include "toriclogk/rational.hpp"

namespace toriclogk {

enum class Verdict { Stable, Semistable, Unstable };

std::string to_string(Verdict v);

/// Verdict for (X, beta Y) along torus one-parameter subgroups.
///
/// Semistable carries a witness with vanishing log-Futaki invariant, Unstable
/// a witness with positive log-Futaki invariant. Both are facet normals, so
/// they are integer vectors.
struct StabilityVerdict {
  Rational beta;
  Rational r;
  Verdict verdict = Verdict::Stable;
  std::optional<RatVec> witness;
  std::optional<RatVec> q_beta;
  std::vector<std::string> notes;
};

/// 0 < beta < 1, P reflexive. Decides by locating Q_beta relative to P.
StabilityVerdict classify(const LatticePolytope& p, const Rational& beta);

struct SweepEntry {
  RatVec normal;
  std::optional<Rational> critical_beta;
};

struct SweepResult {
  Rational r;
  std::vector<SweepEntry> per_facet;  // sorted by normal
};

/// critical_beta for every facet normal. r is the minimum of the defined
/// entries (1 when none is defined) and is checked against r_invariant.
SweepResult sweep(const LatticePolytope& p);

/// nullopt when beta <= R, otherwise a facet normal with positive log-Futaki
/// invariant.
std::optional<RatVec> witness_destabilizer(const LatticePolytope& p, const Rational& beta);

}  // namespace toriclogk
