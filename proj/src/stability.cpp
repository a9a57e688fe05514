#include "toriclogk/stability.hpp"

#include <stdexcept>

#include "toriclogk/error.hpp"
#include "toriclogk/invariants.hpp"

namespace toriclogk {

namespace {

constexpr const char* kSignNote =
    "sign convention: F <= 0 is stable (degeneration as t -> 0); the t -> infinity "
    "convention flips the sign of F";
constexpr const char* kProductNote =
    "F = 0 along the witness; the induced configuration is a product for X but "
    "degenerates Y, so strict stability is not claimed";

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Semistable: return "semistable";
    case Verdict::Unstable: return "unstable";
  }
  return "unknown";
}

StabilityVerdict classify(const LatticePolytope& p, const Rational& beta_in) {
  const Rational beta = canonical(beta_in);
  require_reflexive(p);
  if (beta <= 0 || beta >= 1) {
    throw Error(ErrorCode::BetaOutOfRange, "beta = " + to_string(beta) + " outside (0, 1)");
  }
  StabilityVerdict out;
  out.beta = beta;
  out.r = r_invariant(p);
  out.notes.emplace_back(kSignNote);
  if (p.barycenter().is_zero()) {
    // F = -(1 - beta) W(lambda) Vol < 0 for every lambda != 0.
    out.verdict = Verdict::Stable;
    return out;
  }

  out.q_beta = q_beta(p, beta);
  const PointClass where = classify_point(p, *out.q_beta);
  switch (where.kind) {
    case PointClass::Kind::Interior:
      out.verdict = Verdict::Stable;
      return out;
    case PointClass::Kind::Boundary:
      out.verdict = Verdict::Semistable;
      out.notes.emplace_back(kProductNote);
      break;
    case PointClass::Kind::Outside:
      out.verdict = Verdict::Unstable;
      break;
  }
  // Facets are sorted by normal, so the first index is the smallest normal.
  out.witness = p.facets()[where.facets.front()].normal;
  const Rational f = log_futaki_toric(p, *out.witness, beta).value;
  const int expected = out.verdict == Verdict::Semistable ? 0 : 1;
  if (sign(f) != expected) throw std::logic_error("classify: witness fails its sign check");
  return out;
}

SweepResult sweep(const LatticePolytope& p) {
  require_reflexive(p);
  SweepResult out;
  std::optional<Rational> smallest;
  for (const auto& h : p.facets()) {
    auto beta = critical_beta(p, h.normal);
    if (beta && (!smallest || *beta < *smallest)) smallest = *beta;
    out.per_facet.push_back({h.normal, std::move(beta)});
  }
  out.r = smallest.value_or(Rational(1));
  if (out.r != r_invariant(p)) {
    throw std::logic_error("sweep: facet minimum disagrees with the ray-exit R");
  }
  return out;
}

std::optional<RatVec> witness_destabilizer(const LatticePolytope& p, const Rational& beta) {
  StabilityVerdict v = classify(p, beta);
  if (v.verdict != Verdict::Unstable) return std::nullopt;
  return v.witness;
}

}  // namespace toriclogk
