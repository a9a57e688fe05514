#pragma once

#include <cstddef>
#include <vector>

#include "toriclogk/polytope.hpp"
#include "toriclogk/rational.hpp"

// Brute-force route to the weight expansions: count and weigh the lattice
// points of kP directly, then interpolate exactly. Nothing in here touches
// the volume/barycenter closed forms, so it can check them.
namespace toriclogk {

/// One dilation: d = #(kP ∩ Z^n), w = -sum <p, lambda> over those points
/// (the monomial z^p has weight -<p, lambda>).
struct WeightSample {
  long k;
  Integer d;
  Rational w;
};

struct WeightSeries {
  RatVec lambda;
  std::vector<WeightSample> samples;  // k strictly increasing
};

/// Leading coefficients of
///   w_k  = a0 k^{n+1} + a1 k^n + ...      d_k  = b0 k^n + b1 k^{n-1} + ...
///   w~_k = a0~ k^n + ...                  d~_k = b0~ k^{n-1} + ...
struct CoeffTuple {
  std::size_t n = 0;
  Rational a0, a1, b0, b1, a0_tilde, b0_tilde;

  friend bool operator==(const CoeffTuple&, const CoeffTuple&) = default;
};

/// Full output of a fit, including the per-k hyperplane-section sequences and
/// the interpolating polynomials (coefficients in increasing degree).
struct ExpansionFit {
  CoeffTuple coeffs;
  Rational support;  // W(lambda)
  std::vector<long> k;
  std::vector<Rational> w_tilde;
  std::vector<Integer> d_tilde;
  std::vector<Rational> w_poly, d_poly, w_tilde_poly, d_tilde_poly;
  /// Set when the section sequences were only polynomial from k = 2 on.
  bool tilde_from_k2 = false;
};

constexpr long default_k_max(std::size_t n) { return static_cast<long>(n) + 4; }

/// Samples k = 1..k_max. Throws ZeroDirection, DimensionMismatch, and
/// IndexOutOfRange when k_max < n + 3.
WeightSeries sample_series(const LatticePolytope& p, const RatVec& lambda, long k_max);

/// Exact polynomial through the first degree + 1 points, checked against
/// every remaining point (NotPolynomial on disagreement). Coefficients are
/// returned in increasing degree.
std::vector<Rational> interpolate_exact(const std::vector<Rational>& xs,
                                        const std::vector<Rational>& ys, std::size_t degree);

/// Builds w~_k = w_k - (w_{k-1} - W d_{k-1}) and d~_k = d_k - d_{k-1} from the
/// series and fits all four expansions.
ExpansionFit fit_expansions_detailed(const WeightSeries& series, const LatticePolytope& p);

CoeffTuple fit_expansions(const WeightSeries& series, const LatticePolytope& p);

/// (2 a1 - a0~) / 2
Rational orbifold_a1(const CoeffTuple& c);

}  // namespace toriclogk
