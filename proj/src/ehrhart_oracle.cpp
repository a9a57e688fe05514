#include "toriclogk/ehrhart_oracle.hpp"

#include "toriclogk/error.hpp"
#include "toriclogk/linalg.hpp"

namespace toriclogk {

WeightSeries sample_series(const LatticePolytope& p, const RatVec& lambda, long k_max) {
  const std::size_t n = p.dim();
  if (lambda.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "lambda dimension does not match polytope");
  }
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroDirection, "lambda must be nonzero");
  if (k_max < static_cast<long>(n) + 3) {
    throw Error(ErrorCode::IndexOutOfRange,
                "k_max must be at least n + 3 = " + std::to_string(n + 3));
  }
  WeightSeries series{lambda, {}};
  for (long k = 1; k <= k_max; ++k) {
    Integer count = 0;
    std::vector<Integer> coordinate_sums(n);
    for_each_lattice_point(p, k, [&](std::span<const std::int64_t> x) {
      ++count;
      for (std::size_t i = 0; i < n; ++i) coordinate_sums[i] += static_cast<long>(x[i]);
    });
    Rational w = 0;
    for (std::size_t i = 0; i < n; ++i) w -= Rational(coordinate_sums[i]) * lambda[i];
    series.samples.push_back({k, count, w});
  }
  return series;
}

std::vector<Rational> interpolate_exact(const std::vector<Rational>& xs,
                                        const std::vector<Rational>& ys, std::size_t degree) {
  if (xs.size() != ys.size() || xs.size() < degree + 1) {
    throw Error(ErrorCode::NotPolynomial, "not enough samples for a degree-" +
                                              std::to_string(degree) + " fit");
  }
  linalg::Matrix vandermonde;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i <= degree; ++i) {
    std::vector<Rational> row(degree + 1);
    Rational power = 1;
    for (std::size_t j = 0; j <= degree; ++j) {
      row[j] = power;
      power *= xs[i];
    }
    vandermonde.push_back(std::move(row));
    rhs.push_back(ys[i]);
  }
  auto coeffs = linalg::solve(std::move(vandermonde), std::move(rhs));
  if (!coeffs) throw Error(ErrorCode::NotPolynomial, "repeated sample abscissae");

  for (std::size_t i = degree + 1; i < xs.size(); ++i) {
    Rational value = 0;
    for (std::size_t j = coeffs->size(); j-- > 0;) value = value * xs[i] + (*coeffs)[j];
    if (value != ys[i]) {
      throw Error(ErrorCode::NotPolynomial,
                  "holdout sample at x = " + to_string(xs[i]) + " is " + to_string(ys[i]) +
                      ", degree-" + std::to_string(degree) + " fit predicts " +
                      to_string(value));
    }
  }
  return *coeffs;
}

namespace {

Rational coefficient(const std::vector<Rational>& poly, std::size_t degree) {
  return degree < poly.size() ? poly[degree] : Rational(0);
}

}  // namespace

ExpansionFit fit_expansions_detailed(const WeightSeries& series, const LatticePolytope& p) {
  const std::size_t n = p.dim();
  if (series.samples.size() < n + 3) {
    throw Error(ErrorCode::IndexOutOfRange,
                "need at least n + 3 = " + std::to_string(n + 3) + " samples");
  }
  ExpansionFit fit;
  fit.support = support(p, series.lambda);

  std::vector<Rational> ks, ws, ds;
  for (const auto& s : series.samples) {
    fit.k.push_back(s.k);
    ks.emplace_back(s.k);
    ws.push_back(s.w);
    ds.emplace_back(s.d);
  }
  fit.w_poly = interpolate_exact(ks, ws, n + 1);
  fit.d_poly = interpolate_exact(ks, ds, n);

  // Section sequences. 0P is the origin alone: d_0 = 1, w_0 = 0.
  std::vector<Rational> wt, dt;
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    const auto& s = series.samples[i];
    Integer d_prev = 1;
    Rational w_prev = 0;
    if (s.k > 1) {
      if (i == 0 || series.samples[i - 1].k != s.k - 1) {
        throw Error(ErrorCode::IndexOutOfRange, "samples must be consecutive in k");
      }
      d_prev = series.samples[i - 1].d;
      w_prev = series.samples[i - 1].w;
    } else if (s.k != 1) {
      throw Error(ErrorCode::IndexOutOfRange, "samples must start at k = 1");
    }
    fit.w_tilde.push_back(s.w - (w_prev - fit.support * Rational(d_prev)));
    fit.d_tilde.push_back(s.d - d_prev);
    wt.push_back(fit.w_tilde.back());
    dt.emplace_back(fit.d_tilde.back());
  }
  try {
    fit.w_tilde_poly = interpolate_exact(ks, wt, n);
    fit.d_tilde_poly = interpolate_exact(ks, dt, n - 1);
  } catch (const Error&) {
    // Retry without k = 1 and say so.
    std::vector<Rational> ks2(ks.begin() + 1, ks.end());
    fit.w_tilde_poly = interpolate_exact(ks2, std::vector<Rational>(wt.begin() + 1, wt.end()), n);
    fit.d_tilde_poly =
        interpolate_exact(ks2, std::vector<Rational>(dt.begin() + 1, dt.end()), n - 1);
    fit.tilde_from_k2 = true;
  }

  CoeffTuple& c = fit.coeffs;
  c.n = n;
  c.a0 = coefficient(fit.w_poly, n + 1);
  c.a1 = coefficient(fit.w_poly, n);
  c.b0 = coefficient(fit.d_poly, n);
  c.b1 = coefficient(fit.d_poly, n - 1);
  c.a0_tilde = coefficient(fit.w_tilde_poly, n);
  c.b0_tilde = coefficient(fit.d_tilde_poly, n - 1);
  return fit;
}

CoeffTuple fit_expansions(const WeightSeries& series, const LatticePolytope& p) {
  return fit_expansions_detailed(series, p).coeffs;
}

Rational orbifold_a1(const CoeffTuple& c) { return (2 * c.a1 - c.a0_tilde) / 2; }

}  // namespace toriclogk
