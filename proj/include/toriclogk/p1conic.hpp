#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toriclogk/rational.hpp"

// P^1 with marked points p_i carrying weights alpha_i (cone angle
// 2 pi (1 - alpha_i)). Only the weights matter; positions are not stored.
namespace toriclogk {

class ConeData {
 public:
  /// Each alpha must lie in (0, 1); throws AlphaOutOfRange otherwise. An empty
  /// list is the unmarked sphere.
  explicit ConeData(std::vector<Rational> alphas);

  const std::vector<Rational>& alphas() const noexcept { return alphas_; }
  std::size_t size() const noexcept { return alphas_.size(); }
  Rational total() const;

 private:
  std::vector<Rational> alphas_;
};

/// sum_{j != i} alpha_j - alpha_i for the degeneration pushing every point
/// but p_i to infinity. Index is zero-based; throws IndexOutOfRange.
Rational log_futaki_p1(const ConeData& c, std::size_t i);

/// deg(-(K + sum alpha_i p_i)) = 2 - sum alpha_i.
Rational mean_scalar(const ConeData& c);

struct ExistenceResult {
  bool exists = false;
  int curvature_sign = 0;
  /// "(a)" and/or "(b,i)" with i one-based.
  std::vector<std::string> failed_conditions;
};

/// Constant-curvature conic metric criterion (Troyanov, McOwen, Thurston,
/// Luo-Tian):
///   positive: sum < 2 and sum_{j != i} alpha_j - alpha_i > 0 for all i
///   flat:     sum = 2
///   negative: sum > 2
ExistenceResult existence_check(const ConeData& c);

struct P1StabilityResult {
  bool stable_all = false;  // every value > 0
  std::vector<Rational> futaki_values;
};

P1StabilityResult stability_check(const ConeData& c);

}  // namespace toriclogk
