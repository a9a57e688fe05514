#include "toriclogk/p1conic.hpp"

#include "toriclogk/error.hpp"

namespace toriclogk {

ConeData::ConeData(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {
  for (auto& a : alphas_) {
    a.canonicalize();
    if (a <= 0 || a >= 1) {
      throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + to_string(a) + " outside (0, 1)");
    }
  }
}

Rational ConeData::total() const {
  Rational s = 0;
  for (const auto& a : alphas_) s += a;
  return s;
}

Rational log_futaki_p1(const ConeData& c, std::size_t i) {
  if (i >= c.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "marked point index " + std::to_string(i) +
                                                " out of range for " +
                                                std::to_string(c.size()) + " points");
  }
  return c.total() - 2 * c.alphas()[i];
}

Rational mean_scalar(const ConeData& c) { return 2 - c.total(); }

ExistenceResult existence_check(const ConeData& c) {
  ExistenceResult out;
  const Rational sum = c.total();
  out.curvature_sign = sign(mean_scalar(c));
  bool condition_a = false;
  bool check_b = false;
  switch (out.curvature_sign) {
    case 1:
      condition_a = sum < 2;
      check_b = true;
      break;
    case 0:
      condition_a = sum == 2;
      break;
    default:
      condition_a = sum > 2;
      break;
  }
  if (!condition_a) out.failed_conditions.emplace_back("(a)");
  if (check_b) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (log_futaki_p1(c, i) <= 0) {
        out.failed_conditions.push_back("(b," + std::to_string(i + 1) + ")");
      }
    }
  }
  out.exists = out.failed_conditions.empty();
  return out;
}

P1StabilityResult stability_check(const ConeData& c) {
  P1StabilityResult out;
  out.stable_all = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.futaki_values.push_back(log_futaki_p1(c, i));
    out.stable_all = out.stable_all && out.futaki_values.back() > 0;
  }
  return out;
}

}  // namespace toriclogk
