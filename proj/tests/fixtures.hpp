#pragma once

#include <random>
#include <vector>

#include "toriclogk/polytope.hpp"

namespace fixtures {

using toriclogk::LatticePolytope;
using toriclogk::Rational;
using toriclogk::RatVec;

inline RatVec vec(std::initializer_list<long> c) { return RatVec::from_ints(c); }

inline RatVec q(std::initializer_list<Rational> c) { return RatVec(c); }

inline LatticePolytope poly(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<RatVec> v;
  for (auto p : pts) v.push_back(RatVec::from_ints(p));
  return LatticePolytope::build(v);
}

inline LatticePolytope p2() { return poly({{-1, -1}, {2, -1}, {-1, 2}}); }
inline LatticePolytope bl1p2() { return poly({{-1, 0}, {-1, 2}, {2, -1}, {0, -1}}); }
inline LatticePolytope bl2p2() { return poly({{-1, -1}, {-1, 1}, {0, 1}, {1, 0}, {1, -1}}); }
inline LatticePolytope square() { return poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }
inline LatticePolytope segment() { return poly({{0}, {1}}); }

// Random reflexive polygons: hulls of random subsets of [-2,2]^2 containing
// the origin strictly, kept when every facet sits at offset 1.
inline std::vector<LatticePolytope> random_reflexive_polygons(std::size_t count,
                                                              unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-2, 2);
  std::uniform_int_distribution<int> size(3, 7);
  std::vector<LatticePolytope> out;
  while (out.size() < count) {
    std::vector<RatVec> pts;
    const int m = size(rng);
    for (int i = 0; i < m; ++i) pts.push_back(RatVec::from_ints({coord(rng), coord(rng)}));
    try {
      auto p = LatticePolytope::build(pts);
      if (!toriclogk::is_reflexive(p)) continue;
      bool seen = false;
      for (const auto& o : out) seen = seen || o == p;
      if (!seen) out.push_back(std::move(p));
    } catch (const std::exception&) {
    }
  }
  return out;
}

}  // namespace fixtures
