#pragma once

// Test-only brute-force references. These deliberately avoid the library's
// hull, triangulation and facet data so they can check them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "toriclogk/linalg.hpp"
#include "toriclogk/rational.hpp"

namespace oracle {

using toriclogk::Rational;
using toriclogk::RatVec;

struct P2 {
  long x, y;
};

// Shoelace area of a simple polygon given in cyclic order.
inline Rational shoelace_area(const std::vector<P2>& poly) {
  Rational twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& a = poly[i];
    const P2& b = poly[(i + 1) % poly.size()];
    twice += Rational(a.x * b.y - b.x * a.y);
  }
  return abs(twice) / 2;
}

// Standard polygon centroid formula.
inline std::pair<Rational, Rational> shoelace_centroid(const std::vector<P2>& poly) {
  Rational twice = 0, cx = 0, cy = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& a = poly[i];
    const P2& b = poly[(i + 1) % poly.size()];
    const long cross = a.x * b.y - b.x * a.y;
    twice += cross;
    cx += Rational((a.x + b.x) * cross);
    cy += Rational((a.y + b.y) * cross);
  }
  return {cx / (3 * twice), cy / (3 * twice)};
}

// Integer points of k * poly by cross-product sign tests against the cyclic
// edge list (convex polygon, either orientation).
inline std::vector<P2> polygon_points(const std::vector<P2>& poly, long k) {
  long lo_x = poly[0].x, hi_x = lo_x, lo_y = poly[0].y, hi_y = lo_y;
  for (const auto& p : poly) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  std::vector<P2> out;
  for (long x = k * lo_x; x <= k * hi_x; ++x) {
    for (long y = k * lo_y; y <= k * hi_y; ++y) {
      bool pos = false, neg = false;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2 a{k * poly[i].x, k * poly[i].y};
        const P2 b{k * poly[(i + 1) % poly.size()].x, k * poly[(i + 1) % poly.size()].y};
        const long c = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        pos = pos || c > 0;
        neg = neg || c < 0;
      }
      if (!(pos && neg)) out.push_back({x, y});
    }
  }
  return out;
}

// Facets of conv(points) by trying every affinely independent n-subset.
// Returns (primitive outward normal, offset) pairs, sorted.
inline std::vector<std::pair<RatVec, Rational>> brute_force_facets(
    const std::vector<RatVec>& points) {
  const std::size_t n = points.front().size();
  std::set<std::pair<std::vector<Rational>, Rational>> found;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  const std::size_t m = points.size();
  while (true) {
    std::vector<const RatVec*> subset;
    for (std::size_t i : idx) subset.push_back(&points[i]);
    if (auto normal = toriclogk::linalg::hyperplane_normal(subset, n)) {
      const Rational offset = toriclogk::dot(*normal, *subset.front());
      bool above = false, below = false;
      for (const auto& p : points) {
        const Rational s = toriclogk::dot(*normal, p) - offset;
        above = above || s > 0;
        below = below || s < 0;
      }
      if (!(above && below)) {
        RatVec nrm = *normal;
        Rational off = offset;
        if (above) {
          nrm = -nrm;
          off = -off;
        }
        found.insert({nrm.coords(), off});
      }
    }
    // next combination
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<std::pair<RatVec, Rational>> out;
  for (const auto& [nrm, off] : found) out.emplace_back(RatVec(nrm), off);
  return out;
}

}  // namespace oracle
