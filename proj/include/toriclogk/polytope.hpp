#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "toriclogk/rational.hpp"

namespace toriclogk {

/// The closed half-space <normal, x> <= offset. The normal is a primitive
/// integer vector.
struct HalfSpace {
  RatVec normal;
  Rational offset;

  /// offset - <normal, x>; negative means the inequality is violated.
  Rational slack(const RatVec& x) const { return offset - dot(normal, x); }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Full-dimensional convex hull of finitely many integer points, held in both
/// V- and H-representation. Immutable after construction.
///
/// Vertices are stored in lexicographic order and facets are sorted by normal
/// (lexicographically), so every derived listing is deterministic.
class LatticePolytope {
 public:
  /// Deduplicates the input, drops non-extreme points and computes the facets
  /// with an exact beneath-beyond hull. Throws EmptyInput, NotLattice,
  /// DimensionMismatch or NotFullDimensional.
  static LatticePolytope build(const std::vector<RatVec>& points);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<RatVec>& vertices() const noexcept { return vertices_; }
  const std::vector<HalfSpace>& facets() const noexcept { return facets_; }
  /// Indices into vertices() of the vertices on each facet.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const noexcept {
    return facet_vertices_;
  }

  const Rational& volume() const noexcept { return volume_; }
  const RatVec& barycenter() const noexcept { return barycenter_; }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;

  std::size_t dim_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  Rational volume_;
  RatVec barycenter_;
};

/// Origin strictly inside and every facet at offset 1.
bool is_reflexive(const LatticePolytope& p);

/// Exact Lebesgue volume, summed over a pulling triangulation.
Rational volume(const LatticePolytope& p);

/// Exact centroid.
RatVec barycenter(const LatticePolytope& p);

/// max over the polytope of <x, direction>. Throws ZeroDirection.
Rational support(const LatticePolytope& p, const RatVec& direction);

/// Vertices attaining support(p, direction), lexicographically sorted.
std::vector<RatVec> support_face(const LatticePolytope& p, const RatVec& direction);

struct PointClass {
  enum class Kind { Interior, Boundary, Outside };
  Kind kind;
  /// Boundary: facets met with equality. Outside: violated facets. Indices
  /// into LatticePolytope::facets(), ascending.
  std::vector<std::size_t> facets;
};

PointClass classify_point(const LatticePolytope& p, const RatVec& x);

/// Largest t >= 0 with t * direction inside the polytope. Requires the origin
/// to be an interior point (OriginNotInterior) and direction != 0.
Rational ray_exit_scale(const LatticePolytope& p, const RatVec& direction);

/// Integer points of k * P in lexicographic order.
std::vector<RatVec> lattice_points(const LatticePolytope& p, long k);

/// Streams the integer points of k * P in lexicographic order without
/// materialising rationals. Throws Overflow if the scan box does not fit
/// comfortably in 64-bit integers.
void for_each_lattice_point(const LatticePolytope& p, long k,
                            const std::function<void(std::span<const std::int64_t>)>& visit);

std::string to_string(PointClass::Kind kind);

}  // namespace toriclogk
