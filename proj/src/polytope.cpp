#include "toriclogk/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "toriclogk/error.hpp"
#include "toriclogk/linalg.hpp"

namespace toriclogk {

namespace {

using Pointers = std::vector<const RatVec*>;

struct Plane {
  RatVec normal;
  Rational offset;
};

bool plane_less(const Plane& a, const Plane& b) {
  if (a.normal == b.normal) return a.offset < b.offset;
  return a.normal < b.normal;
}

// Plane through `on`, oriented so that `inside` lies strictly below it.
Plane oriented_plane(const Pointers& on, std::size_t n, const RatVec& inside) {
  auto normal = linalg::hyperplane_normal(on, n);
  if (!normal) throw std::logic_error("hull: degenerate facet candidate");
  Rational offset = dot(*normal, *on.front());
  if (dot(*normal, inside) > offset) {
    *normal = -*normal;
    offset = -offset;
  }
  return {std::move(*normal), std::move(offset)};
}

std::vector<std::size_t> points_on(const Plane& h, const std::vector<RatVec>& pts,
                                   const std::vector<std::size_t>& active) {
  std::vector<std::size_t> on;
  for (std::size_t i : active) {
    if (dot(h.normal, pts[i]) == h.offset) on.push_back(i);
  }
  return on;
}

Pointers gather(const std::vector<RatVec>& pts, const std::vector<std::size_t>& idx) {
  Pointers out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(&pts[i]);
  return out;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Beneath-beyond over exact rationals. Returns the facet planes; interior and
// coplanar-but-redundant points never become part of a facet's point set.
std::vector<Plane> convex_hull(const std::vector<RatVec>& pts, std::size_t n) {
  std::vector<std::size_t> simplex;
  for (std::size_t i = 0; i < pts.size() && simplex.size() < n + 1; ++i) {
    simplex.push_back(i);
    if (linalg::affine_rank(gather(pts, simplex)) != simplex.size()) simplex.pop_back();
  }
  if (simplex.size() < n + 1) {
    throw Error(ErrorCode::NotFullDimensional,
                "affine hull has dimension " + std::to_string(simplex.size() - 1) + " < " +
                    std::to_string(n));
  }

  RatVec inside(n);
  for (std::size_t i : simplex) inside += pts[i];
  inside *= Rational(1, static_cast<unsigned long>(n + 1));

  std::vector<Plane> planes;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::size_t> face;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != skip) face.push_back(simplex[j]);
    }
    planes.push_back(oriented_plane(gather(pts, face), n, inside));
  }
  std::vector<std::size_t> active = simplex;
  std::sort(active.begin(), active.end());

  const std::set<std::size_t> in_simplex(simplex.begin(), simplex.end());
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    if (in_simplex.count(pi)) continue;
    const RatVec& p = pts[pi];

    std::vector<bool> visible(planes.size());
    bool any_visible = false;
    for (std::size_t f = 0; f < planes.size(); ++f) {
      visible[f] = dot(planes[f].normal, p) > planes[f].offset;
      any_visible = any_visible || visible[f];
    }
    if (!any_visible) continue;  // p already lies in the hull

    std::vector<std::vector<std::size_t>> on(planes.size());
    for (std::size_t f = 0; f < planes.size(); ++f) on[f] = points_on(planes[f], pts, active);

    std::vector<Plane> next;
    for (std::size_t f = 0; f < planes.size(); ++f) {
      if (!visible[f]) next.push_back(planes[f]);
    }
    // Horizon ridges: visible/invisible facet pairs sharing an (n-2)-face.
    for (std::size_t v = 0; v < planes.size(); ++v) {
      if (!visible[v]) continue;
      for (std::size_t u = 0; u < planes.size(); ++u) {
        if (visible[u]) continue;
        auto ridge = intersect(on[v], on[u]);
        if (linalg::affine_rank(gather(pts, ridge)) != n - 1) continue;
        Pointers cone = gather(pts, ridge);
        cone.push_back(&p);
        next.push_back(oriented_plane(cone, n, inside));
      }
    }
    std::sort(next.begin(), next.end(), plane_less);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Plane& a, const Plane& b) {
                             return a.normal == b.normal && a.offset == b.offset;
                           }),
               next.end());
    planes = std::move(next);

    active.push_back(pi);
    std::vector<std::size_t> kept;
    for (std::size_t i : active) {
      const bool on_boundary = std::any_of(planes.begin(), planes.end(), [&](const Plane& h) {
        return dot(h.normal, pts[i]) == h.offset;
      });
      if (on_boundary) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end());
    active = std::move(kept);
  }
  std::sort(planes.begin(), planes.end(), plane_less);
  return planes;
}

// Pulling triangulation: cone the lowest-index vertex of `face` over every
// subface not containing it. Emits vertex index tuples of n-simplices.
void triangulate(const std::vector<std::size_t>& face, std::size_t face_dim,
                 const std::vector<RatVec>& verts,
                 const std::vector<std::vector<std::size_t>>& facet_verts,
                 std::vector<std::size_t>& apexes,
                 std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == face_dim + 1) {
    auto simplex = apexes;
    simplex.insert(simplex.end(), face.begin(), face.end());
    out.push_back(std::move(simplex));
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& fv : facet_verts) {
    auto sub = intersect(face, fv);
    if (sub.empty() || sub.front() == apex) continue;
    if (linalg::affine_rank(gather(verts, sub)) != face_dim) continue;
    subfaces.insert(std::move(sub));
  }
  apexes.push_back(apex);
  for (const auto& sub : subfaces) triangulate(sub, face_dim - 1, verts, facet_verts, apexes, out);
  apexes.pop_back();
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

void require_direction(const LatticePolytope& p, const RatVec& d) {
  if (d.size() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "direction has " + std::to_string(d.size()) +
                                                  " coordinates, polytope has dimension " +
                                                  std::to_string(p.dim()));
  }
  if (d.is_zero()) throw Error(ErrorCode::ZeroDirection, "direction must be nonzero");
}

}  // namespace

LatticePolytope LatticePolytope::build(const std::vector<RatVec>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points given");
  const std::size_t n = points.front().size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "points have no coordinates");
  for (const auto& pt : points) {
    if (pt.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "points of different dimensions");
    }
    if (!pt.is_integral()) {
      throw Error(ErrorCode::NotLattice, "non-integer point " + to_string(pt));
    }
  }
  std::vector<RatVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < n + 1) {
    throw Error(ErrorCode::NotFullDimensional, "need at least " + std::to_string(n + 1) +
                                                   " distinct points in dimension " +
                                                   std::to_string(n));
  }

  const std::vector<Plane> planes = convex_hull(pts, n);

  // A point is a vertex iff the normals of the facets through it span Q^n.
  LatticePolytope poly;
  poly.dim_ = n;
  for (const auto& pt : pts) {
    linalg::Matrix normals;
    for (const auto& h : planes) {
      if (dot(h.normal, pt) == h.offset) normals.push_back(h.normal.coords());
    }
    if (!normals.empty() && linalg::rank(normals) == n) poly.vertices_.push_back(pt);
  }
  for (const auto& h : planes) poly.facets_.push_back({h.normal, h.offset});

  // Cross-validate the two representations.
  for (const auto& pt : pts) {
    for (const auto& h : poly.facets_) {
      if (h.slack(pt) < 0) throw std::logic_error("hull: input point violates a facet");
    }
  }
  for (const auto& h : poly.facets_) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < poly.vertices_.size(); ++i) {
      if (h.slack(poly.vertices_[i]) == 0) on.push_back(i);
    }
    if (on.size() < n || linalg::affine_rank(gather(poly.vertices_, on)) != n) {
      throw std::logic_error("hull: facet is not spanned by vertices");
    }
    poly.facet_vertices_.push_back(std::move(on));
  }

  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> all(poly.vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> apexes;
  triangulate(all, n, poly.vertices_, poly.facet_vertices_, apexes, simplices);

  const Integer n_fact = factorial(n);
  Rational total = 0;
  RatVec moment(n);
  for (const auto& s : simplices) {
    linalg::Matrix m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      m.push_back((poly.vertices_[s[i]] - poly.vertices_[s[0]]).coords());
    }
    Rational vol = abs(linalg::determinant(std::move(m))) / n_fact;
    RatVec centroid(n);
    for (std::size_t i : s) centroid += poly.vertices_[i];
    centroid *= Rational(1, static_cast<unsigned long>(n + 1));
    moment += vol * centroid;
    total += vol;
  }
  poly.volume_ = total;
  poly.barycenter_ = (1 / total) * moment;
  return poly;
}

bool is_reflexive(const LatticePolytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const HalfSpace& h) { return h.offset == 1; });
}

Rational volume(const LatticePolytope& p) { return p.volume(); }

RatVec barycenter(const LatticePolytope& p) { return p.barycenter(); }

Rational support(const LatticePolytope& p, const RatVec& direction) {
  require_direction(p, direction);
  Rational best = dot(p.vertices().front(), direction);
  for (const auto& v : p.vertices()) best = std::max(best, Rational(dot(v, direction)));
  return best;
}

std::vector<RatVec> support_face(const LatticePolytope& p, const RatVec& direction) {
  const Rational w = support(p, direction);
  std::vector<RatVec> face;
  for (const auto& v : p.vertices()) {
    if (dot(v, direction) == w) face.push_back(v);
  }
  return face;
}

PointClass classify_point(const LatticePolytope& p, const RatVec& x) {
  if (x.size() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match polytope");
  }
  std::vector<std::size_t> tight;
  std::vector<std::size_t> violated;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const int s = sign(p.facets()[f].slack(x));
    if (s < 0) violated.push_back(f);
    if (s == 0) tight.push_back(f);
  }
  if (!violated.empty()) return {PointClass::Kind::Outside, std::move(violated)};
  if (!tight.empty()) return {PointClass::Kind::Boundary, std::move(tight)};
  return {PointClass::Kind::Interior, {}};
}

Rational ray_exit_scale(const LatticePolytope& p, const RatVec& direction) {
  require_direction(p, direction);
  if (classify_point(p, RatVec(p.dim())).kind != PointClass::Kind::Interior) {
    throw Error(ErrorCode::OriginNotInterior, "origin is not an interior point");
  }
  bool found = false;
  Rational best;
  for (const auto& h : p.facets()) {
    const Rational rate = dot(h.normal, direction);
    if (rate <= 0) continue;
    Rational t = h.offset / rate;
    if (!found || t < best) best = std::move(t);
    found = true;
  }
  if (!found) throw std::logic_error("ray_exit_scale: bounded polytope has no exit facet");
  return best;
}

void for_each_lattice_point(const LatticePolytope& p, long k,
                            const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "dilation factor must be nonnegative");
  const std::size_t n = p.dim();
  // Keeps every dot product below 2^62 for n <= 16.
  constexpr std::int64_t limit = std::int64_t{1} << 26;
  auto to_i64 = [&](const Integer& z) {
    if (!z.fits_slong_p() || abs(z) > limit) {
      throw Error(ErrorCode::Overflow, "lattice scan coordinates exceed 64-bit budget");
    }
    return static_cast<std::int64_t>(z.get_si());
  };

  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer mn = p.vertices().front()[i].get_num();
    Integer mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, Integer(v[i].get_num()));
      mx = std::max(mx, Integer(v[i].get_num()));
    }
    lo[i] = to_i64(mn * k);
    hi[i] = to_i64(mx * k);
  }
  struct IntFacet {
    std::vector<std::int64_t> normal;
    std::int64_t offset;
  };
  std::vector<IntFacet> facets;
  for (const auto& h : p.facets()) {
    IntFacet f{std::vector<std::int64_t>(n), to_i64(Integer(h.offset.get_num() * k))};
    for (std::size_t i = 0; i < n; ++i) f.normal[i] = to_i64(h.normal[i].get_num());
    facets.push_back(std::move(f));
  }

  std::vector<std::int64_t> x = lo;
  while (true) {
    const bool inside = std::all_of(facets.begin(), facets.end(), [&](const IntFacet& f) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += f.normal[i] * x[i];
      return s <= f.offset;
    });
    if (inside) visit(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return;
    }
  }
}

std::vector<RatVec> lattice_points(const LatticePolytope& p, long k) {
  std::vector<RatVec> out;
  for_each_lattice_point(p, k, [&](std::span<const std::int64_t> x) {
    RatVec v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = static_cast<long>(x[i]);
    out.push_back(std::move(v));
  });
  return out;
}

std::string to_string(PointClass::Kind kind) {
  switch (kind) {
    case PointClass::Kind::Interior: return "interior";
    case PointClass::Kind::Boundary: return "boundary";
    case PointClass::Kind::Outside: return "outside";
  }
  return "unknown";
}

}  // namespace toriclogk
