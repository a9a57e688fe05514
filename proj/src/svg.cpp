#include "toriclogk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "toriclogk/error.hpp"
#include "toriclogk/invariants.hpp"

namespace toriclogk {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 40.0;

struct Pt {
  double x, y;
};

Pt to_pt(const RatVec& v) { return {v[0].get_d(), v[1].get_d()}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Vertex indices in boundary order, walking facet (edge) adjacency.
std::vector<std::size_t> boundary_cycle(const LatticePolytope& p) {
  const auto& edges = p.facet_vertices();
  std::vector<std::size_t> cycle{edges.front()[0]};
  std::size_t prev_edge = 0;
  std::size_t current = edges.front()[1];
  while (current != cycle.front()) {
    cycle.push_back(current);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e == prev_edge) continue;
      if (edges[e][0] == current || edges[e][1] == current) {
        current = edges[e][0] == current ? edges[e][1] : edges[e][0];
        prev_edge = e;
        break;
      }
    }
  }
  return cycle;
}

class Canvas {
 public:
  Canvas(double min_x, double max_x, double min_y, double max_y) {
    const double span = std::max(max_x - min_x, max_y - min_y);
    scale_ = (kCanvas - 2 * kMargin) / span;
    cx_ = kCanvas / 2 - scale_ * (min_x + max_x) / 2;
    cy_ = kCanvas / 2 + scale_ * (min_y + max_y) / 2;
  }

  double sx(double x) const { return cx_ + scale_ * x; }
  double sy(double y) const { return cy_ - scale_ * y; }
  double scale() const { return scale_; }
  double cx() const { return cx_; }
  double cy() const { return cy_; }

 private:
  double scale_ = 1, cx_ = 0, cy_ = 0;
};

}  // namespace

std::string render_svg(const LatticePolytope& p, const std::optional<Rational>& beta,
                       const std::string& title) {
  if (p.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension,
                "SVG rendering needs dim = 2, got " + std::to_string(p.dim()));
  }
  if (beta && !is_reflexive(p)) {
    throw Error(ErrorCode::NotReflexive, "Q_beta needs a reflexive polygon");
  }

  const RatVec origin(2);
  const RatVec& pc = p.barycenter();
  const bool origin_inside = classify_point(p, origin).kind == PointClass::Kind::Interior;
  std::optional<RatVec> q;
  std::optional<RatVec> qb;
  if (origin_inside && !pc.is_zero()) q = ray_exit_scale(p, -pc) * (-pc);
  if (beta && q) qb = q_beta(p, *beta);

  std::vector<Pt> extent;
  for (const auto& v : p.vertices()) extent.push_back(to_pt(v));
  extent.push_back({0, 0});
  if (qb) extent.push_back(to_pt(*qb));
  double min_x = extent[0].x, max_x = min_x, min_y = extent[0].y, max_y = min_y;
  for (const auto& e : extent) {
    min_x = std::min(min_x, e.x);
    max_x = std::max(max_x, e.x);
    min_y = std::min(min_y, e.y);
    max_y = std::max(max_y, e.y);
  }
  const double pad = 0.15 * std::max(max_x - min_x, max_y - min_y);
  const Canvas c(min_x - pad, max_x + pad, min_y - pad, max_y + pad);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<!-- toriclogk: world (x, y) maps to (" << num(c.cx()) << " + " << num(c.scale())
      << " x, " << num(c.cy()) << " - " << num(c.scale())
      << " y); coordinates rounded to 6 decimals -->\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  svg << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" "
         "fill=\"#b03030\"/></marker></defs>\n";
  if (!title.empty()) {
    svg << "<title>" << escape(title) << "</title>\n";
  }

  // Axes.
  svg << "<line class=\"axis\" x1=\"" << num(c.sx(min_x - pad)) << "\" y1=\"" << num(c.sy(0))
      << "\" x2=\"" << num(c.sx(max_x + pad)) << "\" y2=\"" << num(c.sy(0))
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  svg << "<line class=\"axis\" x1=\"" << num(c.sx(0)) << "\" y1=\"" << num(c.sy(min_y - pad))
      << "\" x2=\"" << num(c.sx(0)) << "\" y2=\"" << num(c.sy(max_y + pad))
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";

  svg << "<polygon class=\"polytope\" points=\"";
  bool first = true;
  for (std::size_t i : boundary_cycle(p)) {
    const Pt v = to_pt(p.vertices()[i]);
    svg << (first ? "" : " ") << num(c.sx(v.x)) << ',' << num(c.sy(v.y));
    first = false;
  }
  svg << "\" fill=\"#dde8f4\" stroke=\"#1f3b73\" stroke-width=\"2\"/>\n";

  // Outward normals from each edge midpoint, drawn at a fixed on-screen length.
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto& ends = p.facet_vertices()[f];
    const Pt a = to_pt(p.vertices()[ends[0]]);
    const Pt b = to_pt(p.vertices()[ends[1]]);
    const Pt mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const Pt nrm = to_pt(p.facets()[f].normal);
    const double len = std::hypot(nrm.x, nrm.y);
    const double arrow = 28.0 / c.scale();
    svg << "<line class=\"normal\" x1=\"" << num(c.sx(mid.x)) << "\" y1=\"" << num(c.sy(mid.y))
        << "\" x2=\"" << num(c.sx(mid.x + arrow * nrm.x / len)) << "\" y2=\""
        << num(c.sy(mid.y + arrow * nrm.y / len))
        << "\" stroke=\"#b03030\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }

  if (q) {
    svg << "<line class=\"ray\" x1=\"" << num(c.sx(pc[0].get_d())) << "\" y1=\""
        << num(c.sy(pc[1].get_d())) << "\" x2=\"" << num(c.sx((*q)[0].get_d())) << "\" y2=\""
        << num(c.sy((*q)[1].get_d())) << "\" stroke=\"#333\" stroke-dasharray=\"4,3\"/>\n";
  }

  auto marker = [&](const RatVec& at, const std::string& cls, const std::string& label,
                    const std::string& color, double dx, double dy) {
    const Pt v = to_pt(at);
    svg << "<circle class=\"" << cls << "\" cx=\"" << num(c.sx(v.x)) << "\" cy=\""
        << num(c.sy(v.y)) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    svg << "<text class=\"" << cls << "-label\" x=\"" << num(c.sx(v.x) + dx) << "\" y=\""
        << num(c.sy(v.y) + dy) << "\" font-family=\"serif\" font-size=\"15\">" << label
        << "</text>\n";
  };
  marker(origin, "origin", "O", "#000", -16, 16);
  marker(pc, "barycenter", "P<tspan baseline-shift=\"sub\" font-size=\"11\">c</tspan>",
         "#1f7a1f", 6, -6);
  if (q) marker(*q, "exit-point", "Q", "#1f3b73", -18, 18);
  if (qb) {
    marker(*qb, "q-beta",
           "Q<tspan baseline-shift=\"sub\" font-size=\"11\">" + escape(to_string(*beta)) +
               "</tspan>",
           "#b06000", 8, -8);
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace toriclogk
