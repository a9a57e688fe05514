#include <doctest.h>

#include <regex>

#include "fixtures.hpp"
#include "toriclogk/error.hpp"
#include "toriclogk/svg.hpp"

using namespace toriclogk;
using namespace fixtures;

namespace {

// (cx, cy) of the first circle with the given class.
std::pair<std::string, std::string> circle(const std::string& svg, const std::string& cls) {
  const std::regex re("<circle class=\"" + cls + "\" cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\"");
  std::smatch m;
  if (!std::regex_search(svg, m, re)) return {};
  return {m[1], m[2]};
}

}  // namespace

TEST_CASE("render_svg: Q_beta at beta = R sits on the exit point") {
  const std::string svg = render_svg(bl2p2(), Rational(21, 25), "Bl2P2");
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("21/25") != std::string::npos);
  const auto qb = circle(svg, "q-beta");
  CHECK_FALSE(qb.first.empty());
  CHECK(qb == circle(svg, "exit-point"));
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);
  // 5 facets, 5 normal arrows
  std::size_t arrows = 0;
  for (auto pos = svg.find("class=\"normal\""); pos != std::string::npos;
       pos = svg.find("class=\"normal\"", pos + 1)) {
    ++arrows;
  }
  CHECK(arrows == 5);
}

TEST_CASE("render_svg: Bl_p P^2 without beta") {
  const std::string svg = render_svg(bl1p2());
  CHECK(svg.find("q-beta") == std::string::npos);
  CHECK_FALSE(circle(svg, "exit-point").first.empty());
  CHECK_FALSE(circle(svg, "barycenter").first.empty());
  // P_c = (1/12, 1/12) is up and to the right of O on screen.
  const auto o = circle(svg, "origin");
  const auto pc = circle(svg, "barycenter");
  CHECK(std::stod(pc.first) > std::stod(o.first));
  CHECK(std::stod(pc.second) < std::stod(o.second));
  CHECK(svg == render_svg(bl1p2()));
}

TEST_CASE("render_svg: square draws P_c on the origin") {
  const std::string svg = render_svg(square());
  CHECK(circle(svg, "barycenter") == circle(svg, "origin"));
  CHECK(svg.find("exit-point") == std::string::npos);
}

TEST_CASE("render_svg: errors") {
  try {
    render_svg(segment());
    FAIL("expected UnsupportedDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDimension);
  }
  CHECK_THROWS_AS(render_svg(poly({{0, 0}, {2, 0}, {0, 2}}), Rational(1, 2)), Error);
}
