#include <doctest.h>

#include <random>

#include "toriclogk/error.hpp"
#include "toriclogk/p1conic.hpp"

using namespace toriclogk;

namespace {

ConeData cone(std::initializer_list<Rational> a) { return ConeData(std::vector<Rational>(a)); }

}  // namespace

TEST_CASE("log_futaki_p1") {
  CHECK(log_futaki_p1(cone({Rational(1, 2), Rational(1, 2), Rational(1, 2)}), 0) ==
        Rational(1, 2));
  CHECK(log_futaki_p1(cone({Rational(2, 5)}), 0) == Rational(-2, 5));
  CHECK(log_futaki_p1(cone({Rational(1, 2), Rational(1, 2)}), 0) == 0);
  try {
    log_futaki_p1(cone({Rational(1, 2)}), 1);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("ConeData rejects weights outside (0,1)") {
  for (const Rational a : {Rational(0), Rational(1), Rational(-1, 3), Rational(4, 3)}) {
    CHECK_THROWS_AS(cone({Rational(1, 2), a}), Error);
  }
}

TEST_CASE("mean_scalar") {
  CHECK(mean_scalar(cone({Rational(2, 3), Rational(2, 3), Rational(2, 3)})) == 0);
  CHECK(mean_scalar(cone({Rational(1, 2), Rational(1, 2), Rational(1, 2)})) == Rational(1, 2));
  CHECK(mean_scalar(cone({})) == 2);
}

TEST_CASE("existence_check") {
  auto e = existence_check(cone({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK(e.exists);
  CHECK(e.curvature_sign == 1);

  e = existence_check(cone({Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(e.exists);
  CHECK(e.curvature_sign == 1);
  CHECK(e.failed_conditions == std::vector<std::string>{"(b,1)", "(b,2)"});

  e = existence_check(cone({Rational(2, 3), Rational(2, 3), Rational(2, 3)}));
  CHECK(e.exists);
  CHECK(e.curvature_sign == 0);

  e = existence_check(cone({Rational(9, 10), Rational(9, 10), Rational(9, 10)}));
  CHECK(e.exists);
  CHECK(e.curvature_sign == -1);

  e = existence_check(cone({Rational(3, 4), Rational(1, 8)}));
  CHECK_FALSE(e.exists);
  CHECK(e.failed_conditions == std::vector<std::string>{"(b,1)"});

  e = existence_check(cone({}));
  CHECK(e.exists);
  CHECK(e.curvature_sign == 1);
}

TEST_CASE("stability_check") {
  auto s = stability_check(cone({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  CHECK(s.stable_all);
  CHECK(s.futaki_values == std::vector<Rational>(3, Rational(1, 3)));

  s = stability_check(cone({Rational(1, 2), Rational(1, 4)}));
  CHECK_FALSE(s.stable_all);
  CHECK(s.futaki_values == std::vector<Rational>{Rational(-1, 4), Rational(1, 4)});

  s = stability_check(cone({Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(s.stable_all);
  CHECK(s.futaki_values == std::vector<Rational>{0, 0});
}

TEST_CASE("property: sum of values, positive-case alignment, (a) implies (b)") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> num(1, 11);
  for (int t = 0; t < 300; ++t) {
    std::vector<Rational> a;
    const int r = count(rng);
    for (int i = 0; i < r; ++i) a.push_back(make_rational(num(rng), 12));
    const ConeData c(a);
    const auto st = stability_check(c);
    Rational sum = 0;
    for (const auto& f : st.futaki_values) sum += f;
    CHECK(sum == (r - 2) * c.total());

    const auto ex = existence_check(c);
    if (ex.curvature_sign > 0) {
      CHECK(ex.exists == (st.stable_all && mean_scalar(c) > 0));
    } else {
      CHECK(st.stable_all);
      CHECK(ex.exists);
    }
  }
}
