#include <doctest.h>

#include <cmath>
#include <random>

#include "qflat/profiles.hpp"

using namespace qflat;

TEST_CASE("bump profile: support, peak, symmetry") {
  for (double delta : {0.05, 0.1, 0.2}) {
    BumpProfile f = build_bump(delta);  // construction self-checks the shape
    CHECK(f.eval(0.5) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(f.eval(delta / 2) == 0.0);
    CHECK(f.eval(1.0 - delta / 2) == 0.0);
    CHECK(f.eval(-1.0) == 0.0);
    CHECK(f.eval(2.0) == 0.0);
    for (int i = 0; i <= 100; ++i) {
      double s = i / 100.0;
      CHECK(f.eval(s) == doctest::Approx(f.eval(1.0 - s)).epsilon(1e-10));
    }
    CHECK(f.max_abs_deriv() > 0.0);
    CHECK(f.max_abs_deriv() == doctest::Approx(f.deriv(0.25)));
  }
  CHECK_THROWS_AS(build_bump(0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_bump(0.25), std::invalid_argument);
  CHECK_THROWS_AS(build_bump(-0.1), std::invalid_argument);
}

TEST_CASE("profile sum supports are disjoint and peaks are exact") {
  ProfileSum sum{build_bump(0.05), {1.0, 1.0, 1.0}};
  for (std::size_t i = 0; i + 1 < 3; ++i) CHECK(sum.support_lo(i) > sum.support_hi(i + 1));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(sum.eval(sum.peak(i)) == doctest::Approx(1.0).epsilon(1e-13));
    // Peak normalization nudges the coefficients, so the endpoint zeros are
    // only exact to rounding.
    CHECK(std::abs(sum.eval(sum.support_lo(i))) <= 1e-15);
    CHECK(std::abs(sum.eval(sum.support_hi(i))) <= 1e-15);
  }
}

TEST_CASE("minmax/min/osc worked examples") {
  BumpProfile f = build_bump(0.05);
  ProfileExtrema zero = minmax_min_osc({f, {}});
  CHECK(zero.minmax == 0.0);
  CHECK(zero.min == 0.0);
  CHECK(zero.osc == 0.0);

  ProfileExtrema e = minmax_min_osc({f, {-3.0, 1.0}});
  CHECK(e.minmax == 0.0);
  CHECK(e.min == -3.0);
  CHECK(e.osc == 4.0);

  // A single positive bump still has the zero plateaus as local maxima.
  CHECK(minmax_min_osc({f, {1.0}}).minmax == 0.0);
}

TEST_CASE("scan oracle agrees with the symbolic values") {
  BumpProfile f = build_bump(0.05);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::uniform_int_distribution<int> len(0, 6);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> a(len(rng));
    for (double& x : a) x = val(rng);
    ProfileSum sum{f, a};
    ProfileExtrema sym = minmax_min_osc(sum);
    ProfileExtrema scan = minmax_min_osc_scan(sum);
    CHECK(sym.minmax == doctest::Approx(scan.minmax).epsilon(1e-9));
    CHECK(sym.min == doctest::Approx(scan.min).epsilon(1e-9));
    CHECK(sym.osc == doctest::Approx(scan.osc).epsilon(1e-9));
  }
}

TEST_CASE("minmax minus min identity and oscillation bound") {
  BumpProfile f = build_bump(0.05);
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> a(5);
    for (double& x : a) x = val(rng);
    ProfileExtrema e = minmax_min_osc({f, a});
    double min_a = 0.0;
    for (double x : a) min_a = std::min(min_a, x);
    CHECK(e.minmax - e.min == doctest::Approx(std::max(0.0, -min_a)).epsilon(1e-12));
    CHECK(e.osc <= 2.0 * sup_norm(a) + 1e-12);
  }
}

TEST_CASE("family is additive in the coefficients") {
  BumpProfile f = build_bump(0.05);
  std::vector<double> a{0.5, -1.0, 0.0}, b{-0.25, 0.75, 2.0}, s{0.25, -0.25, 2.0};
  ProfileSum fa{f, a}, fb{f, b}, fs{f, s};
  for (int i = 0; i <= 400; ++i) {
    double x = i / 400.0;
    CHECK(fs.eval(x) == doctest::Approx(fa.eval(x) + fb.eval(x)).epsilon(1e-12));
  }
}

TEST_CASE("hofer upper bound examples") {
  HoferBound same = hofer_upper_bound({1.0, 2.0}, {1.0, 2.0}, 0.05);
  CHECK(same.bound == 0.0);
  CHECK(same.osc == 0.0);

  HoferBound hb = hofer_upper_bound({-3.0, 1.0}, {}, 0.05);
  CHECK(hb.bound == doctest::Approx(6.0));
  CHECK(hb.osc == doctest::Approx(4.0));

  CHECK(hofer_upper_bound({0.7}, {}, 0.05).bound == doctest::Approx(1.4));

  // Zero padding on mismatched lengths.
  CHECK(hofer_upper_bound({1.0}, {1.0, -0.5}, 0.05).bound == doctest::Approx(1.0));
}

TEST_CASE("profile serialization has 17-significant-digit coefficients") {
  BumpProfile f = build_bump(0.05);
  json j = profile_to_json(f);
  CHECK(j.at("delta") == 0.05);
  CHECK(j.at("pieces").size() == f.pieces.size());
  // Round trip through the JSON doubles is exact.
  for (std::size_t k = 0; k < f.pieces.size(); ++k) {
    auto coeffs = j["pieces"][k]["coeffs"].get<std::vector<double>>();
    CHECK(coeffs == f.pieces[k].poly.c);
  }
}
