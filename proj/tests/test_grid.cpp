#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "qflat/bottleneck.hpp"
#include "qflat/sublevel_grid.hpp"

using namespace qflat;

namespace {

GridField make_field(int nq, int np, double (*f)(double, double)) {
  GridField g;
  g.nq = nq;
  g.np = np;
  g.values.resize(static_cast<std::size_t>(nq) * np);
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < np; ++j)
      g.values[static_cast<std::size_t>(i) * np + j] =
          f(static_cast<double>(i) / nq, -1.0 + 2.0 * j / (np - 1));
  return g;
}

int count_bars(const Barcode& bc, int degree, bool infinite) {
  int n = 0;
  for (const auto& b : bc.bars)
    if (b.degree == degree && b.infinite() == infinite) ++n;
  return n;
}

}  // namespace

TEST_CASE("constant field has annulus ranks only") {
  GridField g = make_field(16, 9, [](double, double) { return 2.5; });
  Barcode bc = cubical_barcode(g);
  CHECK(count_bars(bc, 0, true) == 1);
  CHECK(count_bars(bc, 1, true) == 1);
  CHECK(count_bars(bc, 2, true) == 0);
  int finite = 0;
  for (const auto& b : bc.bars) finite += !b.infinite();
  CHECK(finite == 0);
}

TEST_CASE("q-independent double well: one finite bar of the barrier height") {
  // Wells at p = +-1/2 (value -1), barrier at p = 0 and boundary (value 1).
  GridField g = make_field(16, 65,
                           [](double, double p) { return std::cos(2.0 * std::numbers::pi * p); });
  Barcode bc = cubical_barcode(g);
  CHECK(count_bars(bc, 0, true) == 1);
  CHECK(count_bars(bc, 1, true) == 1);
  CHECK(count_bars(bc, 0, false) == 1);
  for (const auto& b : bc.bars)
    if (b.degree == 0 && !b.infinite()) CHECK(b.length() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("annulus field closed forms") {
  GridField zero = annulus_field({}, 0.05, 16, 9, 0.0, 0);
  for (double v : zero.values) CHECK(v == 0.0);

  // Single negative bump: the well bottom sits at |p| = 5/8.
  GridField g = annulus_field({-1.0}, 0.05, 16, 17, 0.0, 0);
  CHECK(g.at(3, 13) == doctest::Approx(1.0).epsilon(1e-12));  // p = 5/8
  CHECK(g.at(3, 3) == doctest::Approx(1.0).epsilon(1e-12));   // p = -5/8

  GridField h = annulus_field({-3.0, 1.0}, 0.05, 16, 33, 0.0, 0);
  double mn = h.values[0], mx = h.values[0];
  for (double v : h.values) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  CHECK(mn == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(mx == doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(annulus_field({}, 0.05, 4, 9, 0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(annulus_field({}, 0.05, 16, 9, -1.0, 0), std::invalid_argument);
}

TEST_CASE("cell guard rejects oversized grids") {
  GridField g;
  g.nq = 4000;
  g.np = 4000;
  CHECK_THROWS_AS(cubical_barcode(g), std::runtime_error);
}

TEST_CASE("barcode is stable under sup-norm jitter") {
  GridField base = annulus_field({-1.0, 0.5}, 0.05, 24, 25, 0.0, 0);
  std::mt19937_64 rng(9);
  const double eps = 0.01;
  std::uniform_real_distribution<double> jitter(-eps, eps);
  GridField moved = base;
  for (double& v : moved.values) v += jitter(rng);
  double d = bottleneck_distance(cubical_barcode(base), cubical_barcode(moved));
  CHECK(d <= eps + 1e-12);
}

TEST_CASE("morse beta estimate examples") {
  MorseBetaResult z = morse_beta_estimate({}, 0.05, 16, 17, 0.0, 0);
  CHECK(z.beta_hat == 0.0);
  CHECK(z.target == 0.0);
  CHECK(z.pass);

  MorseBetaResult pos = morse_beta_estimate({2.0}, 0.05, 64, 65, 1e-3, 0);
  CHECK(pos.target == 0.0);
  CHECK(pos.pass);  // trivially, beta_hat only reported

  MorseBetaResult neg = morse_beta_estimate({-1.0}, 0.05, 128, 129, 1e-3, 0);
  CHECK(neg.target == doctest::Approx(1.0));
  CHECK(neg.pass);
  CHECK(neg.beta_hat == doctest::Approx(1.0).epsilon(0.02));

  MorseBetaResult half = morse_beta_estimate({-1.0}, 0.05, 64, 65, 1e-3, 0);
  CHECK(std::abs(half.beta_hat - neg.beta_hat) <= half.tol);
}

TEST_CASE("field dump round trip") {
  GridField g = annulus_field({-1.0}, 0.05, 16, 17, 1e-3, 42);
  std::string path = "test_field_dump.bin";
  write_field(g, path);
  GridField back = read_field(path);
  CHECK(back.nq == g.nq);
  CHECK(back.np == g.np);
  CHECK(back.values == g.values);
  CHECK(back.metadata == g.metadata);
  std::remove(path.c_str());
}
