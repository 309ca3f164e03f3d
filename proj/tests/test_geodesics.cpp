#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "qflat/geodesics.hpp"

using namespace qflat;

namespace {

constexpr double pi = std::numbers::pi;

ModelManifold sphere(int n, double d, double cutoff) {
  ModelManifold m;
  m.kind = ModelManifold::Kind::sphere;
  m.dim = n;
  m.dist = d;
  m.cutoff = cutoff;
  return m;
}

ModelManifold torus(std::vector<double> offset, double cutoff) {
  ModelManifold m;
  m.kind = ModelManifold::Kind::torus;
  m.dim = static_cast<int>(offset.size());
  m.offset = std::move(offset);
  m.basis.assign(m.dim, std::vector<double>(m.dim, 0.0));
  for (int i = 0; i < m.dim; ++i) m.basis[i][i] = 1.0;
  m.cutoff = cutoff;
  return m;
}

// Jacobi-field oracle on the round sphere: J'' + J = 0, J(0) = 0, J'(0) = 1;
// the index is (n-1) times the number of interior zeros. RK4 with sign-change
// counting.
int jacobi_index_oracle(int n, double length) {
  const int steps = 200000;
  double h = length / steps;
  double j = 0.0, v = 1.0;
  int zeros = 0;
  double prev = 0.0;
  for (int s = 0; s < steps; ++s) {
    auto acc = [](double jj) { return -jj; };
    double k1j = v, k1v = acc(j);
    double k2j = v + 0.5 * h * k1v, k2v = acc(j + 0.5 * h * k1j);
    double k3j = v + 0.5 * h * k2v, k3v = acc(j + 0.5 * h * k2j);
    double k4j = v + h * k3v, k4v = acc(j + h * k3j);
    j += h / 6.0 * (k1j + 2.0 * k2j + 2.0 * k3j + k4j);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (s > 0 && (prev < 0.0) != (j < 0.0)) ++zeros;
    prev = j;
  }
  return (n - 1) * zeros;
}

}  // namespace

TEST_CASE("S^3 census at distance 1") {
  auto records = enumerate_geodesics(sphere(3, 1.0, 12.0));
  REQUIRE(records.size() == 4);
  double expect_len[] = {1.0, 2.0 * pi - 1.0, 2.0 * pi + 1.0, 4.0 * pi - 1.0};
  int expect_idx[] = {0, 2, 4, 6};
  long long expect_cls[] = {0, -1, 1, -2};
  for (int i = 0; i < 4; ++i) {
    CHECK(records[i].length == doctest::Approx(expect_len[i]));
    CHECK(records[i].morse_index == expect_idx[i]);
    CHECK(records[i].class_label == std::vector<long long>{expect_cls[i]});
  }
}

TEST_CASE("S^2 census yields one geodesic per index") {
  auto records = enumerate_geodesics(sphere(2, 1.0, 14.0));
  REQUIRE(records.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(records[i].morse_index == i);
}

TEST_CASE("index formula matches the Jacobi oracle") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> dd(0.1, pi - 0.1);
  std::uniform_int_distribution<int> nn(2, 5), mm(0, 3);
  for (int t = 0; t < 100; ++t) {
    int n = nn(rng), m = mm(rng);
    double d = dd(rng);
    double length = (t % 2 == 0) ? d + 2.0 * pi * m : 2.0 * pi - d + 2.0 * pi * m;
    auto records = enumerate_geodesics(sphere(n, d, length + 0.1));
    auto it = std::find_if(records.begin(), records.end(), [&](const GeodesicRecord& r) {
      return std::abs(r.length - length) < 1e-9;
    });
    REQUIRE(it != records.end());
    CHECK(it->morse_index == jacobi_index_oracle(n, length));
  }
}

TEST_CASE("conjugate or coincident endpoints are rejected") {
  CHECK_THROWS_AS(enumerate_geodesics(sphere(3, 0.0, 10.0)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_geodesics(sphere(3, pi, 10.0)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_geodesics(torus({0.0, 0.0}, 3.0)), std::invalid_argument);
  ModelManifold bad = torus({0.3, 0.0}, 3.0);
  bad.basis[1] = {0.0, 0.0};
  CHECK_THROWS_AS(enumerate_geodesics(bad), std::invalid_argument);
}

TEST_CASE("flat torus: one index-0 geodesic per class") {
  auto records = enumerate_geodesics(torus({0.3, 0.0}, 3.0));
  std::set<std::vector<long long>> classes;
  for (const auto& r : records) {
    CHECK(r.morse_index == 0);
    CHECK(classes.insert(r.class_label).second);  // unique per class
  }
  CHECK(classes.count({0, 0}) == 1);
  CHECK(classes.count({1, 0}) == 1);
  CHECK(classes.count({-1, 0}) == 1);
  CHECK(classes.count({0, 1}) == 1);
  CHECK(classes.count({0, -1}) == 1);
  auto base = std::find_if(records.begin(), records.end(), [](const GeodesicRecord& r) {
    return r.class_label == std::vector<long long>{0, 0};
  });
  CHECK(base->length == doctest::Approx(0.3));
}

TEST_CASE("assumption checks on the worked cases") {
  ModelManifold s3 = sphere(3, 1.0, 12.0);
  AssumptionEntry a = check_assumption(s3, enumerate_geodesics(s3), {0}, 0);
  CHECK(a.cond_i);
  CHECK(a.cond_ii);
  CHECK(a.cond_iv);
  CHECK(a.closure_i == "analytic");

  ModelManifold s2 = sphere(2, 1.0, 14.0);
  AssumptionEntry b = check_assumption(s2, enumerate_geodesics(s2), {0}, 0);
  CHECK_FALSE(b.cond_iv);

  AssumptionEntry c = check_assumption(s2, enumerate_geodesics(s2), {0}, 2);
  CHECK_FALSE(c.cond_i);  // index 3 realized
  REQUIRE_FALSE(c.notes.empty());
  CHECK(c.notes[0].find("discrepancy") != std::string::npos);

  ModelManifold t1 = torus({0.3}, 2.0);
  AssumptionEntry d = check_assumption(t1, enumerate_geodesics(t1), {0}, 0);
  CHECK(d.cond_i);
  CHECK(d.cond_ii);
  CHECK(d.cond_iii);
  REQUIRE_FALSE(d.notes.empty());
  CHECK(d.notes[0].find("discrepancy") != std::string::npos);
}

TEST_CASE("raising the cutoff never flips nonempty to empty") {
  for (double cut : {7.0, 9.0, 12.0, 20.0}) {
    auto lo = enumerate_geodesics(sphere(3, 1.0, cut));
    auto hi = enumerate_geodesics(sphere(3, 1.0, cut + 6.0));
    std::set<int> lo_idx, hi_idx;
    for (const auto& r : lo) lo_idx.insert(r.morse_index);
    for (const auto& r : hi) hi_idx.insert(r.morse_index);
    CHECK(std::includes(hi_idx.begin(), hi_idx.end(), lo_idx.begin(), lo_idx.end()));
  }
}
