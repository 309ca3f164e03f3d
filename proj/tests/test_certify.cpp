#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qflat/certify.hpp"

using namespace qflat;

namespace {

CertSample s1_sample(std::vector<double> a, std::vector<double> b) {
  CertSample s;
  s.a = std::move(a);
  s.b = std::move(b);
  s.model = "s1";
  return s;
}

}  // namespace

TEST_CASE("certification bounds on hand-picked pairs") {
  std::vector<CertSample> samples{
      s1_sample({0.7}, {}),
      s1_sample({0.3, -0.5}, {0.3, 0.5}),
      s1_sample({1.0, 2.0}, {1.0, 2.0}),
  };
  CertSample ann;
  ann.a = {-1.0};
  ann.b = {};
  ann.model = "annulus";
  ann.nq = 64;
  ann.np = 65;
  samples.push_back(ann);

  CertReport rep = run_certify(samples);
  REQUIRE(rep.results.size() == 4);
  CHECK(rep.all_pass);
  CHECK(rep.constants_consistent);

  CHECK(rep.results[0].target == doctest::Approx(0.7));
  CHECK(rep.results[0].ub == doctest::Approx(1.4));
  CHECK(rep.results[0].lb >= 0.7 - 1e-6);
  CHECK(rep.results[1].target == doctest::Approx(1.0));
  CHECK(rep.results[2].target == 0.0);
  CHECK(rep.results[2].ub == 0.0);
  CHECK(rep.results[3].target == doctest::Approx(1.0));
  CHECK(rep.results[3].tol > 1e-6);  // grid tolerance, not the exact-model slack
  CHECK(rep.results[3].lb >= 1.0 - rep.results[3].tol);

  // ub_osc never exceeds the coarse doubling bound.
  for (const auto& r : rep.results) CHECK(r.ub_osc <= r.ub + 1e-12);
}

TEST_CASE("a failing sample is recorded and the run continues") {
  std::vector<CertSample> samples{s1_sample({0.7}, {})};
  CertSample bad;
  bad.model = "bogus";
  samples.push_back(bad);
  samples.push_back(s1_sample({}, {0.2}));

  CertReport rep = run_certify(samples);
  REQUIRE(rep.results.size() == 3);
  CHECK(rep.results[0].ok);
  CHECK_FALSE(rep.results[1].ok);
  CHECK_FALSE(rep.results[1].error.empty());
  CHECK(rep.results[2].ok);
  CHECK_FALSE(rep.all_pass);
}

TEST_CASE("parallel run produces the identical report") {
  std::vector<CertSample> samples;
  for (int i = 0; i < 6; ++i) samples.push_back(s1_sample({0.1 * (i + 1)}, {0.05}));
  json serial = report_to_json(run_certify(samples, 1));
  json parallel = report_to_json(run_certify(samples, 4));
  CHECK(serial.dump() == parallel.dump());
  CHECK(serial.at("schema") == "cert-report/1");
  CHECK(serial.at("constants").at("A") == 2.0);
  CHECK(serial.at("constants").at("B") == 0.0);
}

TEST_CASE("csv export carries full precision") {
  CertReport rep = run_certify({s1_sample({0.7}, {})});
  std::string path = "test_cert_report.csv";
  write_report_csv(rep, path);
  std::ifstream in(path);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  CHECK(header == "target,lb,ub");
  REQUIRE(std::getline(in, row));
  double t = 0.0, lb = 0.0, ub = 0.0;
  CHECK(std::sscanf(row.c_str(), "%lf,%lf,%lf", &t, &lb, &ub) == 3);
  CHECK(t == rep.results[0].target);
  CHECK(lb == rep.results[0].lb);
  CHECK(ub == rep.results[0].ub);
  std::remove(path.c_str());
}

TEST_CASE("samples parse from json") {
  json j = json::array();
  j.push_back({{"a", {0.7}}, {"b", json::array()}, {"model", "s1"}});
  j.push_back({{"a", {-1.0}}, {"b", {0.5}}, {"model", "annulus"}, {"nq", 64}, {"np", 65}});
  auto samples = samples_from_json(j);
  REQUIRE(samples.size() == 2);
  CHECK(samples[0].a == std::vector<double>{0.7});
  CHECK(samples[1].model == "annulus");
  CHECK(samples[1].np == 65);
}

TEST_CASE("spectral-level proxy on flat and single-bump profiles") {
  GammaProxy z = gamma_proxy({}, 0.05);
  CHECK(z.rho_plus == 0.0);
  CHECK(z.rho_minus == 0.0);
  CHECK(z.beta == 0.0);
  CHECK(z.flag);

  GammaProxy g = gamma_proxy({0.7}, 0.05);
  CHECK(g.beta == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(g.sum == doctest::Approx(g.rho_plus + g.rho_minus));
  CHECK(g.flag == (g.sum >= g.beta - 1e-9));

  json pj = gamma_proxy_to_json(g);
  CHECK(pj.at("beta") == g.beta);
  CHECK(pj.at("sum_ge_beta") == g.flag);
}
