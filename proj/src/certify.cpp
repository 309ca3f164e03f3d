#include "qflat/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "qflat/profiles.hpp"
#include "qflat/spectral.hpp"
#include "qflat/sublevel_grid.hpp"
#include "qflat/wrapped_s1.hpp"

namespace qflat {

namespace {

CertResult certify_one(const CertSample& s, int index) {
  CertResult r;
  r.index = index;
  try {
    std::vector<double> d = coeff_difference(s.a, s.b);
    r.target = sup_norm(d);
    HoferBound hb = hofer_upper_bound(s.a, s.b, s.delta);
    r.ub = hb.bound;
    r.ub_osc = hb.osc;
    if (s.model == "s1") {
      r.lb = s1_beta(d, s.delta).beta;
      r.tol = 1e-6;
    } else if (s.model == "annulus") {
      MorseBetaResult mb = morse_beta_estimate(d, s.delta, s.nq, s.np, s.eps, s.seed);
      r.lb = mb.beta_hat;
      r.tol = mb.tol;
    } else {
      throw std::invalid_argument("unknown model: " + s.model);
    }
    r.pass = r.lb >= r.target - r.tol && std::abs(r.ub - 2.0 * r.target) <= 1e-12;
    r.ok = true;
  } catch (const std::exception& e) {
    r.ok = false;
    r.pass = false;
    r.error = e.what();
  }
  return r;
}

}  // namespace

CertReport run_certify(const std::vector<CertSample>& samples, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  CertReport report;
  report.results.resize(samples.size());

  workers = std::max(1, std::min<int>(workers, static_cast<int>(samples.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < samples.size(); ++i)
      report.results[i] = certify_one(samples[i], static_cast<int>(i));
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < samples.size(); i = next.fetch_add(1))
          report.results[i] = certify_one(samples[i], static_cast<int>(i));
      });
    for (auto& th : pool) th.join();
  }

  report.all_pass = true;
  report.constants_consistent = true;
  for (const auto& r : report.results) {
    report.all_pass = report.all_pass && r.pass;
    // (A, B) = (2, 0): target <= lb + tol and ub = 2 * target exactly.
    report.constants_consistent =
        report.constants_consistent && r.ok && r.target <= r.lb + r.tol &&
        std::abs(r.ub - 2.0 * r.target) <= 1e-12;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "certify: " << samples.size() << " samples in " << ms << " ms\n";
  return report;
}

GammaProxy gamma_proxy(const std::vector<double>& a, double delta) {
  auto rho_of = [&](const std::vector<double>& coeffs) {
    S1Result s = s1_beta(coeffs, delta);
    for (const auto& b : s.bc.bars)
      if (b.infinite()) return spectral_level(s.complex, {{b.creator_id}});
    throw std::runtime_error("gamma_proxy: no infinite bar");
  };
  GammaProxy g;
  std::vector<double> neg(a);
  for (double& x : neg) x = -x;
  g.rho_plus = rho_of(a);
  g.rho_minus = rho_of(neg);
  g.sum = g.rho_plus + g.rho_minus;
  g.beta = s1_beta(a, delta).beta;
  g.flag = g.sum >= g.beta - 1e-9;
  return g;
}

json report_to_json(const CertReport& report) {
  json samples = json::array();
  for (const auto& r : report.results) {
    samples.push_back({{"index", r.index},
                       {"ok", r.ok},
                       {"error", r.error},
                       {"target", r.target},
                       {"lb", r.lb},
                       {"ub", r.ub},
                       {"ub_osc", r.ub_osc},
                       {"tol", r.tol},
                       {"pass", r.pass}});
  }
  return {{"schema", "cert-report/1"},
          {"samples", samples},
          {"constants", {{"A", 2.0}, {"B", 0.0}, {"consistent", report.constants_consistent}}},
          {"all_pass", report.all_pass}};
}

void write_report_csv(const CertReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_report_csv: cannot open " + path);
  out << "target,lb,ub\n";
  char buf[128];
  for (const auto& r : report.results) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.target, r.lb, r.ub);
    out << buf;
  }
}

std::vector<CertSample> samples_from_json(const json& j) {
  std::vector<CertSample> out;
  for (const auto& item : j) {
    CertSample s;
    s.a = item.at("a").get<std::vector<double>>();
    s.b = item.value("b", std::vector<double>{});
    s.model = item.value("model", std::string("s1"));
    s.delta = item.value("delta", 0.05);
    s.nq = item.value("nq", 256);
    s.np = item.value("np", 256);
    s.eps = item.value("eps", 1e-3);
    s.seed = item.value("seed", std::uint64_t{0});
    out.push_back(std::move(s));
  }
  return out;
}

json gamma_proxy_to_json(const GammaProxy& g) {
  return {{"rho_plus", g.rho_plus},
          {"rho_minus", g.rho_minus},
          {"sum", g.sum},
          {"beta", g.beta},
          {"sum_ge_beta", g.flag}};
}

}  // namespace qflat
