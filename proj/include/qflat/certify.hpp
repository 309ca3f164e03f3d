#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qflat/filtered_complex.hpp"

namespace qflat {

// One certification sample: lower/upper bounds for the pair (H_a, H_b),
// computed either from the wrapped-circle complex ("s1") or from annulus
// sublevel persistence ("annulus").
struct CertSample {
  std::vector<double> a, b;
  std::string model = "s1";  // "s1" | "annulus"
  double delta = 0.05;
  int nq = 256, np = 256;  // annulus only
  double eps = 1e-3;       // annulus only
  std::uint64_t seed = 0;
};

struct CertResult {
  int index = 0;
  bool ok = false;        // computation completed
  std::string error;      // set when ok is false
  double target = 0.0;    // ||a - b||_inf
  double lb = 0.0;        // boundary-depth lower bound
  double ub = 0.0;        // 2 * target
  double ub_osc = 0.0;    // osc(f_{a-b}), the tighter alternative upper bound
  double tol = 0.0;       // lb slack: 1e-6 (s1) or the grid tolerance (annulus)
  bool pass = false;      // lb >= target - tol and ub == 2 * target
};

struct CertReport {
  std::vector<CertResult> results;
  bool constants_consistent = false;  // (A, B) = (2, 0) across all samples
  bool all_pass = false;
};

// Per-sample errors are recorded and the run continues; result order follows
// sample order even when workers > 1. Timing goes to stderr, never into the
// report.
CertReport run_certify(const std::vector<CertSample>& samples, int workers = 1);

// Exploratory spectral levels of the infinite-bar class for h = f_a(|p|) and
// its negation; flag = (rho_plus + rho_minus >= beta - 1e-9), logged only.
struct GammaProxy {
  double rho_plus = 0.0, rho_minus = 0.0, sum = 0.0, beta = 0.0;
  bool flag = false;
};
GammaProxy gamma_proxy(const std::vector<double>& a, double delta);

json report_to_json(const CertReport& report);
void write_report_csv(const CertReport& report, const std::string& path);
std::vector<CertSample> samples_from_json(const json& j);
json gamma_proxy_to_json(const GammaProxy& g);

}  // namespace qflat
