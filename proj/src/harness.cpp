#include "qflat/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qflat/barcode.hpp"
#include "qflat/bottleneck.hpp"
#include "qflat/profiles.hpp"
#include "qflat/spectral.hpp"
#include "qflat/stability.hpp"

namespace qflat {

FilteredComplex random_complex(std::mt19937_64& rng, int max_gens, double min_level_gap) {
  std::uniform_real_distribution<double> level_dist(0.0, 10.0);
  std::uniform_int_distribution<int> gen_count(1, max_gens);
  std::uniform_int_distribution<int> block_count(1, 2);
  std::bernoulli_distribution coin(0.4);

  int n = gen_count(rng);
  int blocks = block_count(rng);
  FilteredComplex cx;
  // Block b holds degrees (2b, 2b+1); arrows never compose across blocks.
  std::vector<std::vector<int>> sources(blocks), targets(blocks);
  for (int g = 0; g < n; ++g) {
    int b = std::uniform_int_distribution<int>(0, blocks - 1)(rng);
    int degree = 2 * b + (coin(rng) ? 0 : 1);
    cx.generators.push_back({"g" + std::to_string(g), degree, level_dist(rng)});
    (degree % 2 == 0 ? sources[b] : targets[b]).push_back(g);
  }
  for (int b = 0; b < blocks; ++b) {
    for (int s : sources[b]) {
      std::vector<std::string> diff;
      double max_target = -kInf;
      for (int t : targets[b]) {
        if (!coin(rng)) continue;
        diff.push_back(cx.generators[t].id);
        max_target = std::max(max_target, cx.generators[t].level);
      }
      if (diff.empty()) continue;
      std::sort(diff.begin(), diff.end());
      cx.generators[s].level =
          std::max(cx.generators[s].level, max_target + min_level_gap);
      cx.differential[cx.generators[s].id] = std::move(diff);
    }
  }
  require_valid(cx);
  return cx;
}

namespace {

void record_failure(SuiteResult& r, const std::string& detail) {
  ++r.failures;
  if (r.notes.size() < 20) r.notes.push_back(detail);
}

std::vector<double> random_coeffs(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::bernoulli_distribution zero(0.25);
  std::vector<double> a(len(rng));
  for (double& x : a) x = zero(rng) ? 0.0 : val(rng);
  return a;
}

std::string coeffs_str(const std::vector<double>& a) {
  json j = a;
  return j.dump();
}

}  // namespace

SuiteResult run_oracle_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"oracle"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++r.trials;
    FilteredComplex cx = random_complex(rng, 12);
    double fast = boundary_depth(cx);
    double brute = boundary_depth_bruteforce(cx);
    double bar = longest_finite_bar(barcode(cx));
    if (std::abs(fast - brute) > 1e-9 || std::abs(fast - bar) > 1e-9)
      record_failure(r, "trial " + std::to_string(t) + ": " + complex_to_json(cx).dump());
  }
  return r;
}

SuiteResult run_beta_stability_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"stability"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++r.trials;
    FilteredComplex a = random_complex(rng, 10);
    FilteredComplex b = random_complex(rng, 10);
    StabilityVerdict v = beta_stability_check(a, b);
    if (!v.pass)
      record_failure(r, "trial " + std::to_string(t) + ": A=" + complex_to_json(a).dump() +
                            " B=" + complex_to_json(b).dump());
  }
  return r;
}

SuiteResult run_perturbation_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"perturbation"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  for (int t = 0; t < trials; ++t) {
    ++r.trials;
    // Level gap 0.5 with jitter <= 0.2 keeps the perturbed complex valid.
    FilteredComplex a = random_complex(rng, 10, 0.5);
    FilteredComplex b = a;
    std::map<std::string, std::string> bij;
    for (auto& g : b.generators) {
      g.level += jitter(rng);
      bij[g.id] = g.id;
    }
    PerturbationVerdict v = level_perturbation_bound(a, b, bij);
    if (!v.pass)
      record_failure(r, "trial " + std::to_string(t) + ": A=" + complex_to_json(a).dump() +
                            " B=" + complex_to_json(b).dump());
  }
  return r;
}

SuiteResult run_product_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"product"};
  std::mt19937_64 rng(seed);
  // A top-degree generator is always a cocycle; retry until both factors
  // carry a nonvanishing top-degree singleton class.
  auto pick_class = [](const FilteredComplex& cx) -> CocycleClass {
    int top = 0;
    for (const auto& g : cx.generators) top = std::max(top, g.degree);
    for (const auto& g : cx.generators) {
      if (g.degree != top) continue;
      try {
        spectral_level(cx, {{g.id}});
        return {{g.id}};
      } catch (const SpectralError&) {
      }
    }
    return {};
  };
  for (int t = 0; t < trials; ++t) {
    ++r.trials;
    CocycleClass beta, alpha;
    FilteredComplex c1, c2;
    for (int attempt = 0; attempt < 100; ++attempt) {
      c1 = random_complex(rng, 4);
      c2 = random_complex(rng, 4);
      beta = pick_class(c1);
      alpha = pick_class(c2);
      if (!beta.support.empty() && !alpha.support.empty()) break;
    }
    if (beta.support.empty() || alpha.support.empty()) {
      record_failure(r, "trial " + std::to_string(t) + ": no usable class after 100 attempts");
      continue;
    }
    try {
      SubadditivityVerdict v =
          product_subadditivity_check(tensor_product_data(c1, c2), beta, alpha);
      if (!v.pass)
        record_failure(r, "trial " + std::to_string(t) + ": C1=" + complex_to_json(c1).dump() +
                              " C2=" + complex_to_json(c2).dump());
    } catch (const std::exception& e) {
      record_failure(r, "trial " + std::to_string(t) + ": unexpected error: " + e.what());
    }
  }
  return r;
}

SuiteResult run_minmax_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"minmax"};
  std::mt19937_64 rng(seed);
  BumpProfile profile = build_bump(0.05);
  for (int t = 0; t < trials; ++t) {
    ++r.trials;
    std::vector<double> a = random_coeffs(rng);
    ProfileSum sum{profile, a};
    ProfileExtrema sym = minmax_min_osc(sum);
    ProfileExtrema scan = minmax_min_osc_scan(sum);
    double min_a = 0.0;
    for (double x : a) min_a = std::min(min_a, x);
    bool ok = std::abs(sym.minmax - scan.minmax) <= 1e-9 &&
              std::abs(sym.min - scan.min) <= 1e-9 && std::abs(sym.osc - scan.osc) <= 1e-9 &&
              std::abs((sym.minmax - sym.min) - std::max(0.0, -min_a)) <= 1e-9;
    if (!ok) record_failure(r, "trial " + std::to_string(t) + ": a=" + coeffs_str(a));
  }
  return r;
}

SuiteResult run_bottleneck_metric_suite(std::uint64_t seed, int trials) {
  SuiteResult r{"bottleneck"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  for (int t = 0; t < trials; ++t) {
    ++r.trials;
    // Jittered variants of one complex keep infinite-bar counts equal, so
    // the three distances are finite and the triangle inequality has teeth.
    FilteredComplex base = random_complex(rng, 8, 0.5);
    FilteredComplex vb = base, vc = base;
    for (auto& g : vb.generators) g.level += jitter(rng);
    for (auto& g : vc.generators) g.level += jitter(rng);
    Barcode A = barcode(base), B = barcode(vb), C = barcode(vc);
    double ab = bottleneck_distance(A, B);
    double ba = bottleneck_distance(B, A);
    double aa = bottleneck_distance(A, A);
    double ac = bottleneck_distance(A, C);
    double bc = bottleneck_distance(B, C);
    bool ok = aa <= 1e-12 && (ab == ba || std::abs(ab - ba) <= 1e-9) && ab < kInf &&
              ac <= ab + bc + 1e-9;
    if (!ok) record_failure(r, "trial " + std::to_string(t) + ": metric axiom violated");
  }
  return r;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials) {
  if (name == "oracle") return run_oracle_suite(seed, trials);
  if (name == "stability") return run_beta_stability_suite(seed, trials);
  if (name == "perturbation") return run_perturbation_suite(seed, trials);
  if (name == "product") return run_product_suite(seed, trials);
  if (name == "minmax") return run_minmax_suite(seed, trials);
  if (name == "bottleneck") return run_bottleneck_metric_suite(seed, trials);
  throw std::invalid_argument("run_suite: unknown suite " + name);
}

json suite_to_json(const SuiteResult& r) {
  return {{"suite", r.suite},
          {"trials", r.trials},
          {"failures", r.failures},
          {"pass", r.pass()},
          {"notes", r.notes}};
}

}  // namespace qflat
