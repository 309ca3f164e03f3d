#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qflat/filtered_complex.hpp"

namespace qflat {

struct SuiteResult {
  std::string suite;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> notes;  // one entry per failure, inputs included

  bool pass() const { return failures == 0; }
};

// Random valid complex: generators split into (d, d+1) blocks with arrows
// only inside a block, so d^2 = 0 by construction. Every differential target
// sits at least min_level_gap below its source.
FilteredComplex random_complex(std::mt19937_64& rng, int max_gens, double min_level_gap = 0.0);

// boundary_depth == brute force == longest finite bar, within 1e-9.
SuiteResult run_oracle_suite(std::uint64_t seed, int trials);
// |beta(A) - beta(B)| <= 2 * bottleneck on independent random pairs.
SuiteResult run_beta_stability_suite(std::uint64_t seed, int trials);
// |beta(A) - beta(A jittered)| <= 2 * eps under level jitter.
SuiteResult run_perturbation_suite(std::uint64_t seed, int trials);
// Tensor-product ProductData instances satisfy the subadditivity bound.
SuiteResult run_product_suite(std::uint64_t seed, int trials);
// Symbolic minmax/min/osc agree with the dense scan; identity
// minmax - min = max(0, -min_i a_i).
SuiteResult run_minmax_suite(std::uint64_t seed, int trials);
// Bottleneck distance sanity: d(A,A) = 0, symmetry, triangle inequality.
SuiteResult run_bottleneck_metric_suite(std::uint64_t seed, int trials);

// Dispatch by name: oracle | stability | perturbation | product | minmax |
// bottleneck. Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials);

json suite_to_json(const SuiteResult& r);

}  // namespace qflat
