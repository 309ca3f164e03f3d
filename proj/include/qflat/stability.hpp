#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qflat/filtered_complex.hpp"
#include "qflat/spectral.hpp"

namespace qflat {

struct StabilityVerdict {
  bool pass = false;
  double beta_a = 0.0;
  double beta_b = 0.0;
  double bottleneck = 0.0;
};

// |beta(A) - beta(B)| <= 2 * bottleneck(barcode(A), barcode(B)).
StabilityVerdict beta_stability_check(const FilteredComplex& a, const FilteredComplex& b);

struct PerturbationVerdict {
  bool pass = false;
  double eps = 0.0;  // max matched-level discrepancy
  double beta_a = 0.0;
  double beta_b = 0.0;
};

// Lemma-style bound: matched levels within eps pointwise and corresponding
// differentials imply |beta(A) - beta(B)| <= 2*eps. Throws
// std::invalid_argument when the bijection is not structure-preserving.
PerturbationVerdict level_perturbation_bound(const FilteredComplex& a, const FilteredComplex& b,
                                             const std::map<std::string, std::string>& bijection);

// Filtered bilinear pairing mu: C1 x C2 -> C3 with level defect eps.
struct ProductData {
  FilteredComplex c1, c2, c3;
  // (generator of c1, generator of c2) -> support of mu(x, y) in c3.
  // Missing entries mean mu(x, y) = 0.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> table;
  double epsilon = 0.0;
};

struct ProductDefect {
  bool ok = true;
  std::string detail;
};

// Level bound level(mu(x,y)) <= level(x) + level(y) + eps on every table
// entry, and the Leibniz rule d3 mu(x,y) = mu(d1 x, y) + mu(x, d2 y).
ProductDefect validate_product(const ProductData& data);

struct SubadditivityVerdict {
  bool pass = false;
  double rho_product = 0.0;
  double rho_beta = 0.0;   // spectral level of the C1 class
  double rho_alpha = 0.0;  // spectral level of the C2 class
};

// rho_C3(mu(beta, alpha)) <= rho_C1(beta) + rho_C2(alpha) + eps.
// Throws std::invalid_argument when the ProductData invariants fail (checked
// before any spectral evaluation) and SpectralError when mu(beta, alpha) is
// not a nonzero cocycle.
SubadditivityVerdict product_subadditivity_check(const ProductData& data,
                                                 const CocycleClass& beta_in_c1,
                                                 const CocycleClass& alpha_in_c2);

// Canonical tensor-product ProductData: C3 = C1 (x) C2 with
// level(x(x)y) = level(x) + level(y) and the Leibniz differential; eps = 0.
ProductData tensor_product_data(const FilteredComplex& c1, const FilteredComplex& c2);

}  // namespace qflat
