#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qflat/barcode.hpp"
#include "qflat/filtered_complex.hpp"

namespace qflat {

// Scalar samples on the annulus: q periodic on the circle (q_i = i/n_q),
// p in [-1, 1] (p_j = -1 + 2j/(n_p - 1)), row-major values[i*n_p + j].
struct GridField {
  int nq = 0, np = 0;
  std::vector<double> values;
  json metadata;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * np + j]; }
  double spacing() const;  // max of the two grid steps
};

// F(q, p) = -(f_a(2|p| - 1/2) + eps * cos(2*pi*q) * (1 - p^2)). The cosine
// term is a deterministic tie-breaking perturbation; the seed is recorded in
// the metadata only. Throws std::invalid_argument if the resolution is below
// 8x8 or eps < 0.
GridField annulus_field(const std::vector<double>& a, double delta, int nq, int np, double eps,
                        std::uint64_t seed);

// Sublevel persistence of the lower-star cubical filtration, Z2 coefficients,
// periodic in q and closed in p. Boundary-matrix reduction with clearing
// (squares before edges); zero-length bars are dropped. Throws
// std::runtime_error above 4e6 cells.
Barcode cubical_barcode(const GridField& field);

struct MorseBetaResult {
  double beta_hat = 0.0;  // longest finite bar of the cubical barcode
  double target = 0.0;    // -min(0, min_i a_i)
  double tol = 0.0;       // 2 * (field Lipschitz bound) * (grid spacing) + 3*eps
  bool pass = false;      // beta_hat >= target - tol
  Barcode bc;
};

MorseBetaResult morse_beta_estimate(const std::vector<double>& a, double delta, int nq, int np,
                                    double eps, std::uint64_t seed);

// One-line JSON header, '\n', then raw row-major doubles (native endianness).
void write_field(const GridField& field, const std::string& path);
GridField read_field(const std::string& path);

}  // namespace qflat
