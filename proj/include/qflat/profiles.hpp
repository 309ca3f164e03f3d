#pragma once

#include <vector>

#include "qflat/filtered_complex.hpp"
#include "qflat/poly.hpp"

namespace qflat {

struct Piece {
  double lo = 0.0, hi = 0.0;
  Poly poly;
};

// Compactly supported C^2 bump on [0,1]: support exactly [delta, 1-delta],
// unique interior extremum f(1/2) = 1, f'' negative exactly on (1/4, 3/4) and
// positive exactly on (delta, 1/4) and (3/4, 1-delta).
struct BumpProfile {
  double delta = 0.0;
  std::vector<Piece> pieces;  // covers [0,1], contiguous

  double eval(double s) const;
  double deriv(double s) const;
  double max_abs_deriv() const;  // attained at s = 1/4 by construction
};

// Throws std::invalid_argument unless 0 < delta < 1/4; throws
// std::runtime_error if the constructed profile fails its invariant checks.
BumpProfile build_bump(double delta);

// f_a(s) = sum_i a_i * f(2^{i+1} s - 1); bump supports pairwise disjoint.
struct ProfileSum {
  BumpProfile profile;
  std::vector<double> coeffs;

  double eval(double s) const;
  double deriv(double s) const;
  // Support of term i in s: [(1+delta)/2^{i+1}, (2-delta)/2^{i+1}],
  // peak at 3/2^{i+2}.
  double support_lo(std::size_t i) const;
  double support_hi(std::size_t i) const;
  double peak(std::size_t i) const;
};

struct ProfileExtrema {
  double minmax = 0.0;  // inf of f_a over its (non-strict) local maxima
  double min = 0.0;
  double osc = 0.0;
};

// Exact values from the coefficient structure: local-maximum values are
// {0} union {a_i > 0}; min = min(0, min_i a_i); osc = max - min.
ProfileExtrema minmax_min_osc(const ProfileSum& sum);

// Dense 1D scan with plateau-aware local-maximum detection; the independent
// oracle for minmax_min_osc. Grid refined with the exact piece breakpoints.
ProfileExtrema minmax_min_osc_scan(const ProfileSum& sum, int grid_points = 20001);

struct HoferBound {
  double bound = 0.0;  // 2 * ||a - b||_inf
  double osc = 0.0;    // osc(f_{a-b})
};

// Hofer-type upper bound for the pair; asserts osc <= bound.
HoferBound hofer_upper_bound(const std::vector<double>& a, const std::vector<double>& b,
                             double delta);

std::vector<double> coeff_difference(std::vector<double> a, std::vector<double> b);
double sup_norm(const std::vector<double>& a);

json profile_to_json(const BumpProfile& p);

}  // namespace qflat
