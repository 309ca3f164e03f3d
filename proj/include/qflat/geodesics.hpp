#pragma once

#include <string>
#include <vector>

#include "qflat/filtered_complex.hpp"

namespace qflat {

// Round unit sphere (endpoints at sphere distance `dist`) or flat torus
// R^n / (basis Z^n) with displacement `offset` = x1 - x0 in the fundamental
// chart. Geodesics are enumerated up to length `cutoff`.
struct ModelManifold {
  enum class Kind { sphere, torus };
  Kind kind = Kind::sphere;
  int dim = 2;
  double dist = 0.0;                       // sphere only; must avoid pi*Z
  std::vector<std::vector<double>> basis;  // torus lattice basis, column vectors
  std::vector<double> offset;              // torus only
  double cutoff = 0.0;
};

struct GeodesicRecord {
  double length = 0.0;
  // Torus: the lattice class. Sphere: single direction/wrap integer, {m} for
  // the forward arc d + 2*pi*m and {-(m+1)} for the backward arc
  // 2*pi - d + 2*pi*m (homotopically all trivial).
  std::vector<long long> class_label;
  int morse_index = 0;
};

// All geodesics of length <= cutoff, sorted by (length, class_label).
// Sphere indices follow (n-1) * floor(length / pi); flat tori have index 0
// and exactly one geodesic per class. Throws std::invalid_argument for
// conjugate endpoints (sphere dist in pi*Z within 1e-9), degenerate bases,
// or nonpositive cutoff.
std::vector<GeodesicRecord> enumerate_geodesics(const ModelManifold& m);

struct AssumptionEntry {
  std::vector<long long> class_label;
  int k = 0;
  // (i)   index k nonempty and index k+1 empty;
  // (ii)  indices k and k+2 each finite;
  // (iii) indices k-1 and k+1 empty;
  // (iv)  dim != 2 or k != 0.
  bool cond_i = false, cond_ii = false, cond_iii = false, cond_iv = false;
  // How each emptiness/finiteness claim is closed: "analytic" when the index
  // formula decides it outright, "cutoff" when certified only below cutoff.
  std::string closure_i, closure_ii, closure_iii;
  std::vector<std::string> notes;  // logged observations, incl. discrepancies
  json witnesses;                  // index -> lengths found below cutoff
};

// Flags computed from the record list alone. For spheres the filter is the
// whole list (one homotopy class); for tori only the records whose
// class_label matches.
AssumptionEntry check_assumption(const ModelManifold& m,
                                 const std::vector<GeodesicRecord>& records,
                                 const std::vector<long long>& class_label, int k);

json records_to_json(const std::vector<GeodesicRecord>& records);
json assumption_to_json(const AssumptionEntry& e);

}  // namespace qflat
