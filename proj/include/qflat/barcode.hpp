#pragma once

#include <limits>
#include <string>
#include <vector>

#include "qflat/filtered_complex.hpp"

namespace qflat {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Bar {
  int degree = 0;
  double low = 0.0;
  double high = kInf;  // kInf marks an infinite bar
  std::string creator_id;
  std::string destroyer_id;  // empty for infinite bars

  bool infinite() const { return high == kInf; }
  double length() const { return high - low; }
};

struct Barcode {
  std::vector<Bar> bars;
};

// Persistence pairing by column reduction over Z2, generators ordered
// ascending by (level, id). Throws std::invalid_argument on an invalid complex.
Barcode barcode(const FilteredComplex& cx);

double longest_finite_bar(const Barcode& bc);

// Longest finite bar of barcode(cx); 0 when the differential has zero image.
double boundary_depth(const FilteredComplex& cx);

// Literal sup-inf over all Z2 chains; requires at most 20 generators.
double boundary_depth_bruteforce(const FilteredComplex& cx);

json barcode_to_json(const Barcode& bc);
Barcode barcode_from_json(const json& j);

}  // namespace qflat
