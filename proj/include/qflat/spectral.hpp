#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qflat/filtered_complex.hpp"

namespace qflat {

// Z2 cochain given by its support; all ids must share one degree.
struct CocycleClass {
  std::vector<std::string> support;
};

struct SpectralError : std::runtime_error {
  enum Kind { not_a_cocycle, class_vanishes, bad_support };
  Kind kind;
  SpectralError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Min over coboundary-coset representatives of the maximal generator level.
// Throws SpectralError when the support is not a nonzero cocycle, or when the
// class is a coboundary ("class vanishes").
double spectral_level(const FilteredComplex& cx, const CocycleClass& cls);

}  // namespace qflat
