#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qflat {

using json = nlohmann::ordered_json;

// Tolerance for the "differential does not increase the level" check.
inline constexpr double kLevelTol = 1e-12;
// Tolerance for numeric equality assertions throughout the library.
inline constexpr double kEqTol = 1e-9;

struct Generator {
  std::string id;
  int degree = 0;
  double level = 0.0;
};

// Z2 cochain complex with a real filtration level per generator.
// The differential raises degree by 1 and does not increase the level.
struct FilteredComplex {
  std::vector<Generator> generators;
  // id -> support of d(id); Z2 coefficients are implicit.
  std::map<std::string, std::vector<std::string>> differential;
};

enum class ComplexDefect {
  duplicate_id,
  dangling_id,
  d_squared_nonzero,
  degree_mismatch,
  level_increase,
};

const char* defect_name(ComplexDefect d);

struct ValidationResult {
  std::optional<ComplexDefect> defect;
  std::string detail;  // offending ids, when applicable
  bool ok() const { return !defect.has_value(); }
};

ValidationResult validate(const FilteredComplex& cx);

// Throws std::invalid_argument when the complex does not validate.
void require_valid(const FilteredComplex& cx);

FilteredComplex shift_levels(const FilteredComplex& cx, double c);

json complex_to_json(const FilteredComplex& cx);
FilteredComplex complex_from_json(const json& j);

}  // namespace qflat
