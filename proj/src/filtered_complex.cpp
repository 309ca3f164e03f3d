#include "qflat/filtered_complex.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qflat {

const char* defect_name(ComplexDefect d) {
  switch (d) {
    case ComplexDefect::duplicate_id: return "duplicate id";
    case ComplexDefect::dangling_id: return "dangling id";
    case ComplexDefect::d_squared_nonzero: return "d^2 != 0";
    case ComplexDefect::degree_mismatch: return "degree mismatch";
    case ComplexDefect::level_increase: return "level increase";
  }
  return "unknown";
}

ValidationResult validate(const FilteredComplex& cx) {
  std::unordered_map<std::string, const Generator*> by_id;
  for (const auto& g : cx.generators) {
    auto [it, inserted] = by_id.emplace(g.id, &g);
    if (!inserted) return {ComplexDefect::duplicate_id, g.id};
  }
  for (const auto& [src, targets] : cx.differential) {
    auto s = by_id.find(src);
    if (s == by_id.end()) return {ComplexDefect::dangling_id, src};
    std::unordered_set<std::string> seen;
    for (const auto& t : targets) {
      auto d = by_id.find(t);
      if (d == by_id.end()) return {ComplexDefect::dangling_id, src + " -> " + t};
      if (!seen.insert(t).second) return {ComplexDefect::duplicate_id, src + " -> " + t};
      if (d->second->degree != s->second->degree + 1)
        return {ComplexDefect::degree_mismatch, src + " -> " + t};
      if (d->second->level > s->second->level + kLevelTol)
        return {ComplexDefect::level_increase, src + " -> " + t};
    }
  }
  // d(d(g)) must vanish mod 2 for every generator.
  for (const auto& [src, targets] : cx.differential) {
    std::set<std::string> acc;
    for (const auto& t : targets) {
      auto it = cx.differential.find(t);
      if (it == cx.differential.end()) continue;
      for (const auto& u : it->second) {
        auto [pos, inserted] = acc.insert(u);
        if (!inserted) acc.erase(pos);
      }
    }
    if (!acc.empty()) return {ComplexDefect::d_squared_nonzero, src + " -> " + *acc.begin()};
  }
  return {};
}

void require_valid(const FilteredComplex& cx) {
  ValidationResult v = validate(cx);
  if (!v.ok())
    throw std::invalid_argument(std::string("invalid complex: ") + defect_name(*v.defect) +
                                " (" + v.detail + ")");
}

FilteredComplex shift_levels(const FilteredComplex& cx, double c) {
  FilteredComplex out = cx;
  for (auto& g : out.generators) g.level += c;
  return out;
}

json complex_to_json(const FilteredComplex& cx) {
  json j;
  j["generators"] = json::array();
  for (const auto& g : cx.generators)
    j["generators"].push_back({{"id", g.id}, {"degree", g.degree}, {"level", g.level}});
  j["differential"] = json::object();
  for (const auto& [src, targets] : cx.differential) {
    std::vector<std::string> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    j["differential"][src] = sorted;
  }
  return j;
}

FilteredComplex complex_from_json(const json& j) {
  FilteredComplex cx;
  if (!j.is_object() || !j.contains("generators"))
    throw std::invalid_argument("complex json: missing \"generators\"");
  for (const auto& g : j.at("generators")) {
    cx.generators.push_back(
        {g.at("id").get<std::string>(), g.at("degree").get<int>(), g.at("level").get<double>()});
  }
  if (j.contains("differential")) {
    for (const auto& [src, targets] : j.at("differential").items()) {
      cx.differential[src] = targets.get<std::vector<std::string>>();
    }
  }
  return cx;
}

}  // namespace qflat
