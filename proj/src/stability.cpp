#include "qflat/stability.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "qflat/barcode.hpp"
#include "qflat/bottleneck.hpp"

namespace qflat {

StabilityVerdict beta_stability_check(const FilteredComplex& a, const FilteredComplex& b) {
  StabilityVerdict v;
  v.beta_a = boundary_depth(a);
  v.beta_b = boundary_depth(b);
  v.bottleneck = bottleneck_distance(barcode(a), barcode(b));
  v.pass = std::abs(v.beta_a - v.beta_b) <= 2.0 * v.bottleneck + kEqTol;
  return v;
}

PerturbationVerdict level_perturbation_bound(const FilteredComplex& a, const FilteredComplex& b,
                                             const std::map<std::string, std::string>& bijection) {
  std::unordered_map<std::string, const Generator*> ga, gb;
  for (const auto& g : a.generators) ga[g.id] = &g;
  for (const auto& g : b.generators) gb[g.id] = &g;
  if (bijection.size() != ga.size() || ga.size() != gb.size())
    throw std::invalid_argument("level_perturbation_bound: bijection size mismatch");

  std::set<std::string> hit;
  double eps = 0.0;
  for (const auto& [ia, ib] : bijection) {
    auto pa = ga.find(ia);
    auto pb = gb.find(ib);
    if (pa == ga.end() || pb == gb.end() || !hit.insert(ib).second)
      throw std::invalid_argument("level_perturbation_bound: not a bijection of generators");
    if (pa->second->degree != pb->second->degree)
      throw std::invalid_argument("level_perturbation_bound: degree mismatch at " + ia);
    eps = std::max(eps, std::abs(pa->second->level - pb->second->level));
  }
  for (const auto& g : a.generators) {
    std::set<std::string> da, db;
    auto ita = a.differential.find(g.id);
    if (ita != a.differential.end()) da.insert(ita->second.begin(), ita->second.end());
    auto itb = b.differential.find(bijection.at(g.id));
    if (itb != b.differential.end()) db.insert(itb->second.begin(), itb->second.end());
    std::set<std::string> mapped;
    for (const auto& t : da) mapped.insert(bijection.at(t));
    if (mapped != db)
      throw std::invalid_argument("level_perturbation_bound: differential mismatch at " + g.id);
  }

  PerturbationVerdict v;
  v.eps = eps;
  v.beta_a = boundary_depth(a);
  v.beta_b = boundary_depth(b);
  v.pass = std::abs(v.beta_a - v.beta_b) <= 2.0 * eps + kEqTol;
  return v;
}

namespace {

// mu extended bilinearly to Z2 cochains given by generator-id supports.
std::set<std::string> apply_mu(const ProductData& data, const std::vector<std::string>& xs,
                               const std::vector<std::string>& ys) {
  std::set<std::string> acc;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      auto it = data.table.find({x, y});
      if (it == data.table.end()) continue;
      for (const auto& z : it->second) {
        auto [pos, inserted] = acc.insert(z);
        if (!inserted) acc.erase(pos);
      }
    }
  }
  return acc;
}

std::set<std::string> apply_d(const FilteredComplex& cx, const std::set<std::string>& chain) {
  std::set<std::string> acc;
  for (const auto& g : chain) {
    auto it = cx.differential.find(g);
    if (it == cx.differential.end()) continue;
    for (const auto& t : it->second) {
      auto [pos, inserted] = acc.insert(t);
      if (!inserted) acc.erase(pos);
    }
  }
  return acc;
}

}  // namespace

ProductDefect validate_product(const ProductData& data) {
  for (const auto& cx : {&data.c1, &data.c2, &data.c3}) {
    ValidationResult v = validate(*cx);
    if (!v.ok()) return {false, std::string("component complex: ") + defect_name(*v.defect)};
  }
  if (data.epsilon < 0.0) return {false, "negative epsilon"};

  std::unordered_map<std::string, double> l1, l2, l3;
  for (const auto& g : data.c1.generators) l1[g.id] = g.level;
  for (const auto& g : data.c2.generators) l2[g.id] = g.level;
  for (const auto& g : data.c3.generators) l3[g.id] = g.level;

  for (const auto& [key, support] : data.table) {
    auto i1 = l1.find(key.first);
    auto i2 = l2.find(key.second);
    if (i1 == l1.end() || i2 == l2.end())
      return {false, "table key (" + key.first + ", " + key.second + ") not in C1 x C2"};
    for (const auto& z : support) {
      auto i3 = l3.find(z);
      if (i3 == l3.end()) return {false, "table value " + z + " not in C3"};
      if (i3->second > i1->second + i2->second + data.epsilon + kLevelTol)
        return {false, "level defect violated at (" + key.first + ", " + key.second + ")"};
    }
  }

  // Leibniz over all generator pairs.
  for (const auto& gx : data.c1.generators) {
    for (const auto& gy : data.c2.generators) {
      std::set<std::string> lhs = apply_d(data.c3, apply_mu(data, {gx.id}, {gy.id}));
      std::vector<std::string> dx, dy;
      if (auto it = data.c1.differential.find(gx.id); it != data.c1.differential.end())
        dx = it->second;
      if (auto it = data.c2.differential.find(gy.id); it != data.c2.differential.end())
        dy = it->second;
      std::set<std::string> rhs = apply_mu(data, dx, {gy.id});
      for (const auto& z : apply_mu(data, {gx.id}, dy)) {
        auto [pos, inserted] = rhs.insert(z);
        if (!inserted) rhs.erase(pos);
      }
      if (lhs != rhs)
        return {false, "Leibniz rule violated at (" + gx.id + ", " + gy.id + ")"};
    }
  }
  return {};
}

SubadditivityVerdict product_subadditivity_check(const ProductData& data,
                                                 const CocycleClass& beta_in_c1,
                                                 const CocycleClass& alpha_in_c2) {
  ProductDefect d = validate_product(data);
  if (!d.ok) throw std::invalid_argument("product data rejected: " + d.detail);

  SubadditivityVerdict v;
  v.rho_beta = spectral_level(data.c1, beta_in_c1);
  v.rho_alpha = spectral_level(data.c2, alpha_in_c2);
  std::set<std::string> prod = apply_mu(data, beta_in_c1.support, alpha_in_c2.support);
  CocycleClass prod_class{std::vector<std::string>(prod.begin(), prod.end())};
  v.rho_product = spectral_level(data.c3, prod_class);
  v.pass = v.rho_product <= v.rho_beta + v.rho_alpha + data.epsilon + kEqTol;
  return v;
}

ProductData tensor_product_data(const FilteredComplex& c1, const FilteredComplex& c2) {
  ProductData data;
  data.c1 = c1;
  data.c2 = c2;
  data.epsilon = 0.0;
  auto tensor_id = [](const std::string& x, const std::string& y) { return x + "*" + y; };

  std::unordered_map<std::string, const Generator*> g2;
  for (const auto& g : c2.generators) g2[g.id] = &g;

  for (const auto& gx : c1.generators) {
    for (const auto& gy : c2.generators) {
      data.c3.generators.push_back(
          {tensor_id(gx.id, gy.id), gx.degree + gy.degree, gx.level + gy.level});
      std::vector<std::string> diff;
      if (auto it = c1.differential.find(gx.id); it != c1.differential.end())
        for (const auto& t : it->second) diff.push_back(tensor_id(t, gy.id));
      if (auto it = c2.differential.find(gy.id); it != c2.differential.end())
        for (const auto& t : it->second) diff.push_back(tensor_id(gx.id, t));
      if (!diff.empty()) data.c3.differential[tensor_id(gx.id, gy.id)] = std::move(diff);
      data.table[{gx.id, gy.id}] = {tensor_id(gx.id, gy.id)};
    }
  }
  return data;
}

}  // namespace qflat
