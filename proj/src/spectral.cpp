#include "qflat/spectral.hpp"

#include <algorithm>
#include <map>

#include "indexed.hpp"

namespace qflat {

double spectral_level(const FilteredComplex& cx, const CocycleClass& cls) {
  require_valid(cx);
  detail::IndexedComplex ic(cx);

  if (cls.support.empty())
    throw SpectralError(SpectralError::bad_support, "spectral_level: empty class");

  std::vector<int> z;
  int degree = 0;
  for (std::size_t k = 0; k < cls.support.size(); ++k) {
    auto it = ic.pos_of.find(cls.support[k]);
    if (it == ic.pos_of.end())
      throw SpectralError(SpectralError::bad_support,
                          "spectral_level: unknown id " + cls.support[k]);
    if (k == 0) degree = ic.gens[it->second]->degree;
    else if (ic.gens[it->second]->degree != degree)
      throw SpectralError(SpectralError::bad_support, "spectral_level: mixed degrees");
    z.push_back(it->second);
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());

  // Cocycle check: d(z) = 0 mod 2.
  std::vector<int> dz;
  for (int p : z) detail::xor_into(dz, ic.columns[p]);
  if (!dz.empty()) throw SpectralError(SpectralError::not_a_cocycle, "not a cocycle");

  // Echelon basis of the coboundary space in this degree, pivot = highest
  // (level, id) position. Eliminating the top term greedily is exact: the
  // reduced representative's leading position cannot be cancelled by any
  // combination of basis vectors.
  std::map<int, std::vector<int>> pivot_to_vec;  // pivot position -> vector
  for (std::size_t j = 0; j < ic.columns.size(); ++j) {
    if (ic.gens[j]->degree != degree - 1) continue;
    std::vector<int> v = ic.columns[j];
    while (!v.empty()) {
      auto it = pivot_to_vec.find(v.back());
      if (it == pivot_to_vec.end()) break;
      detail::xor_into(v, it->second);
    }
    if (!v.empty()) pivot_to_vec.emplace(v.back(), std::move(v));
  }

  while (!z.empty()) {
    auto it = pivot_to_vec.find(z.back());
    if (it == pivot_to_vec.end()) break;
    detail::xor_into(z, it->second);
  }
  if (z.empty()) throw SpectralError(SpectralError::class_vanishes, "class vanishes");
  return ic.gens[z.back()]->level;
}

}  // namespace qflat
