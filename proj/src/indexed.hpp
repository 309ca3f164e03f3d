#pragma once

// Internal index form of a FilteredComplex: generators sorted ascending by
// (level, id), differential as sorted index columns. Shared by the reduction
// and spectral-level code; not part of the public surface.

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "qflat/filtered_complex.hpp"

namespace qflat::detail {

struct IndexedComplex {
  // position -> original generator
  std::vector<const Generator*> gens;
  // position -> column of d (positions, sorted ascending)
  std::vector<std::vector<int>> columns;
  std::unordered_map<std::string, int> pos_of;

  explicit IndexedComplex(const FilteredComplex& cx) {
    gens.reserve(cx.generators.size());
    for (const auto& g : cx.generators) gens.push_back(&g);
    std::sort(gens.begin(), gens.end(), [](const Generator* a, const Generator* b) {
      if (a->level != b->level) return a->level < b->level;
      return a->id < b->id;
    });
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) pos_of[gens[i]->id] = i;
    columns.assign(gens.size(), {});
    for (const auto& [src, targets] : cx.differential) {
      auto& col = columns[pos_of.at(src)];
      for (const auto& t : targets) col.push_back(pos_of.at(t));
      std::sort(col.begin(), col.end());
    }
  }
};

// Z2 column addition: a ^= b, both sorted ascending.
inline void xor_into(std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) out.push_back(a[i++]);
    else if (b[j] < a[i]) out.push_back(b[j++]);
    else { ++i; ++j; }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  a = std::move(out);
}

}  // namespace qflat::detail
