#include "qflat/barcode.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "indexed.hpp"

namespace qflat {

Barcode barcode(const FilteredComplex& cx) {
  require_valid(cx);
  detail::IndexedComplex ic(cx);
  const int n = static_cast<int>(ic.gens.size());

  std::vector<int> pivot_owner(n, -1);  // pivot row -> column that owns it
  std::vector<bool> is_destroyer(n, false);
  Barcode bc;

  for (int j = 0; j < n; ++j) {
    std::vector<int> col = ic.columns[j];
    while (!col.empty()) {
      int piv = col.back();
      int owner = pivot_owner[piv];
      if (owner < 0) break;
      detail::xor_into(col, ic.columns[owner]);
    }
    ic.columns[j] = col;
    if (!col.empty()) {
      int piv = col.back();
      pivot_owner[piv] = j;
      is_destroyer[j] = true;
      Bar bar;
      bar.degree = ic.gens[piv]->degree;
      bar.low = ic.gens[piv]->level;
      bar.high = ic.gens[j]->level;
      bar.creator_id = ic.gens[piv]->id;
      bar.destroyer_id = ic.gens[j]->id;
      bc.bars.push_back(std::move(bar));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (pivot_owner[i] < 0 && !is_destroyer[i]) {
      Bar bar;
      bar.degree = ic.gens[i]->degree;
      bar.low = ic.gens[i]->level;
      bar.high = kInf;
      bar.creator_id = ic.gens[i]->id;
      bc.bars.push_back(std::move(bar));
    }
  }
  std::sort(bc.bars.begin(), bc.bars.end(), [](const Bar& a, const Bar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.low != b.low) return a.low < b.low;
    if (a.high != b.high) return a.high < b.high;
    return a.creator_id < b.creator_id;
  });
  return bc;
}

double longest_finite_bar(const Barcode& bc) {
  double best = 0.0;
  for (const auto& bar : bc.bars)
    if (!bar.infinite()) best = std::max(best, bar.length());
  return best;
}

double boundary_depth(const FilteredComplex& cx) { return longest_finite_bar(barcode(cx)); }

double boundary_depth_bruteforce(const FilteredComplex& cx) {
  require_valid(cx);
  detail::IndexedComplex ic(cx);
  const int n = static_cast<int>(ic.gens.size());
  if (n > 20) throw std::invalid_argument("boundary_depth_bruteforce: more than 20 generators");
  if (n == 0) return 0.0;

  // Bitmask form of the differential.
  std::vector<uint32_t> dmask(n, 0);
  for (int j = 0; j < n; ++j)
    for (int r : ic.columns[j]) dmask[j] |= (1u << r);

  const std::size_t total = std::size_t{1} << n;
  // d(chain) and max level of support, filled by dynamic programming on subsets.
  std::vector<uint32_t> img(total, 0);
  std::vector<double> lvl(total, -kInf);
  for (std::size_t s = 1; s < total; ++s) {
    int low = __builtin_ctzll(s);
    std::size_t rest = s & (s - 1);
    img[s] = img[rest] ^ dmask[low];
    lvl[s] = std::max(lvl[rest], ic.gens[low]->level);
  }

  // For each nonzero image x: the infimum of levels of its preimages.
  std::unordered_map<uint32_t, double> min_preimage_level;
  min_preimage_level.reserve(total);
  for (std::size_t s = 1; s < total; ++s) {
    if (img[s] == 0) continue;
    auto [it, inserted] = min_preimage_level.emplace(img[s], lvl[s]);
    if (!inserted && lvl[s] < it->second) it->second = lvl[s];
  }

  double beta = 0.0;
  for (const auto& [x, y_level] : min_preimage_level) {
    // level of the image chain x
    double x_level = -kInf;
    uint32_t m = x;
    while (m) {
      int r = __builtin_ctz(m);
      m &= m - 1;
      x_level = std::max(x_level, ic.gens[r]->level);
    }
    beta = std::max(beta, y_level - x_level);
  }
  return beta;
}

json barcode_to_json(const Barcode& bc) {
  json j;
  j["bars"] = json::array();
  for (const auto& bar : bc.bars) {
    json e{{"degree", bar.degree}, {"low", bar.low}};
    if (bar.infinite()) e["high"] = "inf";
    else e["high"] = bar.high;
    j["bars"].push_back(std::move(e));
  }
  return j;
}

Barcode barcode_from_json(const json& j) {
  Barcode bc;
  for (const auto& e : j.at("bars")) {
    Bar bar;
    bar.degree = e.at("degree").get<int>();
    bar.low = e.at("low").get<double>();
    const auto& h = e.at("high");
    bar.high = h.is_string() ? kInf : h.get<double>();
    bc.bars.push_back(std::move(bar));
  }
  return bc;
}

}  // namespace qflat
