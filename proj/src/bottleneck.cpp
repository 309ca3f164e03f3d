#include "qflat/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qflat {

namespace {

struct Interval {
  double low, high;
  double half() const { return 0.5 * (high - low); }
};

double pair_cost(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.low - b.low), std::abs(a.high - b.high));
}

// Feasibility of matching at threshold t via the augmented bipartite graph:
// left = A-bars + |B| diagonal slots, right = B-bars + |A| diagonal slots.
// Kuhn's augmenting-path matching; sizes here are small.
struct Feasibility {
  const std::vector<Interval>& A;
  const std::vector<Interval>& B;
  double t;
  int nl, nr;
  std::vector<int> match_r;   // right -> left
  std::vector<char> visited;

  Feasibility(const std::vector<Interval>& a, const std::vector<Interval>& b, double tt)
      : A(a), B(b), t(tt), nl(static_cast<int>(a.size() + b.size())),
        nr(static_cast<int>(a.size() + b.size())) {}

  bool edge(int l, int r) const {
    const double eps = 1e-12;
    bool l_bar = l < static_cast<int>(A.size());
    bool r_bar = r < static_cast<int>(B.size());
    if (l_bar && r_bar) return pair_cost(A[l], B[r]) <= t + eps;
    if (l_bar) return A[l].half() <= t + eps;   // A-bar to diagonal slot
    if (r_bar) return B[r].half() <= t + eps;   // diagonal slot to B-bar
    return true;                                // diagonal to diagonal
  }

  bool try_augment(int l) {
    for (int r = 0; r < nr; ++r) {
      if (visited[r] || !edge(l, r)) continue;
      visited[r] = 1;
      if (match_r[r] < 0 || try_augment(match_r[r])) {
        match_r[r] = l;
        return true;
      }
    }
    return false;
  }

  bool feasible() {
    match_r.assign(nr, -1);
    for (int l = 0; l < nl; ++l) {
      visited.assign(nr, 0);
      if (!try_augment(l)) return false;
    }
    return true;
  }
};

double finite_bottleneck(const std::vector<Interval>& A, const std::vector<Interval>& B) {
  if (A.empty() && B.empty()) return 0.0;
  std::vector<double> candidates{0.0};
  for (const auto& a : A) candidates.push_back(a.half());
  for (const auto& b : B) candidates.push_back(b.half());
  for (const auto& a : A)
    for (const auto& b : B) candidates.push_back(pair_cost(a, b));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  // The largest candidate is always feasible (everything to the diagonal or
  // any bar; max over all costs is in the list).
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (Feasibility(A, B, candidates[mid]).feasible()) hi = mid;
    else lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace

double bottleneck_distance(const Barcode& a, const Barcode& b) {
  std::map<int, std::pair<std::vector<Interval>, std::vector<Interval>>> finite;
  std::map<int, std::pair<std::vector<double>, std::vector<double>>> infinite;
  for (const auto& bar : a.bars) {
    if (bar.infinite()) infinite[bar.degree].first.push_back(bar.low);
    else finite[bar.degree].first.push_back({bar.low, bar.high});
  }
  for (const auto& bar : b.bars) {
    if (bar.infinite()) infinite[bar.degree].second.push_back(bar.low);
    else finite[bar.degree].second.push_back({bar.low, bar.high});
  }

  double d = 0.0;
  for (auto& [deg, lists] : infinite) {
    auto& [la, lb] = lists;
    if (la.size() != lb.size()) return kInf;
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    // Sorted pairing minimizes the max birth discrepancy on a line.
    for (std::size_t i = 0; i < la.size(); ++i) d = std::max(d, std::abs(la[i] - lb[i]));
  }
  for (const auto& [deg, lists] : finite)
    d = std::max(d, finite_bottleneck(lists.first, lists.second));
  return d;
}

}  // namespace qflat
