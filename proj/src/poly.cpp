#include "qflat/poly.hpp"

#include <algorithm>

namespace qflat {

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
  return Poly{std::move(r)};
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
  return Poly{std::move(r)};
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return Poly{};
  std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly{std::move(r)};
}

Poly operator*(double s, const Poly& a) {
  Poly r = a;
  for (double& x : r.c) x *= s;
  return r;
}

Poly compose_affine(const Poly& p, double alpha, double beta) {
  // Horner in the affine argument.
  Poly r;
  Poly arg{{beta, alpha}};
  for (std::size_t k = p.c.size(); k-- > 0;) {
    r = r * arg;
    if (r.c.empty()) r.c.push_back(0.0);
    r.c[0] += p.c[k];
  }
  return r;
}

namespace {

double bisect_root(const Poly& p, double lo, double hi) {
  double flo = p.eval(lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = p.eval(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_roots(const Poly& p, double lo, double hi) {
  int deg = p.degree();
  std::vector<double> roots;
  if (deg <= 0 || lo >= hi) return roots;
  if (deg == 1) {
    double r = -p.c[0] / p.c[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  // Critical points of p partition [lo, hi] into monotone intervals.
  std::vector<double> knots = real_roots(p.derivative(), lo, hi);
  knots.insert(knots.begin(), lo);
  knots.push_back(hi);
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    double a = knots[k], b = knots[k + 1];
    if (b <= a) continue;
    double fa = p.eval(a), fb = p.eval(b);
    if (fa == 0.0) roots.push_back(a);
    if ((fa < 0) != (fb < 0)) roots.push_back(bisect_root(p, a, b));
  }
  double fhi = p.eval(hi);
  if (fhi == 0.0) roots.push_back(hi);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              roots.end());
  return roots;
}

}  // namespace qflat
