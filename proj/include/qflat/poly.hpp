#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace qflat {

// Dense univariate polynomial in the monomial basis: c[0] + c[1]*s + c[2]*s^2 + ...
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}

  double eval(double s) const {
    double r = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) r = r * s + c[k];
    return r;
  }

  int degree() const {
    for (std::size_t k = c.size(); k-- > 0;)
      if (c[k] != 0.0) return static_cast<int>(k);
    return -1;
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly{};
    std::vector<double> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
    return Poly{std::move(d)};
  }

  // Antiderivative with value c0 at s = 0.
  Poly antiderivative(double c0 = 0.0) const {
    std::vector<double> a(c.size() + 1);
    a[0] = c0;
    for (std::size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / static_cast<double>(k + 1);
    return Poly{std::move(a)};
  }

  bool is_zero() const { return degree() < 0; }
  bool is_constant() const { return degree() <= 0; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(double s, const Poly& a);

// p(alpha*s + beta) as a polynomial in s.
Poly compose_affine(const Poly& p, double alpha, double beta);

// All real roots of p in [lo, hi], ascending, deduplicated.
// Derivative-recursion bracketing; intended for the low-degree pieces used here.
std::vector<double> real_roots(const Poly& p, double lo, double hi);

}  // namespace qflat
