#include "qflat/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qflat/barcode.hpp"

namespace qflat {

namespace {

double eval_pieces(const std::vector<Piece>& pieces, double s) {
  if (pieces.empty() || s < pieces.front().lo || s > pieces.back().hi) return 0.0;
  auto it = std::upper_bound(pieces.begin(), pieces.end(), s,
                             [](double x, const Piece& p) { return x < p.lo; });
  if (it != pieces.begin()) --it;
  return it->poly.eval(s);
}

double eval_pieces_deriv(const std::vector<Piece>& pieces, double s) {
  if (pieces.empty() || s < pieces.front().lo || s > pieces.back().hi) return 0.0;
  auto it = std::upper_bound(pieces.begin(), pieces.end(), s,
                             [](double x, const Piece& p) { return x < p.lo; });
  if (it != pieces.begin()) --it;
  return it->poly.derivative().eval(s);
}

// Antiderivative of a piecewise polynomial on contiguous pieces, with value
// `init` at the left end of the first piece.
std::vector<Piece> integrate_pieces(const std::vector<Piece>& pieces, double init) {
  std::vector<Piece> out;
  double carry = init;
  for (const auto& p : pieces) {
    Poly anti = p.poly.antiderivative(0.0);
    anti.c[0] = carry - anti.eval(p.lo);
    carry = anti.eval(p.hi);
    out.push_back({p.lo, p.hi, std::move(anti)});
  }
  return out;
}

}  // namespace

double BumpProfile::eval(double s) const { return eval_pieces(pieces, s); }
double BumpProfile::deriv(double s) const { return eval_pieces_deriv(pieces, s); }

double BumpProfile::max_abs_deriv() const { return deriv(0.25); }

BumpProfile build_bump(double delta) {
  if (!(delta > 0.0 && delta < 0.25))
    throw std::invalid_argument("build_bump: delta must lie in (0, 1/4)");

  // f'' = A*u + B*v on [delta, 1/2]:
  //   u(s) = (s - delta)(1/4 - s)   on [delta, 1/4]   (positive)
  //   v(s) = -(s - 1/4)(3/4 - s)    on [1/4, 1/2]     (negative)
  Poly u = Poly{{-delta, 1.0}} * Poly{{0.25, -1.0}};
  Poly v = -1.0 * (Poly{{-0.25, 1.0}} * Poly{{0.75, -1.0}});

  std::vector<Piece> upp{{delta, 0.25, u}, {0.25, 0.5, Poly{}}};
  std::vector<Piece> vpp{{delta, 0.25, Poly{}}, {0.25, 0.5, v}};

  auto U1 = integrate_pieces(upp, 0.0);   // int u
  auto V1 = integrate_pieces(vpp, 0.0);   // int v
  auto U2 = integrate_pieces(U1, 0.0);    // double integral
  auto V2 = integrate_pieces(V1, 0.0);

  // f'(1/2) = 0 and f(1/2) = 1.
  double up1 = U1.back().poly.eval(0.5), vp1 = V1.back().poly.eval(0.5);
  double u2 = U2.back().poly.eval(0.5), v2 = V2.back().poly.eval(0.5);
  double det = up1 * v2 - vp1 * u2;
  if (std::abs(det) < 1e-14) throw std::runtime_error("build_bump: singular constraint system");
  double A = -vp1 / det;
  double B = up1 / det;

  BumpProfile bp;
  bp.delta = delta;
  bp.pieces.push_back({0.0, delta, Poly{}});
  for (std::size_t k = 0; k < U2.size(); ++k) {
    Poly f = A * U2[k].poly + B * V2[k].poly;
    bp.pieces.push_back({U2[k].lo, U2[k].hi, std::move(f)});
  }
  // Mirror the left half across s = 1/2; this makes the support endpoints and
  // the peak exact.
  for (std::size_t k = U2.size(); k-- > 0;) {
    const Piece& left = bp.pieces[1 + k];
    bp.pieces.push_back({1.0 - left.hi, 1.0 - left.lo, compose_affine(left.poly, -1.0, 1.0)});
  }
  bp.pieces.push_back({1.0 - delta, 1.0, Poly{}});

  // Absorb the residual rounding of the 2x2 solve so the peak value is 1 to
  // machine precision.
  double peak = bp.eval(0.5);
  for (auto& piece : bp.pieces)
    for (double& ck : piece.poly.c) ck /= peak;

  // Invariant checks: grid scan plus per-piece sign pattern.
  if (std::abs(bp.eval(0.5) - 1.0) > 1e-9 || std::abs(bp.eval(delta)) > 1e-12 ||
      std::abs(bp.deriv(delta)) > 1e-12)
    throw std::runtime_error("build_bump: endpoint constraints violated");
  const int n = 10000;
  for (int i = 0; i <= n; ++i) {
    double s = static_cast<double>(i) / n;
    double fs = bp.eval(s);
    if (fs < -1e-9 || fs > 1.0 + 1e-9) throw std::runtime_error("build_bump: range violated");
    if (s > delta + 1e-9 && s < 0.5 - 1e-9 && bp.deriv(s) <= 0.0)
      throw std::runtime_error("build_bump: monotonicity violated on rising flank");
  }
  auto check_sign = [&](double lo, double hi, int sign) {
    for (int i = 1; i < 64; ++i) {
      double s = lo + (hi - lo) * i / 64.0;
      // v is symmetric about 1/2, so the mirrored middle piece reuses v(s).
      double f2 = A * ((s >= delta && s <= 0.25) ? u.eval(s)
                       : (s >= 0.75 && s <= 1.0 - delta) ? u.eval(1.0 - s) : 0.0) +
                  B * ((s >= 0.25 && s <= 0.75) ? v.eval(s) : 0.0);
      if (sign > 0 && f2 <= 0.0) throw std::runtime_error("build_bump: f'' sign pattern violated");
      if (sign < 0 && f2 >= 0.0) throw std::runtime_error("build_bump: f'' sign pattern violated");
    }
  };
  check_sign(delta, 0.25, +1);
  check_sign(0.25, 0.75, -1);
  check_sign(0.75, 1.0 - delta, +1);
  return bp;
}

double ProfileSum::support_lo(std::size_t i) const {
  return (1.0 + profile.delta) / std::ldexp(1.0, static_cast<int>(i) + 1);
}
double ProfileSum::support_hi(std::size_t i) const {
  return (2.0 - profile.delta) / std::ldexp(1.0, static_cast<int>(i) + 1);
}
double ProfileSum::peak(std::size_t i) const {
  return 3.0 / std::ldexp(1.0, static_cast<int>(i) + 2);
}

double ProfileSum::eval(double s) const {
  double r = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    double scale = std::ldexp(1.0, static_cast<int>(i) + 1);
    r += coeffs[i] * profile.eval(scale * s - 1.0);
  }
  return r;
}

double ProfileSum::deriv(double s) const {
  double r = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    double scale = std::ldexp(1.0, static_cast<int>(i) + 1);
    r += coeffs[i] * scale * profile.deriv(scale * s - 1.0);
  }
  return r;
}

ProfileExtrema minmax_min_osc(const ProfileSum& sum) {
  // Plateaus between the disjoint supports always realize the local-maximum
  // value 0; positive coefficients add their peak values.
  ProfileExtrema e;
  double min_v = 0.0, max_v = 0.0, minmax = 0.0;
  for (double a : sum.coeffs) {
    min_v = std::min(min_v, a);
    max_v = std::max(max_v, a);
    if (a > 0.0) minmax = std::min(minmax, a);
  }
  e.minmax = minmax;
  e.min = min_v;
  e.osc = max_v - min_v;
  return e;
}

ProfileExtrema minmax_min_osc_scan(const ProfileSum& sum, int grid_points) {
  std::vector<double> grid;
  grid.reserve(grid_points + 16 * sum.coeffs.size());
  const double lo = -0.05, hi = 1.05;
  for (int i = 0; i <= grid_points; ++i)
    grid.push_back(lo + (hi - lo) * i / static_cast<double>(grid_points));
  for (std::size_t i = 0; i < sum.coeffs.size(); ++i) {
    double scale = std::ldexp(1.0, static_cast<int>(i) + 1);
    for (const auto& p : sum.profile.pieces) {
      grid.push_back((p.lo + 1.0) / scale);
      grid.push_back((p.hi + 1.0) / scale);
    }
    grid.push_back(sum.peak(i));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = sum.eval(grid[i]);

  // Collapse runs of exactly-equal consecutive samples; a run is a local
  // maximum when no strictly higher neighbor run touches it, and plateau runs
  // (length >= 2) always contain interior non-strict local maxima.
  ProfileExtrema e;
  double minmax = kInf, min_v = kInf, max_v = -kInf;
  std::size_t i = 0;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j + 1 < vals.size() && vals[j + 1] == vals[i]) ++j;
    double v = vals[i];
    min_v = std::min(min_v, v);
    max_v = std::max(max_v, v);
    bool plateau = j > i;
    bool left_ok = (i == 0) || (vals[i - 1] < v);
    bool right_ok = (j + 1 == vals.size()) || (vals[j + 1] < v);
    // Plateau runs count unconditionally; isolated samples need both
    // neighbors strictly lower.
    if (plateau || (left_ok && right_ok)) minmax = std::min(minmax, v);
    i = j + 1;
  }
  e.minmax = (minmax == kInf) ? 0.0 : minmax;
  e.min = min_v;
  e.osc = max_v - min_v;
  return e;
}

std::vector<double> coeff_difference(std::vector<double> a, std::vector<double> b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  if (b.size() < a.size()) b.resize(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

double sup_norm(const std::vector<double>& a) {
  double r = 0.0;
  for (double x : a) r = std::max(r, std::abs(x));
  return r;
}

HoferBound hofer_upper_bound(const std::vector<double>& a, const std::vector<double>& b,
                             double delta) {
  std::vector<double> d = coeff_difference(a, b);
  HoferBound hb;
  hb.bound = 2.0 * sup_norm(d);
  ProfileSum sum{build_bump(delta), d};
  ProfileExtrema e = minmax_min_osc(sum);
  hb.osc = e.osc;
  if (hb.osc > hb.bound + 1e-12)
    throw std::runtime_error("hofer_upper_bound: oscillation exceeds 2*sup-norm");
  return hb;
}

json profile_to_json(const BumpProfile& p) {
  json j;
  j["delta"] = p.delta;
  j["pieces"] = json::array();
  for (const auto& piece : p.pieces)
    j["pieces"].push_back({{"lo", piece.lo}, {"hi", piece.hi}, {"coeffs", piece.poly.c}});
  return j;
}

}  // namespace qflat
