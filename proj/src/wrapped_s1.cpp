#include "qflat/wrapped_s1.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qflat {

namespace {

const std::vector<Piece>::const_iterator piece_at(const std::vector<Piece>& pieces, double p) {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), p,
                             [](double x, const Piece& pc) { return x < pc.lo; });
  if (it != pieces.begin()) --it;
  return it;
}

}  // namespace

double RadialHamiltonian::eval(double p) const {
  if (pieces.empty()) return 0.0;
  if (p > pieces.back().hi) return pieces.back().poly.eval(pieces.back().hi) + mu * (p - pieces.back().hi);
  if (p < pieces.front().lo) return pieces.front().poly.eval(pieces.front().lo) + mu * (pieces.front().lo - p);
  return piece_at(pieces, p)->poly.eval(p);
}

double RadialHamiltonian::deriv(double p) const {
  if (pieces.empty()) return 0.0;
  if (p > pieces.back().hi) return mu;
  if (p < pieces.front().lo) return -mu;
  return piece_at(pieces, p)->poly.derivative().eval(p);
}

RadialHamiltonian radial_from_profile(const ProfileSum& sum, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("radial_from_profile: mu must be positive");
  RadialHamiltonian h;
  h.mu = mu;

  // Nonzero bump arcs in s = |p|, ascending; index i occupies
  // [(1+delta)/2^{i+1}, (2-delta)/2^{i+1}], so larger i sits closer to 0.
  std::vector<Piece> pos;
  double cursor = 0.0;
  for (std::size_t k = sum.coeffs.size(); k-- > 0;) {
    if (sum.coeffs[k] == 0.0) continue;
    double scale = std::ldexp(1.0, static_cast<int>(k) + 1);
    if (sum.support_lo(k) > cursor)
      pos.push_back({cursor, sum.support_lo(k), Poly{}});
    for (const auto& pc : sum.profile.pieces) {
      if (pc.poly.is_zero()) continue;
      pos.push_back({(pc.lo + 1.0) / scale, (pc.hi + 1.0) / scale,
                     sum.coeffs[k] * compose_affine(pc.poly, scale, -1.0)});
    }
    cursor = sum.support_hi(k);
  }
  pos.push_back({cursor, 1.0, Poly{}});

  for (std::size_t k = pos.size(); k-- > 0;)
    h.pieces.push_back({-pos[k].hi, -pos[k].lo, compose_affine(pos[k].poly, -1.0, 0.0)});
  for (auto& pc : pos) h.pieces.push_back(std::move(pc));
  return h;
}

double radial_action(const RadialHamiltonian& h, double r) {
  return h.eval(r) - r * h.deriv(r);
}

namespace {

struct Item {
  double lo, hi;  // lo == hi for an isolated critical point
  double value;
};

std::vector<Item> critical_items(const RadialHamiltonian& h) {
  const double tol = 1e-9;

  // Maximal flat intervals: merge contiguous constant pieces.
  std::vector<Item> flats;
  for (const auto& pc : h.pieces) {
    if (!pc.poly.derivative().is_zero()) continue;
    double v = pc.poly.eval(pc.lo);
    if (!flats.empty() && pc.lo <= flats.back().hi + tol &&
        std::abs(v - flats.back().value) <= tol) {
      flats.back().hi = pc.hi;
    } else {
      flats.push_back({pc.lo, pc.hi, v});
    }
  }

  // Isolated critical points: derivative roots inside non-flat pieces, plus
  // junctions where the one-sided slopes change sign without vanishing.
  std::vector<double> crit;
  for (std::size_t k = 0; k < h.pieces.size(); ++k) {
    const Piece& pc = h.pieces[k];
    Poly d = pc.poly.derivative();
    if (d.is_zero()) continue;
    for (double r : real_roots(d, pc.lo, pc.hi)) crit.push_back(r);
    if (k + 1 < h.pieces.size()) {
      Poly dn = h.pieces[k + 1].poly.derivative();
      if (!dn.is_zero() && d.eval(pc.hi) * dn.eval(pc.hi) < 0.0) crit.push_back(pc.hi);
    }
  }
  std::sort(crit.begin(), crit.end());
  // Critical points landing on a piece junction (the bump peak does) snap to
  // the exact junction coordinate.
  for (double& p : crit)
    for (const auto& pc : h.pieces) {
      if (std::abs(p - pc.lo) <= tol) p = pc.lo;
      if (std::abs(p - pc.hi) <= tol) p = pc.hi;
    }
  // Arc endpoints adjoining a flat are tangential zeros of h', so the root
  // finder can misplace them by ~sqrt(eps); absorb with a wide margin.
  const double absorb = 1e-6;
  std::vector<double> kept;
  for (double p : crit) {
    if (!kept.empty() && p - kept.back() <= tol) continue;
    bool in_flat = false;
    for (const auto& f : flats)
      if (p >= f.lo - absorb && p <= f.hi + absorb) { in_flat = true; break; }
    if (!in_flat) kept.push_back(p);
  }

  std::vector<Item> items = flats;
  for (double p : kept) items.push_back({p, p, h.eval(p)});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.lo < b.lo; });
  return items;
}

}  // namespace

std::vector<Chord> enumerate_class0_chords(const RadialHamiltonian& h) {
  if (!(h.mu > 0.0))
    throw std::invalid_argument("enumerate_class0_chords: extension slope must be positive");
  std::vector<Item> items = critical_items(h);

  // Between consecutive items h is strictly monotone, so each item's type
  // follows from the neighboring values; the rising extension beyond |p| = 1
  // acts as a virtual +inf neighbor on both ends.
  std::vector<Chord> chords;
  for (std::size_t j = 0; j < items.size(); ++j) {
    double v = items[j].value;
    double vl = (j == 0) ? kInf : items[j - 1].value;
    double vr = (j + 1 == items.size()) ? kInf : items[j + 1].value;
    if (v == vl || v == vr)
      throw std::runtime_error("enumerate_class0_chords: degenerate adjacent critical levels");
    if ((v < vl) == (v < vr)) {
      Chord c;
      c.p_lo = items[j].lo;
      c.p_hi = items[j].hi;
      c.p = 0.5 * (items[j].lo + items[j].hi);
      c.action = v;
      c.kind = (v < vl) ? ChordKind::min : ChordKind::max;
      c.id = "c" + std::to_string(chords.size());
      chords.push_back(std::move(c));
    }
  }
  return chords;
}

FilteredComplex build_bigon_complex(const RadialHamiltonian& h) {
  std::vector<Chord> chords = enumerate_class0_chords(h);
  FilteredComplex cx;
  for (const auto& c : chords)
    cx.generators.push_back({c.id, c.kind == ChordKind::max ? 0 : 1, c.action});
  for (std::size_t j = 0; j < chords.size(); ++j) {
    if (chords[j].kind != ChordKind::max) continue;
    if (j == 0 || j + 1 == chords.size() || chords[j - 1].kind != ChordKind::min ||
        chords[j + 1].kind != ChordKind::min)
      throw std::runtime_error("build_bigon_complex: maximum without two adjacent minima");
    cx.differential[chords[j].id] = {chords[j - 1].id, chords[j + 1].id};
  }
  require_valid(cx);
  return cx;
}

S1Result s1_beta(const std::vector<double>& a, double delta) {
  ProfileSum sum{build_bump(delta), a};
  RadialHamiltonian h = radial_from_profile(sum);
  S1Result r;
  r.chords = enumerate_class0_chords(h);
  r.complex = build_bigon_complex(h);
  r.bc = barcode(r.complex);
  r.beta = longest_finite_bar(r.bc);
  int inf_bars = 0;
  for (const auto& b : r.bc.bars) inf_bars += b.infinite();
  if (inf_bars != 1)
    throw std::runtime_error("s1_beta: expected exactly one infinite bar, got " +
                             std::to_string(inf_bars));
  if (r.beta < sup_norm(a) - 1e-9)
    throw std::runtime_error("s1_beta: boundary depth fell below the sup-norm lower bound");
  return r;
}

json chords_to_json(const std::vector<Chord>& chords) {
  json j = json::array();
  for (const auto& c : chords)
    j.push_back({{"id", c.id},
                 {"p", c.p},
                 {"p_lo", c.p_lo},
                 {"p_hi", c.p_hi},
                 {"action", c.action},
                 {"kind", c.kind == ChordKind::max ? "max" : "min"}});
  return j;
}

}  // namespace qflat
