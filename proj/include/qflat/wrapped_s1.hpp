#pragma once

#include <string>
#include <vector>

#include "qflat/barcode.hpp"
#include "qflat/filtered_complex.hpp"
#include "qflat/profiles.hpp"

namespace qflat {

// Radial Hamiltonian on the unit-disk cotangent bundle of the circle:
// piecewise-polynomial in the momentum coordinate p on [-1,1], extended
// beyond |p| = 1 with slope mu > 0 in |p|.
struct RadialHamiltonian {
  std::vector<Piece> pieces;  // contiguous cover of [-1,1]
  double mu = 0.5;

  double eval(double p) const;
  double deriv(double p) const;
};

// h(p) = f_a(|p|); even by construction. Throws std::invalid_argument
// unless mu > 0.
RadialHamiltonian radial_from_profile(const ProfileSum& sum, double mu = 0.5);

// Action of the chord over radius r: h(r) - r h'(r) (equals h(r) when
// h'(r) = 0).
double radial_action(const RadialHamiltonian& h, double r);

enum class ChordKind { min, max };

// One zero-winding chord; a maximal flat interval of h collapses to a single
// record with its extent [p_lo, p_hi] retained (p is the representative
// midpoint). Isolated critical points have p_lo = p = p_hi.
struct Chord {
  std::string id;
  double p = 0.0, p_lo = 0.0, p_hi = 0.0;
  double action = 0.0;
  ChordKind kind = ChordKind::min;
};

// Interior critical points and plateau representatives of h, ordered by
// increasing p. A plateau is a minimum when h rises away on both sides, a
// maximum when it falls away on both; one-sided shoulders cancel and are
// omitted. The boundary |p| = 1 always counts as rising (mu > 0), so a flat
// region reaching it classifies by its interior side alone. Throws
// std::runtime_error on degenerate inputs (equal levels at adjacent critical
// items).
std::vector<Chord> enumerate_class0_chords(const RadialHamiltonian& h);

// Generators = chords, level = action, degree 0 for maxima and 1 for minima
// (relative convention); d(max) = adjacent min + adjacent min, one bigon to
// each side. The result always validates.
FilteredComplex build_bigon_complex(const RadialHamiltonian& h);

struct S1Result {
  std::vector<Chord> chords;
  FilteredComplex complex;
  Barcode bc;
  double beta = 0.0;
};

// Boundary depth of the bigon complex for h = f_a(|p|). Asserts exactly one
// infinite bar and beta >= ||a||_inf - 1e-9 (throws std::runtime_error if
// either fails).
S1Result s1_beta(const std::vector<double>& a, double delta);

json chords_to_json(const std::vector<Chord>& chords);

}  // namespace qflat
