#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weyllab/cset.hpp"
#include "weyllab/profile.hpp"

namespace weyl {

enum class AtomKind { Jordan, ScalarInf, DiagSeq, QShift, ShiftFwd, ShiftAdj };

std::string_view atomKindName(AtomKind kind);

/// A primitive operator of the catalog.
///   jordan(lambda, size)   k x k Jordan block
///   scalar_inf(lambda)     lambda I on an infinite-dimensional space
///   diag_seq(c, r)         diagonal operator with entries c + r/n
///   qshift                 the quasinilpotent weighted shift Q, fixed at 0
///   shift_fwd(a, rho)      a + rho S for the unilateral forward shift S
///   shift_adj(a, rho)      a + rho S* for its adjoint
struct Atom {
  AtomKind kind = AtomKind::Jordan;
  ExactComplex point;   // lambda, c or a
  ExactComplex rate;    // r (diag_seq)
  Rational radius;      // rho (shifts)
  std::int64_t size = 1;  // k (jordan)

  friend bool operator==(const Atom&, const Atom&) = default;
};

Atom jordan(const ExactComplex& lambda, std::int64_t size);
Atom scalarInf(const ExactComplex& lambda);
Atom diagSeq(const ExactComplex& c, const ExactComplex& r);
Atom qshift();
Atom shiftFwd(const ExactComplex& a, const Rational& rho);
Atom shiftAdj(const ExactComplex& a, const Rational& rho);

/// Throws InvalidAtom on out-of-range parameters.
void validateAtom(const Atom& a);

std::string describe(const Atom& a);

/// A part of the spectrum of an atom on which its profile is constant.
struct AtomRegion {
  std::vector<Cell> cells;
  PowerProfile row;
};

/// The support of the atom split into constant-profile regions.
std::vector<AtomRegion> atomRegions(const Atom& a);

/// σ(atom).
CellSet atomSupport(const Atom& a);

/// Catalog row of the atom on `where`. Throws CellOutsideDecomposition if
/// the cell straddles two regions or the boundary of the support.
PowerProfile atomProfile(const Atom& a, const Cell& where);

// Catalog rows, exposed for tests.
PowerProfile jordanRow(std::int64_t size);
PowerProfile scalarInfRow();
PowerProfile diagMemberRow();
PowerProfile denseRangeRow();  // diag limit, Q at 0, shift boundary
PowerProfile shiftFwdInteriorRow();
PowerProfile shiftAdjInteriorRow();

}  // namespace weyl
