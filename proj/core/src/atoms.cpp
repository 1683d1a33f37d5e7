#include "weyllab/atoms.hpp"

#include "weyllab/error.hpp"

namespace weyl {

namespace {

using Nat = EventuallyConstant<ExtNat>;
using Flags = EventuallyConstant<bool>;

const ExtNat kInf = ExtNat::infinity();

}  // namespace

std::string_view atomKindName(AtomKind kind) {
  switch (kind) {
    case AtomKind::Jordan: return "jordan";
    case AtomKind::ScalarInf: return "scalar_inf";
    case AtomKind::DiagSeq: return "diag_seq";
    case AtomKind::QShift: return "qshift";
    case AtomKind::ShiftFwd: return "shift_fwd";
    case AtomKind::ShiftAdj: return "shift_adj";
  }
  return "?";
}

Atom jordan(const ExactComplex& lambda, std::int64_t size) {
  Atom a;
  a.kind = AtomKind::Jordan;
  a.point = lambda;
  a.size = size;
  return a;
}

Atom scalarInf(const ExactComplex& lambda) {
  Atom a;
  a.kind = AtomKind::ScalarInf;
  a.point = lambda;
  return a;
}

Atom diagSeq(const ExactComplex& c, const ExactComplex& r) {
  Atom a;
  a.kind = AtomKind::DiagSeq;
  a.point = c;
  a.rate = r;
  return a;
}

Atom qshift() {
  Atom a;
  a.kind = AtomKind::QShift;
  return a;
}

Atom shiftFwd(const ExactComplex& center, const Rational& rho) {
  Atom a;
  a.kind = AtomKind::ShiftFwd;
  a.point = center;
  a.radius = rho;
  return a;
}

Atom shiftAdj(const ExactComplex& center, const Rational& rho) {
  Atom a = shiftFwd(center, rho);
  a.kind = AtomKind::ShiftAdj;
  return a;
}

void validateAtom(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Jordan:
      if (a.size < 1) throw Error(Errc::InvalidAtom, "jordan block size must be positive");
      break;
    case AtomKind::DiagSeq:
      if (a.rate.isZero()) throw Error(Errc::InvalidAtom, "diag_seq rate must be nonzero");
      break;
    case AtomKind::ShiftFwd:
    case AtomKind::ShiftAdj:
      if (sgn(a.radius) <= 0) throw Error(Errc::InvalidAtom, "shift radius must be positive");
      break;
    case AtomKind::QShift:
      if (!a.point.isZero()) throw Error(Errc::InvalidAtom, "qshift is fixed at 0");
      break;
    case AtomKind::ScalarInf:
      break;
  }
}

std::string describe(const Atom& a) {
  std::string name(atomKindName(a.kind));
  switch (a.kind) {
    case AtomKind::Jordan: return name + "(" + toString(a.point) + ", " + std::to_string(a.size) + ")";
    case AtomKind::ScalarInf: return name + "(" + toString(a.point) + ")";
    case AtomKind::DiagSeq: return name + "(" + toString(a.point) + ", " + toString(a.rate) + ")";
    case AtomKind::QShift: return name;
    case AtomKind::ShiftFwd:
    case AtomKind::ShiftAdj: return name + "(" + toString(a.point) + ", " + toString(a.radius) + ")";
  }
  return name;
}

PowerProfile jordanRow(std::int64_t size) {
  std::vector<ExtNat> ones(static_cast<std::size_t>(size), ExtNat(1));
  return PowerProfile{Nat(ones, 0), Nat(ones, 0), Flags::constant(true)};
}

PowerProfile scalarInfRow() { return PowerProfile{Nat({kInf}, 0), Nat({kInf}, 0), Flags::constant(true)}; }

PowerProfile diagMemberRow() { return PowerProfile{Nat({1}, 0), Nat({1}, 0), Flags::constant(true)}; }

PowerProfile denseRangeRow() { return PowerProfile{Nat::constant(0), Nat::constant(kInf), Flags({true}, false)}; }

PowerProfile shiftFwdInteriorRow() { return PowerProfile{Nat::constant(0), Nat::constant(1), Flags::constant(true)}; }

PowerProfile shiftAdjInteriorRow() { return PowerProfile{Nat::constant(1), Nat::constant(0), Flags::constant(true)}; }

std::vector<AtomRegion> atomRegions(const Atom& a) {
  validateAtom(a);
  switch (a.kind) {
    case AtomKind::Jordan: return {{{Point{a.point}}, jordanRow(a.size)}};
    case AtomKind::ScalarInf: return {{{Point{a.point}}, scalarInfRow()}};
    case AtomKind::DiagSeq:
      return {{{SequenceTail{a.point, a.rate, 1, {}}}, diagMemberRow()}, {{Point{a.point}}, denseRangeRow()}};
    case AtomKind::QShift: return {{{Point{ExactComplex()}}, denseRangeRow()}};
    case AtomKind::ShiftFwd:
    case AtomKind::ShiftAdj: {
      PowerProfile interior = a.kind == AtomKind::ShiftFwd ? shiftFwdInteriorRow() : shiftAdjInteriorRow();
      return {{{Annulus{a.point, 0, a.radius, {}, {}}, Point{a.point}}, interior},
              {{Circle{a.point, a.radius, {}}}, denseRangeRow()}};
    }
  }
  return {};
}

CellSet atomSupport(const Atom& a) {
  std::vector<Cell> cells;
  for (const AtomRegion& r : atomRegions(a)) cells.insert(cells.end(), r.cells.begin(), r.cells.end());
  return normalize(cells);
}

PowerProfile atomProfile(const Atom& a, const Cell& where) {
  CellSet cell = normalize({where});
  if (cell.empty()) throw Error(Errc::CellOutsideDecomposition, "empty cell");
  for (const AtomRegion& r : atomRegions(a))
    if (isSubset(cell, normalize(r.cells))) return r.row;
  if (disjoint(cell, atomSupport(a))) return resolventProfile();
  throw Error(Errc::CellOutsideDecomposition, describe(where) + " is not a cell of the decomposition of " + describe(a));
}

}  // namespace weyl
