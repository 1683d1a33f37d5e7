#include "weyllab/engine.hpp"

#include <algorithm>

#include "weyllab/error.hpp"

namespace weyl {

namespace {

struct TaggedRegions {
  std::vector<std::vector<Cell>> cells;
  std::vector<PowerProfile> rows;
};

TaggedRegions regionsOf(const OperatorModel& m) {
  validateModel(m);
  TaggedRegions out;
  for (const Atom& a : m.atoms) {
    for (AtomRegion& r : atomRegions(a)) {
      out.cells.push_back(std::move(r.cells));
      out.rows.push_back(std::move(r.row));
    }
  }
  return out;
}

bool isShift(const Atom& a) { return a.kind == AtomKind::ShiftFwd || a.kind == AtomKind::ShiftAdj; }

}  // namespace

std::string_view setName(SetId id) {
  static constexpr std::array<std::string_view, kSetCount> names = {
      "sigma", "sigmaA", "sigmaW", "sigmaBW", "sigmaB", "sigmaD", "sigmaLD", "sigmaUB", "sigmaSFplusMinus",
      "sigmaSBFplusMinus", "E", "E0", "Ea", "Ea0", "Pi", "Pi0", "PiA", "PiA0"};
  return names[static_cast<std::size_t>(id)];
}

CellSet SpectralSnapshot::sigmaMinusSigmaA() const { return difference((*this)[SetId::Sigma], (*this)[SetId::SigmaA]); }

void validateModel(const OperatorModel& m) {
  if (m.atoms.empty()) throw Error(Errc::EmptyModel, "model has no atoms");
  for (const Atom& a : m.atoms) validateAtom(a);
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < m.atoms.size(); ++j) {
      const Atom &x = m.atoms[i], &y = m.atoms[j];
      if (isShift(x) && isShift(y) && x.point != y.point) {
        Rational reach = x.radius + y.radius;
        if ((x.point - y.point).norm2() <= reach * reach)
          throw Error(Errc::OverlappingDisks, describe(x) + " and " + describe(y) +
                                                  " have overlapping, non-concentric disks");
      }
      if (x.kind == AtomKind::DiagSeq && y.kind == AtomKind::DiagSeq && x.point == y.point && x.rate != y.rate)
        throw Error(Errc::SameLimitSequences, describe(x) + " and " + describe(y) + " share a limit");
    }
  }
}

ModelAnalysis::ModelAnalysis(const OperatorModel& m) : refinement_(regionsOf(m).cells) {
  TaggedRegions regions = regionsOf(m);
  const std::size_t n = refinement_.pieceCount();
  profiles_.assign(n, resolventProfile());
  for (std::size_t k = 0; k < regions.rows.size(); ++k) {
    const PieceMask& in = refinement_.inputMask(k);
    for (std::size_t p = in.find_first(); p != PieceMask::npos; p = in.find_next(p))
      profiles_[p] = directSum(profiles_[p], regions.rows[k]);
  }

  for (PieceMask& mask : masks_) mask = refinement_.emptyMask();
  PieceMask eigen = refinement_.emptyMask(), finite = eigen, drazin = eigen, leftDrazin = eigen;
  auto set = [&](SetId id, std::size_t p, bool value) { masks_[static_cast<std::size_t>(id)][p] = value; };
  for (std::size_t p = 0; p < n; ++p) {
    const ClassVector& c = classes_.emplace_back(classify(profiles_[p]));
    set(SetId::Sigma, p, c.inSpectrum);
    set(SetId::SigmaA, p, c.inApproxSpectrum);
    set(SetId::SigmaW, p, !c.weyl);
    set(SetId::SigmaBW, p, !c.bWeyl);
    set(SetId::SigmaB, p, !c.browder);
    set(SetId::SigmaD, p, !c.drazinInvertible);
    set(SetId::SigmaLD, p, !c.leftDrazinInvertible);
    set(SetId::SigmaUB, p, !c.upperSemiBrowder);
    set(SetId::SigmaSFpm, p, !c.upperSemiWeyl);
    set(SetId::SigmaSBFpm, p, !c.upperSemiBWeyl);
    eigen[p] = c.eigenvalue;
    finite[p] = c.finiteMultiplicity;
    drazin[p] = c.drazinInvertible;
    leftDrazin[p] = c.leftDrazinInvertible;
  }

  auto assembleInto = [&](SetId id) { snapshot_[id] = refinement_.assemble(mask(id)); };
  assembleInto(SetId::Sigma);
  assembleInto(SetId::SigmaA);

  // Isolation is decided on the assembled spectra, never per atom.
  PieceMask isoSigma = refinement_.maskOf(topology(snapshot_[SetId::Sigma]).iso);
  PieceMask isoSigmaA = refinement_.maskOf(topology(snapshot_[SetId::SigmaA]).iso);
  auto& M = masks_;
  auto at = [](SetId id) { return static_cast<std::size_t>(id); };
  M[at(SetId::E)] = isoSigma & eigen;
  M[at(SetId::E0)] = M[at(SetId::E)] & finite;
  M[at(SetId::Ea)] = isoSigmaA & eigen;
  M[at(SetId::Ea0)] = M[at(SetId::Ea)] & finite;
  M[at(SetId::Pi)] = mask(SetId::Sigma) & drazin;
  M[at(SetId::Pi0)] = M[at(SetId::Pi)] & finite;
  M[at(SetId::PiA)] = mask(SetId::SigmaA) & leftDrazin;
  M[at(SetId::PiA0)] = M[at(SetId::PiA)] & finite;

  for (SetId id : kAllSets)
    if (id != SetId::Sigma && id != SetId::SigmaA) assembleInto(id);
}

std::vector<Cell> decompose(const OperatorModel& m) {
  Refinement r(regionsOf(m).cells);
  std::vector<Cell> out;
  for (std::size_t p = 0; p < r.pieceCount(); ++p) {
    std::vector<Cell> cells = r.pieceCells(p);
    out.insert(out.end(), cells.begin(), cells.end());
  }
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return compareCells(a, b) < 0; });
  return out;
}

SpectralSnapshot snapshot(const OperatorModel& m) { return ModelAnalysis(m).snapshot(); }

}  // namespace weyl
