#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "weyllab/atoms.hpp"
#include "weyllab/cset.hpp"
#include "weyllab/profile.hpp"
#include "weyllab/refinement.hpp"

namespace weyl {

struct OperatorModel {
  std::vector<Atom> atoms;
  std::string name;

  friend bool operator==(const OperatorModel&, const OperatorModel&) = default;
};

enum class SetId {
  Sigma,
  SigmaA,
  SigmaW,
  SigmaBW,
  SigmaB,
  SigmaD,
  SigmaLD,
  SigmaUB,
  SigmaSFpm,
  SigmaSBFpm,
  E,
  E0,
  Ea,
  Ea0,
  Pi,
  Pi0,
  PiA,
  PiA0,
};

inline constexpr std::size_t kSetCount = 18;
inline constexpr std::array<SetId, kSetCount> kAllSets = {
    SetId::Sigma, SetId::SigmaA, SetId::SigmaW, SetId::SigmaBW, SetId::SigmaB, SetId::SigmaD,
    SetId::SigmaLD, SetId::SigmaUB, SetId::SigmaSFpm, SetId::SigmaSBFpm, SetId::E, SetId::E0,
    SetId::Ea, SetId::Ea0, SetId::Pi, SetId::Pi0, SetId::PiA, SetId::PiA0};

/// JSON key of the set ("sigma", "sigmaSFplusMinus", "PiA0", ...).
std::string_view setName(SetId id);

struct SpectralSnapshot {
  std::array<CellSet, kSetCount> sets;

  const CellSet& operator[](SetId id) const { return sets[static_cast<std::size_t>(id)]; }
  CellSet& operator[](SetId id) { return sets[static_cast<std::size_t>(id)]; }
  CellSet sigmaMinusSigmaA() const;

  friend bool operator==(const SpectralSnapshot&, const SpectralSnapshot&) = default;
};

/// Throws EmptyModel, InvalidAtom, OverlappingDisks or SameLimitSequences.
void validateModel(const OperatorModel& m);

/// Snapshot together with the refinement it was computed on. Every set of
/// the snapshot is a union of pieces, so theorem checks can run on masks.
class ModelAnalysis {
 public:
  explicit ModelAnalysis(const OperatorModel& m);

  const SpectralSnapshot& snapshot() const { return snapshot_; }
  const Refinement& refinement() const { return refinement_; }
  const PieceMask& mask(SetId id) const { return masks_[static_cast<std::size_t>(id)]; }
  PieceMask sigmaMinusSigmaAMask() const { return mask(SetId::Sigma) - mask(SetId::SigmaA); }
  const PowerProfile& pieceProfile(std::size_t piece) const { return profiles_[piece]; }
  const ClassVector& pieceClasses(std::size_t piece) const { return classes_[piece]; }
  CellSet assemble(const PieceMask& m) const { return refinement_.assemble(m); }

 private:
  Refinement refinement_;
  std::vector<PowerProfile> profiles_;
  std::vector<ClassVector> classes_;
  std::array<PieceMask, kSetCount> masks_;
  SpectralSnapshot snapshot_;
};

/// Pairwise disjoint cells covering the union of the atom supports, on each
/// of which every atom profile is constant.
std::vector<Cell> decompose(const OperatorModel& m);

SpectralSnapshot snapshot(const OperatorModel& m);

/// Independent path for Jordan-only models: exact ranks of (T - lambda)^n on
/// the explicit matrix. Throws NotFiniteDimensional otherwise.
SpectralSnapshot oracleSnapshot(const OperatorModel& m);

}  // namespace weyl
