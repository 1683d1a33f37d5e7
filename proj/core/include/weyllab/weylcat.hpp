#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "weyllab/engine.hpp"

namespace weyl {

enum class SigmaPart { W, BW, SFpm, SBFpm };
enum class PointPart { E, E0, Ea, Ea0, Pi, Pi0, PiA, PiA0 };

SetId setOf(SigmaPart p);
SetId setOf(PointPart p);

/// A spectral valued function T -> (part1(T), part2(T)).
struct Svf {
  SigmaPart sigmaPart;
  PointPart pointPart;
  std::string_view name;

  friend bool operator==(const Svf& a, const Svf& b) {
    return a.sigmaPart == b.sigmaPart && a.pointPart == b.pointPart;
  }
};

/// The 24 catalog entries: the twelve sigma-partitioning candidates
/// followed by the twelve sigma_a-partitioning candidates.
const std::vector<Svf>& svfCatalog();

/// Lookup by catalog name or alias (Phi_BW, Phi_D, Phi_aW, Phi_gaW).
/// Throws UnknownSvf.
const Svf& findSvf(std::string_view name);

struct SvfValue {
  CellSet part1;
  CellSet part2;
};

SvfValue evaluate(const Svf& f, const SpectralSnapshot& s);

struct PartitionStatus {
  bool partitionsSigma = false;
  bool partitionsSigmaA = false;
};

PartitionStatus partitionStatus(const Svf& f, const SpectralSnapshot& s);

enum class Order { Leq, Ll };

/// Psi <= Phi: Phi1 ⊆ Psi1 and Psi2 ⊆ Phi2.  Psi << Phi: Psi1 ⊆ Phi1 and Psi2 ⊆ Phi2.
bool orderCheck(Order rel, const Svf& psi, const Svf& phi, const SpectralSnapshot& s);

/// The relation for every operator, derived from the universally valid
/// inclusions between the spectra and the point sets.
bool staticOrder(Order rel, const Svf& psi, const Svf& phi);
bool sigmaPartIncluded(SigmaPart a, SigmaPart b);  // a ⊆ b for every operator
bool pointPartIncluded(PointPart a, PointPart b);

enum class Condition { T21, T41, T42, T45 };

/// T21: Psi1 \ Phi1 = Phi2 \ Psi2
/// T41: Phi2 \ Psi2 = (Psi1 \ Phi1) ⊔ (sigma \ sigma_a)
/// T42: Psi1 \ Phi1 = (Phi2 \ Psi2) ⊔ (sigma \ sigma_a)
/// T45: (Phi1 \ Psi1) ⊔ (Phi2 \ Psi2) = sigma \ sigma_a
/// A ⊔ requires its operands to be disjoint.
bool differenceCondition(Condition kind, const Svf& psi, const Svf& phi, const SpectralSnapshot& s);

enum class TheoremId { T21, T22, T31, T32, T41, T42, COR41, COR42, T45, T46 };
enum class Role { Phi, Psi };
enum class Target { Sigma, SigmaA };

/// hypothesis: `hypothesisRole` partitions `hypothesisTarget`, and Psi rel Phi;
/// claim: `conclusionRole` partitions `conclusionTarget` iff `condition`.
struct TheoremShape {
  TheoremId id;
  std::string_view name;
  Order order;
  Role hypothesisRole;
  Target hypothesisTarget;
  Role conclusionRole;
  Target conclusionTarget;
  Condition condition;
};

const std::array<TheoremShape, 10>& theoremCatalog();
/// Both throw UnknownTheorem.
const TheoremShape& theoremShape(TheoremId id);
TheoremId parseTheoremId(std::string_view name);

/// One row of the per-model report. For set-algebraic theorems:
/// hypothesesMet, conditionHolds (the difference condition), conclusionHolds
/// (the partitioning claim). For registry rows the row states
/// "condition => conclusion" (or "<=>" when `equivalence`), so
/// hypothesesMet is always true.
struct TheoremRow {
  std::string theorem;
  std::string pair;
  bool hypothesesMet = false;
  bool conditionHolds = false;
  bool conclusionHolds = false;
  bool violation = false;
  std::vector<Cell> witnesses;
  std::string note;
};

struct TheoremReport {
  std::vector<TheoremRow> rows;
  bool hasViolation() const;
  std::size_t violationCount() const;
};

struct VerifyOptions {
  /// Keep set-theorem rows whose hypotheses fail (they are always consistent).
  bool includeUnmetRows = false;
};

/// Every set-algebraic theorem over every statically comparable catalog
/// pair, plus the analytic registry. Runs on piece masks.
TheoremReport verifyAll(const ModelAnalysis& a, const VerifyOptions& opts = {});
TheoremReport verifyAll(const OperatorModel& m, const VerifyOptions& opts = {});

/// Same report computed with cset operations on the snapshot alone.
TheoremReport verifyAllExact(const SpectralSnapshot& s, const VerifyOptions& opts = {});

}  // namespace weyl
