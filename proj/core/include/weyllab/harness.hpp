#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weyllab/weylcat.hpp"

namespace weyl {

struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t modelCount = 100;
  std::size_t maxAtoms = 4;
  std::int64_t maxNumerator = 8;
  std::int64_t maxDenominator = 8;
  bool jordanOnly = false;
};

/// Deterministic in (cfg, index). Atom kinds cycle with the index, every
/// sixteenth model is qshift ⊕ scalar_inf(0), shift disks sit on
/// separated centers, and diag limits never repeat with a new rate.
OperatorModel generateModel(const GenConfig& cfg, std::size_t index);

/// Membership and inclusion facts every snapshot must satisfy: the lattice
/// of the spectra, the point-set inclusions and ∂σ ⊆ σ_a. Returns the names
/// of the failed facts.
std::vector<std::string> invariantFailures(const SpectralSnapshot& s);

struct CorpusViolation {
  std::size_t index = 0;
  std::string model;  // model-file text
  std::string theorem;
  std::string pair;
};

struct SvfStats {
  std::string name;
  std::size_t partitionsSigma = 0;
  std::size_t partitionsSigmaA = 0;
};

/// Models on which exactly one of the two functions partitions.
struct DistinguishingPair {
  std::string first;
  std::string second;
  Target target = Target::Sigma;
  std::size_t count = 0;
};

struct CorpusReport {
  std::size_t modelsRun = 0;
  std::vector<CorpusViolation> violations;
  std::vector<SvfStats> stats;
  std::vector<DistinguishingPair> distinguishing;
};

/// snapshot + verifyAll + invariantFailures on every model of the corpus.
/// Models are evaluated in parallel; the report is in index order.
CorpusReport runCorpus(const GenConfig& cfg);

struct TargetClause {
  std::string svf;
  Target target = Target::Sigma;
  bool expected = true;
};

/// Conjunction of partitioning verdicts.
struct SearchTarget {
  std::vector<TargetClause> clauses;
};

/// "Phi_W.sigma & !Phi_gW.sigma"; the suffix is sigma or sigmaA. Throws
/// SyntaxError or UnknownSvf.
SearchTarget parseTarget(std::string_view text);
std::string describe(const SearchTarget& t);

bool matches(const SearchTarget& t, const SpectralSnapshot& s);

struct Counterexample {
  std::size_t index = 0;
  OperatorModel model;
};

/// First model among indices [0, budget) matching the target.
std::optional<Counterexample> findCounterexample(const SearchTarget& target, std::size_t budget,
                                                 const GenConfig& cfg);

}  // namespace weyl
