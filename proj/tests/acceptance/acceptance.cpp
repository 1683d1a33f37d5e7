// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "random_sets.hpp"
#include "test_util.hpp"
#include "weyllab/harness.hpp"
#include "weyllab/verifier.hpp"

namespace weyl {
namespace {

using namespace weyl::test;
using S = SetId;

// Empty string on success, otherwise the first failure.
using Check = std::function<std::string()>;

struct Criterion {
  const char* name;
  double limitSeconds;
  Check run;
};

template <class F>
void parallelFor(std::size_t count, F body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  const std::size_t n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
}

// Keeps the failure with the smallest index so the report is deterministic.
class FirstFailure {
 public:
  void record(std::size_t index, std::string what) {
    std::lock_guard<std::mutex> lock(mu_);
    if (index < index_) index_ = index, what_ = std::move(what);
  }
  std::string get() const { return what_; }

 private:
  std::mutex mu_;
  std::size_t index_ = SIZE_MAX;
  std::string what_;
};

std::string mismatch(const SpectralSnapshot& got, const SpectralSnapshot& want) {
  for (SetId id : kAllSets)
    if (got[id] != want[id]) return std::string(setName(id)) + " = " + show(got[id]) + ", expected " + show(want[id]);
  return {};
}

std::string qPlusZero() {
  const OperatorModel m{{qshift(), scalarInf(z("0"))}, ""};
  const SpectralSnapshot s = snapshot(m);
  SpectralSnapshot want;
  for (SetId id : {S::Sigma, S::SigmaA, S::SigmaW, S::SigmaBW, S::E, S::Ea}) want[id] = set({pt("0")});
  // Every other spectrum lies between σ_SBF and σ = {0}, and 0 is in σ_SBF
  // since no power of Q ⊕ 0 has closed range.
  for (SetId id : {S::SigmaB, S::SigmaD, S::SigmaLD, S::SigmaUB, S::SigmaSFpm, S::SigmaSBFpm}) want[id] = set({pt("0")});
  if (std::string e = mismatch(s, want); !e.empty()) return e;
  if (!partitionStatus(findSvf("Phi_W"), s).partitionsSigma) return "Phi_W does not partition sigma";
  if (partitionStatus(findSvf("Phi_gW"), s).partitionsSigma) return "Phi_gW partitions sigma";
  if (!partitionStatus(findSvf("Phi_aW"), s).partitionsSigmaA) return "Phi_aW does not a-partition sigmaA";
  if (partitionStatus(findSvf("Phi_gaW"), s).partitionsSigmaA) return "Phi_gaW a-partitions sigmaA";
  return {};
}

std::string decisionSuite() {
  for (const CatalogVerdict& v : checkCatalog())
    if (!v.decision.forward.valid() || !v.decision.backward.valid())
      return std::string(theoremShape(v.id).name) + " is not Valid";
  Decision t21 = decide(encodeTheorem(TheoremId::T21, Mutation::DropOrder));
  if (t21.forward.valid() && t21.backward.valid()) return "T21 without the order hypothesis is Valid";
  Decision t41 = decide(encodeTheorem(TheoremId::T41, Mutation::WeakenDisjoint));
  if (t41.forward.valid() && t41.backward.valid()) return "T41 with plain unions is Valid";
  return {};
}

std::string jordanOracle() {
  GenConfig cfg;
  cfg.jordanOnly = true;
  cfg.seed = 2024;
  FirstFailure fail;
  parallelFor(500, [&](std::size_t i) {
    OperatorModel m = generateModel(cfg, i);
    if (std::string e = mismatch(snapshot(m), oracleSnapshot(m)); !e.empty())
      fail.record(i, "model " + std::to_string(i) + ": " + e);
  });
  return fail.get();
}

std::string corpus() {
  GenConfig cfg;
  cfg.modelCount = 1000;
  CorpusReport r = runCorpus(cfg);
  if (r.modelsRun != 1000) return "ran " + std::to_string(r.modelsRun) + " models";
  if (!r.violations.empty()) {
    const CorpusViolation& v = r.violations.front();
    return std::to_string(r.violations.size()) + " violations, first: model " + std::to_string(v.index) + " " +
           v.theorem + " " + v.pair;
  }
  // The named registry rows are part of every report.
  TheoremReport sample = verifyAll(generateModel(cfg, 0));
  for (const char* row : {"Phi_gB<=>Phi_B", "Psi_gaB<=>Psi_aB", "Psi_aW=>Phi_W", "Psi_w=>Phi_B",
                          "Phi_gB=>(sigmaBW=sigmaD and sigmaW=sigmaB)",
                          "Psi_gaB=>(sigmaSBFpm=sigmaLD and sigmaSFpm=sigmaUB)", "Phi\\Psi partitions sigma\\sigmaA"})
    if (std::none_of(sample.rows.begin(), sample.rows.end(), [&](const TheoremRow& r) { return r.theorem == row; }))
      return std::string("registry row missing: ") + row;
  return {};
}

std::string shiftFixture() {
  const SpectralSnapshot s = snapshot(OperatorModel{{shiftFwd(z("0"), q("1"))}, ""});
  const CellSet disk = set({annulus("0", "0", "1"), pt("0"), circle("0", "1")});
  const CellSet circ = set({circle("0", "1")});
  SpectralSnapshot want;
  for (SetId id : {S::Sigma, S::SigmaW, S::SigmaBW, S::SigmaD, S::SigmaB}) want[id] = disk;
  for (SetId id : {S::SigmaA, S::SigmaSFpm, S::SigmaSBFpm, S::SigmaLD, S::SigmaUB}) want[id] = circ;
  if (std::string e = mismatch(s, want); !e.empty()) return e;
  if (s.sigmaMinusSigmaA() != set({annulus("0", "0", "1"), pt("0")})) return "sigma \\ sigmaA is not the open disk";
  if (!differenceCondition(Condition::T45, findSvf("Psi_w"), findSvf("Phi_W"), s)) return "T45 condition fails";
  if (!differenceCondition(Condition::T42, findSvf("Phi_W"), findSvf("Psi_aW"), s)) return "T42 condition fails";
  return {};
}

// Points where the model's spectra change: atom points, diagonal entries,
// shift centers, and points inside, on and outside each shift circle.
std::vector<ExactComplex> modelProbes(const OperatorModel& m) {
  std::vector<ExactComplex> out;
  for (const Atom& a : m.atoms) {
    out.push_back(a.point);
    if (a.kind == AtomKind::DiagSeq)
      for (int n = 1; n <= 6; ++n) out.push_back(a.point + a.rate * ExactComplex(Rational(1, n)));
    if (a.kind == AtomKind::ShiftFwd || a.kind == AtomKind::ShiftAdj) {
      const Rational r = a.radius;
      for (const ExactComplex& d : {ExactComplex(Rational(r / 2)), ExactComplex(r), ExactComplex(Rational(0), r),
                                    ExactComplex(Rational(3 * r / 5), Rational(4 * r / 5)), ExactComplex(Rational(2 * r))})
        out.push_back(a.point + d);
    }
  }
  return out;
}

// The inclusion lattice of the spectra and point sets, as chains.
const std::vector<std::vector<SetId>> kChains = {
    {S::SigmaSBFpm, S::SigmaSFpm, S::SigmaW, S::SigmaB, S::Sigma},
    {S::SigmaSBFpm, S::SigmaBW, S::SigmaW},
    {S::SigmaBW, S::SigmaD, S::SigmaB},
    {S::SigmaSBFpm, S::SigmaLD, S::SigmaUB, S::SigmaA, S::Sigma},
    {S::SigmaLD, S::SigmaD},
    {S::SigmaSFpm, S::SigmaUB, S::SigmaB},
    {S::Pi0, S::Pi, S::E, S::Ea, S::SigmaA},
    {S::Pi0, S::E0, S::E, S::Sigma},
    {S::E0, S::Ea0, S::Ea},
    {S::PiA0, S::PiA, S::Ea},
    {S::PiA0, S::Ea0},
    {S::Pi, S::PiA},
    {S::Pi0, S::PiA0},
};

std::string latticeFailure(const OperatorModel& m) {
  const SpectralSnapshot s = snapshot(m);
  const std::vector<ExactComplex> probes = modelProbes(m);
  for (const std::vector<SetId>& chain : kChains)
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const CellSet &sub = s[chain[k]], &super = s[chain[k + 1]];
      const std::string name = std::string(setName(chain[k])) + " <= " + std::string(setName(chain[k + 1]));
      if (!isSubset(sub, super)) return name;
      for (const ExactComplex& p : probes)
        if (member(sub, p) && !member(super, p)) return name + " at " + toString(p);
    }
  // Π = σ \ σ_D and its relatives, checked pointwise.
  for (const ExactComplex& p : probes) {
    if (member(s[S::Pi], p) != (member(s[S::Sigma], p) && !member(s[S::SigmaD], p))) return "Pi at " + toString(p);
    if (member(s[S::Pi0], p) != (member(s[S::Sigma], p) && !member(s[S::SigmaB], p))) return "Pi0 at " + toString(p);
    if (member(s[S::PiA], p) != (member(s[S::SigmaA], p) && !member(s[S::SigmaLD], p))) return "PiA at " + toString(p);
    if (member(s[S::PiA0], p) != (member(s[S::SigmaA], p) && !member(s[S::SigmaUB], p)))
      return "PiA0 at " + toString(p);
  }
  if (!isSubset(difference(s[S::Sigma], topology(s[S::Sigma]).interior), s[S::SigmaA]))
    return "boundary of sigma not in sigmaA";
  return {};
}

std::string lattice() {
  GenConfig cfg;
  FirstFailure fail;
  parallelFor(1000, [&](std::size_t i) {
    if (std::string e = latticeFailure(generateModel(cfg, i)); !e.empty())
      fail.record(i, "model " + std::to_string(i) + ": " + e);
  });
  return fail.get();
}

std::string csetTriples() {
  constexpr std::size_t kChunks = 50, kPerChunk = 200;
  FirstFailure fail;
  parallelFor(kChunks, [&](std::size_t chunk) {
    RandomSets gen(1000 + chunk);
    const std::vector<ExactComplex> probes = gen.probes();
    for (std::size_t t = 0; t < kPerChunk; ++t) {
      CellSet a = gen.next(), b = gen.next(), c = gen.next();
      if (std::string e = csetIdentityFailure(a, b, c, probes); !e.empty()) {
        fail.record(chunk * kPerChunk + t, e + " on A = " + show(a) + ", B = " + show(b) + ", C = " + show(c));
        return;
      }
    }
  });
  return fail.get();
}

}  // namespace
}  // namespace weyl

int main() {
  using namespace weyl;
  const std::vector<Criterion> criteria = {
      {"Q (+) 0 regression", 1, qPlusZero},
      {"decision-procedure suite", 1, decisionSuite},
      {"Jordan oracle equivalence (500 models)", 30, jordanOracle},
      {"corpus property run (1000 models)", 60, corpus},
      {"forward shift fixture", 1, shiftFixture},
      {"inclusion lattice and boundary invariants (1000 models)", 60, lattice},
      {"set-algebra identities (10000 triples)", 30, csetTriples},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      error = c.run();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && seconds > c.limitSeconds)
      error = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limitSeconds) + " s";
    failed += !error.empty();
    std::printf("%s  %-58s %8.3f s%s%s\n", error.empty() ? "PASS" : "FAIL", c.name, seconds, error.empty() ? "" : "  ",
                error.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
