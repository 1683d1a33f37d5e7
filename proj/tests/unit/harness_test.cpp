#include <gtest/gtest.h>

#include <map>

#include "test_util.hpp"
#include "weyllab/error.hpp"
#include "weyllab/harness.hpp"
#include "weyllab/model_file.hpp"

namespace weyl {
namespace {

using namespace weyl::test;

TEST(Generator, IsDeterministic) {
  GenConfig cfg;
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(generateModel(cfg, i), generateModel(cfg, i));
  GenConfig other = cfg;
  other.seed = 43;
  std::size_t differ = 0;
  for (std::size_t i = 0; i < 50; ++i) differ += !(generateModel(cfg, i) == generateModel(other, i));
  EXPECT_GT(differ, 25u);
}

TEST(Generator, ModelsAreValidAndWithinBounds) {
  GenConfig cfg;
  cfg.seed = 3;
  for (std::size_t i = 0; i < 300; ++i) {
    OperatorModel m = generateModel(cfg, i);
    ASSERT_NO_THROW(validateModel(m)) << renderModel(m);
    EXPECT_GE(m.atoms.size(), 1u);
    EXPECT_LE(m.atoms.size(), cfg.maxAtoms);
  }
}

TEST(Generator, CoversEveryAtomKind) {
  GenConfig cfg;
  std::map<AtomKind, std::size_t> seen;
  for (std::size_t i = 0; i < 1000; ++i)
    for (const Atom& a : generateModel(cfg, i).atoms) ++seen[a.kind];
  for (AtomKind k : {AtomKind::Jordan, AtomKind::ScalarInf, AtomKind::DiagSeq, AtomKind::QShift, AtomKind::ShiftFwd,
                     AtomKind::ShiftAdj})
    EXPECT_GE(seen[k], 50u) << atomKindName(k);
}

TEST(Generator, ContainsTheQPlusZeroModel) {
  const OperatorModel want{{qshift(), scalarInf(z("0"))}, ""};
  GenConfig cfg;
  bool found = false;
  for (std::size_t i = 0; i < 100 && !found; ++i) {
    OperatorModel m = generateModel(cfg, i);
    found = m.atoms == want.atoms;
  }
  EXPECT_TRUE(found);
}

TEST(Generator, JordanOnlyModels) {
  GenConfig cfg;
  cfg.jordanOnly = true;
  for (std::size_t i = 0; i < 100; ++i)
    for (const Atom& a : generateModel(cfg, i).atoms) {
      EXPECT_EQ(a.kind, AtomKind::Jordan);
      EXPECT_GE(a.size, 1);
      EXPECT_LE(a.size, 4);
    }
}

TEST(Invariants, HoldOnCorpusSnapshots) {
  GenConfig cfg;
  for (std::size_t i = 0; i < 100; ++i) {
    OperatorModel m = generateModel(cfg, i);
    std::vector<std::string> failed = invariantFailures(snapshot(m));
    EXPECT_TRUE(failed.empty()) << renderModel(m) << (failed.empty() ? "" : failed.front());
  }
}

TEST(Invariants, DetectABrokenSnapshot) {
  SpectralSnapshot s = snapshot(OperatorModel{{shiftFwd(z("0"), q("1"))}, ""});
  s[SetId::SigmaA] = CellSet{};
  EXPECT_FALSE(invariantFailures(s).empty());
}

TEST(Corpus, EmptyRun) {
  GenConfig cfg;
  cfg.modelCount = 0;
  CorpusReport r = runCorpus(cfg);
  EXPECT_EQ(r.modelsRun, 0u);
  EXPECT_TRUE(r.violations.empty());
  ASSERT_EQ(r.stats.size(), 24u);
  for (const SvfStats& s : r.stats) EXPECT_EQ(s.partitionsSigma + s.partitionsSigmaA, 0u);
}

TEST(Corpus, StatsMatchDirectEvaluation) {
  GenConfig cfg;
  cfg.modelCount = 64;
  CorpusReport r = runCorpus(cfg);
  EXPECT_EQ(r.modelsRun, 64u);
  EXPECT_TRUE(r.violations.empty());
  std::vector<std::size_t> sigma(24), sigmaA(24);
  for (std::size_t i = 0; i < cfg.modelCount; ++i) {
    SpectralSnapshot s = snapshot(generateModel(cfg, i));
    for (std::size_t k = 0; k < 24; ++k) {
      PartitionStatus p = partitionStatus(svfCatalog()[k], s);
      sigma[k] += p.partitionsSigma;
      sigmaA[k] += p.partitionsSigmaA;
    }
  }
  for (std::size_t k = 0; k < 24; ++k) {
    EXPECT_EQ(r.stats[k].name, svfCatalog()[k].name);
    EXPECT_EQ(r.stats[k].partitionsSigma, sigma[k]);
    EXPECT_EQ(r.stats[k].partitionsSigmaA, sigmaA[k]);
  }
  for (const DistinguishingPair& p : r.distinguishing) EXPECT_GT(p.count, 0u);
}

TEST(Corpus, RepeatedRunsAgree) {
  GenConfig cfg;
  cfg.modelCount = 40;
  CorpusReport a = runCorpus(cfg), b = runCorpus(cfg);
  ASSERT_EQ(a.distinguishing.size(), b.distinguishing.size());
  for (std::size_t k = 0; k < a.distinguishing.size(); ++k) EXPECT_EQ(a.distinguishing[k].count, b.distinguishing[k].count);
}

TEST(Target, Parse) {
  SearchTarget t = parseTarget("Phi_W.sigma & !Phi_gW.sigma");
  ASSERT_EQ(t.clauses.size(), 2u);
  EXPECT_EQ(t.clauses[0].svf, "Phi_W");
  EXPECT_TRUE(t.clauses[0].expected);
  EXPECT_EQ(t.clauses[1].target, Target::Sigma);
  EXPECT_FALSE(t.clauses[1].expected);
  EXPECT_EQ(parseTarget(describe(t)).clauses.size(), 2u);
  EXPECT_EQ(parseTarget("Psi_aW.sigmaA").clauses[0].target, Target::SigmaA);
  for (const char* bad : {"", "Phi_W", "Phi_W.rho", "Phi_W.sigma &", "& Phi_W.sigma"}) {
    try {
      parseTarget(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SyntaxError) << bad;
    }
  }
  try {
    parseTarget("Phi_zz.sigma");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownSvf);
  }
}

TEST(Search, FindsTheQPlusZeroSeparation) {
  GenConfig cfg;
  std::optional<Counterexample> c = findCounterexample(parseTarget("Phi_W.sigma & !Phi_gW.sigma"), 100, cfg);
  ASSERT_TRUE(c.has_value());
  SpectralSnapshot s = snapshot(c->model);
  EXPECT_TRUE(partitionStatus(findSvf("Phi_W"), s).partitionsSigma);
  EXPECT_FALSE(partitionStatus(findSvf("Phi_gW"), s).partitionsSigma);
  // The reported model is the one the generator reproduces at that index.
  EXPECT_EQ(c->model.atoms, generateModel(cfg, c->index).atoms);
  // Earlier indices do not match.
  for (std::size_t i = 0; i < c->index; ++i)
    EXPECT_FALSE(matches(parseTarget("Phi_W.sigma & !Phi_gW.sigma"), snapshot(generateModel(cfg, i))));
  // Round trip through the model file format.
  EXPECT_EQ(parseModelFile(renderModel(c->model)), c->model);
}

TEST(Search, ImpossibleTargetHasNoMatch) {
  GenConfig cfg;
  // Psi_aW a-partitioning forces Phi_W to partition sigma.
  EXPECT_FALSE(findCounterexample(parseTarget("Psi_aW.sigmaA & !Phi_W.sigma"), 300, cfg).has_value());
  EXPECT_FALSE(findCounterexample(parseTarget("Phi_W.sigma"), 0, cfg).has_value());
}

}  // namespace
}  // namespace weyl
