#include <gtest/gtest.h>

#include <functional>

#include "test_util.hpp"
#include "weyllab/engine.hpp"
#include "weyllab/error.hpp"
#include "weyllab/harness.hpp"
#include "weyllab/oracle.hpp"

namespace weyl {
namespace {

using namespace weyl::test;

Errc errorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::EmptyModel;
}

OperatorModel model(std::vector<Atom> atoms) { return OperatorModel{std::move(atoms), ""}; }

TEST(ValidateModel, Examples) {
  EXPECT_NO_THROW(validateModel(model({jordan(z("0"), 2)})));
  EXPECT_EQ(errorOf([] { validateModel(model({shiftFwd(z("0"), q("1")), shiftFwd(z("1/4"), q("1"))})); }),
            Errc::OverlappingDisks);
  EXPECT_NO_THROW(validateModel(model({shiftFwd(z("0"), q("1")), shiftFwd(z("0"), q("1/2"))})));
  EXPECT_NO_THROW(validateModel(model({shiftFwd(z("0"), q("1")), shiftAdj(z("3"), q("1"))})));
  EXPECT_EQ(errorOf([] { validateModel(model({})); }), Errc::EmptyModel);
  EXPECT_EQ(errorOf([] { validateModel(model({diagSeq(z("0"), z("1")), diagSeq(z("0"), z("2"))})); }),
            Errc::SameLimitSequences);
  EXPECT_EQ(errorOf([] { validateModel(model({jordan(z("0"), -1)})); }), Errc::InvalidAtom);
}

TEST(Decompose, Examples) {
  EXPECT_EQ(normalize(decompose(model({jordan(z("0"), 2), jordan(z("1"), 1)}))), set({pt("0"), pt("1")}));

  std::vector<Cell> cells = decompose(model({shiftFwd(z("0"), q("1")), jordan(z("1/2"), 1)}));
  CellSet expected = set({pt("0"), pt("1/2"), annulus("0", "0", "1", {z("1/2")}), circle("0", "1")});
  EXPECT_EQ(cells.size(), 4u);
  EXPECT_EQ(normalize(cells), expected);

  cells = decompose(model({shiftFwd(z("0"), q("1")), shiftFwd(z("0"), q("1/2"))}));
  EXPECT_EQ(cells.size(), 5u);
  std::vector<Cell> want = {pt("0"), annulus("0", "0", "1/2"), circle("0", "1/2"), annulus("0", "1/2", "1"),
                            circle("0", "1")};
  for (const Cell& c : want) EXPECT_NE(std::find(cells.begin(), cells.end(), c), cells.end()) << describe(c);
}

TEST(Decompose, PiecesArePairwiseDisjoint) {
  GenConfig cfg;
  for (std::size_t i = 0; i < 60; ++i) {
    std::vector<Cell> cells = decompose(generateModel(cfg, i));
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b)
        EXPECT_TRUE(disjoint(normalize({cells[a]}), normalize({cells[b]}))) << describe(cells[a]) << " " << describe(cells[b]);
  }
}

TEST(Snapshot, JordanExamples) {
  SpectralSnapshot s = snapshot(model({jordan(z("0"), 2), jordan(z("0"), 3), jordan(z("1"), 1)}));
  CellSet both = set({pt("0"), pt("1")});
  EXPECT_EQ(s[SetId::Sigma], both);
  EXPECT_EQ(s[SetId::E0], both);
  EXPECT_EQ(s[SetId::Pi0], both);
  for (SetId id : {SetId::SigmaW, SetId::SigmaBW, SetId::SigmaB, SetId::SigmaD, SetId::SigmaLD, SetId::SigmaUB,
                   SetId::SigmaSFpm, SetId::SigmaSBFpm})
    EXPECT_TRUE(s[id].empty()) << setName(id);

  SpectralSnapshot single = snapshot(model({jordan(z("5"), 1)}));
  EXPECT_EQ(single[SetId::Sigma], set({pt("5")}));
  EXPECT_EQ(single[SetId::Pi0], set({pt("5")}));
}

TEST(Snapshot, JordanAscentAndDescent) {
  ModelAnalysis a(model({jordan(z("0"), 2), jordan(z("2"), 2)}));
  EXPECT_EQ(a.snapshot()[SetId::E0], set({pt("0"), pt("2")}));
  const Refinement& r = a.refinement();
  for (std::size_t p = 0; p < r.pieceCount(); ++p) {
    const ClassVector& c = a.pieceClasses(p);
    if (!c.inSpectrum) continue;
    EXPECT_EQ(c.ascent, ExtNat(2));
    EXPECT_EQ(c.descent, ExtNat(2));
  }
}

TEST(Snapshot, QPlusZero) {
  SpectralSnapshot s = snapshot(model({qshift(), scalarInf(z("0"))}));
  CellSet zero = set({pt("0")});
  for (SetId id : {SetId::Sigma, SetId::SigmaA, SetId::SigmaW, SetId::SigmaBW, SetId::E, SetId::Ea})
    EXPECT_EQ(s[id], zero) << setName(id);
  for (SetId id : {SetId::E0, SetId::Ea0, SetId::Pi, SetId::Pi0, SetId::PiA, SetId::PiA0})
    EXPECT_TRUE(s[id].empty()) << setName(id);
}

TEST(Snapshot, ForwardShift) {
  SpectralSnapshot s = snapshot(model({shiftFwd(z("0"), q("1"))}));
  CellSet disk = set({annulus("0", "0", "1"), pt("0"), circle("0", "1")});
  CellSet unitCircle = set({circle("0", "1")});
  EXPECT_EQ(s[SetId::Sigma], disk);
  for (SetId id : {SetId::SigmaA, SetId::SigmaSFpm, SetId::SigmaSBFpm, SetId::SigmaLD, SetId::SigmaUB})
    EXPECT_EQ(s[id], unitCircle) << setName(id);
  for (SetId id : {SetId::SigmaW, SetId::SigmaBW, SetId::SigmaD, SetId::SigmaB}) EXPECT_EQ(s[id], disk) << setName(id);
  for (SetId id : {SetId::E, SetId::E0, SetId::Ea, SetId::Ea0, SetId::Pi, SetId::Pi0, SetId::PiA, SetId::PiA0})
    EXPECT_TRUE(s[id].empty()) << setName(id);
  EXPECT_EQ(s.sigmaMinusSigmaA(), set({annulus("0", "0", "1"), pt("0")}));
}

// S ⊕ S*: Fredholm of index 0 inside the disk, with a kernel coming from S*.
TEST(Snapshot, ShiftPlusAdjoint) {
  SpectralSnapshot s = snapshot(model({shiftFwd(z("0"), q("1")), shiftAdj(z("0"), q("1"))}));
  CellSet disk = set({annulus("0", "0", "1"), pt("0"), circle("0", "1")});
  EXPECT_EQ(s[SetId::SigmaA], disk);
  EXPECT_EQ(s[SetId::SigmaW], set({circle("0", "1")}));
  EXPECT_EQ(s[SetId::SigmaSFpm], set({circle("0", "1")}));
  EXPECT_EQ(s[SetId::SigmaUB], disk);
}

// Eigenvalues of the diagonal part inside the shift disk are left poles:
// isolated in σ_a but not in σ.
TEST(Snapshot, DiagonalInsideShiftDisk) {
  SpectralSnapshot s = snapshot(model({diagSeq(z("0"), z("1")), shiftFwd(z("0"), q("1/2"))}));
  CellSet inner = set({seq("0", "1", 3)});
  EXPECT_TRUE(isSubset(inner, s[SetId::Ea0]));
  EXPECT_TRUE(isSubset(inner, s[SetId::PiA0]));
  EXPECT_TRUE(disjoint(inner, s[SetId::E]));
  EXPECT_EQ(s[SetId::E], set({pt("1")}));
  EXPECT_TRUE(member(s[SetId::SigmaA], z("1/2")));
  EXPECT_TRUE(member(s[SetId::SigmaW], z("1/3")));
  EXPECT_FALSE(member(s[SetId::SigmaSFpm], z("1/3")));
}

TEST(Snapshot, ZeroPlusShiftIsLeftDrazinAtTheCenter) {
  SpectralSnapshot s = snapshot(model({scalarInf(z("0")), shiftFwd(z("0"), q("1"))}));
  EXPECT_EQ(s[SetId::PiA], set({pt("0")}));
  EXPECT_TRUE(s[SetId::PiA0].empty());
  EXPECT_TRUE(member(s[SetId::SigmaSFpm], z("0")));
  EXPECT_FALSE(member(s[SetId::SigmaSBFpm], z("0")));
}

TEST(Oracle, RankOfKnownMatrices) {
  oracle::Matrix m = oracle::jordanSumMatrix(model({jordan(z("0"), 3)}));
  EXPECT_EQ(oracle::exactRank(m), 2u);
  EXPECT_EQ(oracle::powerRanks(m, z("0"), 4), (std::vector<std::size_t>{3, 2, 1, 0, 0}));
  EXPECT_EQ(oracle::powerRanks(m, z("1"), 2), (std::vector<std::size_t>{3, 3, 3}));
  EXPECT_EQ(errorOf([] { oracle::jordanSumMatrix(model({qshift()})); }), Errc::NotFiniteDimensional);
}

TEST(Oracle, MatchesSnapshotOnJordanModels) {
  GenConfig cfg;
  cfg.jordanOnly = true;
  cfg.seed = 3;
  for (std::size_t i = 0; i < 100; ++i) {
    OperatorModel m = generateModel(cfg, i);
    EXPECT_EQ(snapshot(m), oracleSnapshot(m)) << i;
  }
}

}  // namespace
}  // namespace weyl
