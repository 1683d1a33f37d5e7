#include "weyllab/weylcat.hpp"

#include <algorithm>

#include "weyllab/error.hpp"

namespace weyl {

namespace {

// Set algebras the theorem checks are written against: piece masks over a
// model refinement, and exact cell sets over a bare snapshot.
struct MaskAlgebra {
  using Set = PieceMask;
  const ModelAnalysis& analysis;
  PieceMask gapMask;

  explicit MaskAlgebra(const ModelAnalysis& a) : analysis(a), gapMask(a.sigmaMinusSigmaAMask()) {}
  const Set& get(SetId id) const { return analysis.mask(id); }
  const Set& gap() const { return gapMask; }
  static Set unite(const Set& a, const Set& b) { return a | b; }
  static Set inter(const Set& a, const Set& b) { return a & b; }
  static Set minus(const Set& a, const Set& b) { return a - b; }
  static bool eq(const Set& a, const Set& b) { return a == b; }
  static bool empty(const Set& a) { return a.none(); }
  static bool subset(const Set& a, const Set& b) { return a.is_subset_of(b); }
  std::vector<Cell> cells(const Set& a) const { return analysis.assemble(a).cells(); }
};

struct CellAlgebra {
  using Set = CellSet;
  const SpectralSnapshot& snap;
  CellSet gapSet;

  explicit CellAlgebra(const SpectralSnapshot& s) : snap(s), gapSet(s.sigmaMinusSigmaA()) {}
  const Set& get(SetId id) const { return snap[id]; }
  const Set& gap() const { return gapSet; }
  static Set unite(const Set& a, const Set& b) { return weyl::unite(a, b); }
  static Set inter(const Set& a, const Set& b) { return weyl::intersect(a, b); }
  static Set minus(const Set& a, const Set& b) { return weyl::difference(a, b); }
  static bool eq(const Set& a, const Set& b) { return equals(a, b); }
  static bool empty(const Set& a) { return a.empty(); }
  static bool subset(const Set& a, const Set& b) { return isSubset(a, b); }
  std::vector<Cell> cells(const Set& a) const { return a.cells(); }
};

template <class Alg>
struct Parts {
  const typename Alg::Set& one;
  const typename Alg::Set& two;
};

template <class Alg>
Parts<Alg> partsOf(const Alg& alg, const Svf& f) {
  return {alg.get(setOf(f.sigmaPart)), alg.get(setOf(f.pointPart))};
}

template <class Alg>
const typename Alg::Set& targetSet(const Alg& alg, Target t) {
  return alg.get(t == Target::Sigma ? SetId::Sigma : SetId::SigmaA);
}

template <class Alg>
bool partitions(const Alg& alg, const Svf& f, Target t) {
  auto p = partsOf(alg, f);
  return Alg::empty(Alg::inter(p.one, p.two)) && Alg::eq(Alg::unite(p.one, p.two), targetSet(alg, t));
}

// Points where `f` fails to partition the target.
template <class Alg>
typename Alg::Set partitionDefect(const Alg& alg, const Svf& f, Target t) {
  auto p = partsOf(alg, f);
  const auto& target = targetSet(alg, t);
  auto cover = Alg::unite(p.one, p.two);
  return Alg::unite(Alg::unite(Alg::minus(cover, target), Alg::minus(target, cover)), Alg::inter(p.one, p.two));
}

template <class Alg>
bool ordered(const Alg& alg, Order rel, const Svf& psi, const Svf& phi) {
  auto s = partsOf(alg, psi);
  auto f = partsOf(alg, phi);
  if (rel == Order::Leq) return Alg::subset(f.one, s.one) && Alg::subset(s.two, f.two);
  return Alg::subset(s.one, f.one) && Alg::subset(s.two, f.two);
}

template <class Alg>
struct ConditionParts {
  typename Alg::Set lhs;
  typename Alg::Set rhs;
  typename Alg::Set overlap;  // must be empty for the ⊔
};

template <class Alg>
ConditionParts<Alg> conditionParts(const Alg& alg, Condition kind, const Svf& psi, const Svf& phi) {
  auto s = partsOf(alg, psi);
  auto f = partsOf(alg, phi);
  const auto& gap = alg.gap();
  switch (kind) {
    case Condition::T21:
      return {Alg::minus(s.one, f.one), Alg::minus(f.two, s.two), Alg::minus(gap, gap)};
    case Condition::T41: {
      auto d1 = Alg::minus(s.one, f.one);
      return {Alg::minus(f.two, s.two), Alg::unite(d1, gap), Alg::inter(d1, gap)};
    }
    case Condition::T42: {
      auto d2 = Alg::minus(f.two, s.two);
      return {Alg::minus(s.one, f.one), Alg::unite(d2, gap), Alg::inter(d2, gap)};
    }
    case Condition::T45: {
      auto d1 = Alg::minus(f.one, s.one), d2 = Alg::minus(f.two, s.two);
      return {Alg::unite(d1, d2), gap, Alg::inter(d1, d2)};
    }
  }
  throw Error(Errc::UnknownTheorem, "unknown condition");
}

template <class Alg>
bool conditionHolds(const ConditionParts<Alg>& c) {
  return Alg::empty(c.overlap) && Alg::eq(c.lhs, c.rhs);
}

template <class Alg>
typename Alg::Set conditionDefect(const ConditionParts<Alg>& c) {
  return Alg::unite(Alg::unite(Alg::minus(c.lhs, c.rhs), Alg::minus(c.rhs, c.lhs)), c.overlap);
}

template <class Alg>
bool condition(const Alg& alg, Condition kind, const Svf& psi, const Svf& phi) {
  return conditionHolds(conditionParts(alg, kind, psi, phi));
}

std::string pairName(const Svf& psi, const Svf& phi) {
  return "Psi=" + std::string(psi.name) + ",Phi=" + std::string(phi.name);
}

template <class Alg>
void theoremRows(const Alg& alg, const VerifyOptions& opts, TheoremReport& report) {
  const auto& catalog = svfCatalog();
  for (const TheoremShape& shape : theoremCatalog()) {
    for (const Svf& psi : catalog) {
      for (const Svf& phi : catalog) {
        if (psi == phi || !staticOrder(shape.order, psi, phi)) continue;
        const Svf& hyp = shape.hypothesisRole == Role::Phi ? phi : psi;
        const Svf& concl = shape.conclusionRole == Role::Phi ? phi : psi;
        TheoremRow row;
        row.theorem = std::string(shape.name);
        row.pair = pairName(psi, phi);
        bool orderHolds = ordered(alg, shape.order, psi, phi);
        row.hypothesesMet = orderHolds && partitions(alg, hyp, shape.hypothesisTarget);
        if (!orderHolds) {
          // The relation is universal, so this indicts the snapshot.
          row.violation = true;
          row.note = "catalog order relation fails on this model";
          report.rows.push_back(std::move(row));
          continue;
        }
        if (!row.hypothesesMet && !opts.includeUnmetRows) continue;
        auto parts = conditionParts(alg, shape.condition, psi, phi);
        row.conditionHolds = conditionHolds(parts);
        row.conclusionHolds = partitions(alg, concl, shape.conclusionTarget);
        row.violation = row.hypothesesMet && row.conditionHolds != row.conclusionHolds;
        if (row.violation) {
          auto defect = Alg::unite(conditionDefect(parts), partitionDefect(alg, concl, shape.conclusionTarget));
          row.witnesses = alg.cells(defect);
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
}

template <class Alg>
void registryRows(const Alg& alg, TheoremReport& report) {
  auto sv = [](const char* name) -> const Svf& { return findSvf(name); };
  auto add = [&](std::string id, std::string pair, bool cond, bool concl, bool equivalence, std::string note = {}) {
    TheoremRow row;
    row.theorem = std::move(id);
    row.pair = std::move(pair);
    row.hypothesesMet = true;
    row.conditionHolds = cond;
    row.conclusionHolds = concl;
    row.violation = equivalence ? cond != concl : cond && !concl;
    row.note = std::move(note);
    report.rows.push_back(std::move(row));
  };
  auto part = [&](const char* name) { return partitions(alg, sv(name), Target::Sigma); };
  auto apart = [&](const char* name) { return partitions(alg, sv(name), Target::SigmaA); };

  add("Phi_gB<=>Phi_B", "Phi_gB,Phi_B", part("Phi_gB"), part("Phi_B"), true);
  add("Psi_gaB<=>Psi_aB", "Psi_gaB,Psi_aB", apart("Psi_gaB"), apart("Psi_aB"), true);
  add("Phi_gW=>Phi_W", "Phi_gW,Phi_W", part("Phi_gW"), part("Phi_W"), false);
  add("Psi_gaW=>Psi_aW", "Psi_gaW,Psi_aW", apart("Psi_gaW"), apart("Psi_aW"), false);
  add("Psi_gaW=>Psi_gaB", "Psi_gaW,Psi_gaB", apart("Psi_gaW"), apart("Psi_gaB"), false);
  add("Phi_gaw=>Phi_gab", "Phi_gaw,Phi_gab", part("Phi_gaw"), part("Phi_gab"), false);
  add("Phi_W=>Phi_B", "Phi_W,Phi_B", part("Phi_W"), part("Phi_B"), false);
  add("Psi_gw=>Psi_gb", "Psi_gw,Psi_gb", apart("Psi_gw"), apart("Psi_gb"), false);
  add("Psi_aW=>Phi_W", "Psi_aW,Phi_W", apart("Psi_aW"), part("Phi_W"), false);
  add("Psi_w=>Phi_B", "Psi_w,Phi_B", apart("Psi_w"), part("Phi_B"), false);

  {
    bool cond = condition(alg, Condition::T42, sv("Phi_W"), sv("Psi_aW"));
    add("Psi_aW<=>(Phi_W and T42)", "Psi=Phi_W,Phi=Psi_aW", apart("Psi_aW"), part("Phi_W") && cond, true);
  }
  {
    const Svf &psi = sv("Phi_B"), &phi = sv("Psi_w");
    auto parts = conditionParts(alg, Condition::T42, psi, phi);
    bool disjointForm = conditionHolds(parts);
    bool unionForm = Alg::eq(parts.lhs, parts.rhs);
    add("Psi_w<=>(Phi_B and T42)", "Psi=Phi_B,Phi=Psi_w", apart("Psi_w"), part("Phi_B") && disjointForm, true,
        disjointForm == unionForm ? "union and disjoint-union forms agree"
                                  : "union and disjoint-union forms differ on this model");
  }
  {
    bool eq = Alg::eq(alg.get(SetId::SigmaBW), alg.get(SetId::SigmaD)) &&
              Alg::eq(alg.get(SetId::SigmaW), alg.get(SetId::SigmaB));
    add("Phi_gB=>(sigmaBW=sigmaD and sigmaW=sigmaB)", "Phi_gB", part("Phi_gB"), eq, false);
  }
  {
    bool eq = Alg::eq(alg.get(SetId::SigmaSBFpm), alg.get(SetId::SigmaLD)) &&
              Alg::eq(alg.get(SetId::SigmaSFpm), alg.get(SetId::SigmaUB));
    add("Psi_gaB=>(sigmaSBFpm=sigmaLD and sigmaSFpm=sigmaUB)", "Psi_gaB", apart("Psi_gaB"), eq, false);
  }
  {
    // For Psi << Phi with Psi a-partitioning and Phi partitioning, Phi \ Psi
    // partitions sigma \ sigma_a.
    std::size_t pairs = 0;
    std::string failing;
    std::vector<Cell> witnesses;
    for (const Svf& psi : svfCatalog()) {
      for (const Svf& phi : svfCatalog()) {
        if (psi == phi || !staticOrder(Order::Ll, psi, phi)) continue;
        if (!partitions(alg, psi, Target::SigmaA) || !partitions(alg, phi, Target::Sigma)) continue;
        ++pairs;
        auto parts = conditionParts(alg, Condition::T45, psi, phi);
        if (!conditionHolds(parts) && failing.empty()) {
          failing = pairName(psi, phi);
          witnesses = alg.cells(conditionDefect(parts));
        }
      }
    }
    add("Phi\\Psi partitions sigma\\sigmaA", failing.empty() ? "all << pairs" : failing, pairs > 0, failing.empty(),
        false, std::to_string(pairs) + " pairs with both partitions");
    report.rows.back().witnesses = std::move(witnesses);
  }
}

template <class Alg>
TheoremReport verifyWith(const Alg& alg, const VerifyOptions& opts) {
  TheoremReport report;
  theoremRows(alg, opts, report);
  registryRows(alg, report);
  return report;
}

}  // namespace

SetId setOf(SigmaPart p) {
  switch (p) {
    case SigmaPart::W: return SetId::SigmaW;
    case SigmaPart::BW: return SetId::SigmaBW;
    case SigmaPart::SFpm: return SetId::SigmaSFpm;
    case SigmaPart::SBFpm: return SetId::SigmaSBFpm;
  }
  return SetId::Sigma;
}

SetId setOf(PointPart p) {
  switch (p) {
    case PointPart::E: return SetId::E;
    case PointPart::E0: return SetId::E0;
    case PointPart::Ea: return SetId::Ea;
    case PointPart::Ea0: return SetId::Ea0;
    case PointPart::Pi: return SetId::Pi;
    case PointPart::Pi0: return SetId::Pi0;
    case PointPart::PiA: return SetId::PiA;
    case PointPart::PiA0: return SetId::PiA0;
  }
  return SetId::E;
}

const std::vector<Svf>& svfCatalog() {
  using S = SigmaPart;
  using P = PointPart;
  static const std::vector<Svf> catalog = {
      {S::W, P::E0, "Phi_W"},        {S::W, P::Pi0, "Phi_B"},       {S::BW, P::E, "Phi_gW"},
      {S::BW, P::Pi, "Phi_gB"},      {S::BW, P::E0, "Phi_Bw"},      {S::BW, P::Pi0, "Phi_Bb"},
      {S::W, P::Ea0, "Phi_aw"},      {S::W, P::PiA0, "Phi_ab"},     {S::BW, P::Ea, "Phi_gaw"},
      {S::BW, P::PiA, "Phi_gab"},    {S::BW, P::Ea0, "Phi_Baw"},    {S::BW, P::PiA0, "Phi_Bab"},
      {S::SFpm, P::Ea0, "Psi_aW"},   {S::SFpm, P::PiA0, "Psi_aB"},  {S::SBFpm, P::Ea, "Psi_gaW"},
      {S::SBFpm, P::PiA, "Psi_gaB"}, {S::SFpm, P::E0, "Psi_w"},     {S::SFpm, P::Pi0, "Psi_b"},
      {S::SBFpm, P::E, "Psi_gw"},    {S::SBFpm, P::Pi, "Psi_gb"},   {S::SBFpm, P::E0, "Psi_SBw"},
      {S::SBFpm, P::Pi0, "Psi_SBb"}, {S::SBFpm, P::Ea0, "Psi_SBaw"}, {S::SBFpm, P::PiA0, "Psi_SBab"},
  };
  return catalog;
}

const Svf& findSvf(std::string_view name) {
  static const std::vector<std::pair<std::string_view, std::string_view>> aliases = {
      {"Phi_BW", "Phi_gW"}, {"Phi_D", "Phi_gB"}, {"Phi_aW", "Psi_aW"}, {"Phi_gaW", "Psi_gaW"}};
  for (const auto& [alias, target] : aliases)
    if (name == alias) name = target;
  for (const Svf& f : svfCatalog())
    if (f.name == name) return f;
  throw Error(Errc::UnknownSvf, "unknown spectral valued function '" + std::string(name) + "'");
}

SvfValue evaluate(const Svf& f, const SpectralSnapshot& s) { return {s[setOf(f.sigmaPart)], s[setOf(f.pointPart)]}; }

PartitionStatus partitionStatus(const Svf& f, const SpectralSnapshot& s) {
  CellAlgebra alg(s);
  return {partitions(alg, f, Target::Sigma), partitions(alg, f, Target::SigmaA)};
}

bool orderCheck(Order rel, const Svf& psi, const Svf& phi, const SpectralSnapshot& s) {
  return ordered(CellAlgebra(s), rel, psi, phi);
}

bool sigmaPartIncluded(SigmaPart a, SigmaPart b) {
  if (a == b) return true;
  // SBF+- ⊆ SF+- ⊆ W and SBF+- ⊆ BW ⊆ W.
  switch (a) {
    case SigmaPart::SBFpm: return true;
    case SigmaPart::SFpm: return b == SigmaPart::W;
    case SigmaPart::BW: return b == SigmaPart::W;
    case SigmaPart::W: return false;
  }
  return false;
}

bool pointPartIncluded(PointPart a, PointPart b) {
  using P = PointPart;
  static const std::array<std::array<bool, 8>, 8> closure = [] {
    std::array<std::array<bool, 8>, 8> r{};
    auto i = [](P p) { return static_cast<std::size_t>(p); };
    const std::pair<P, P> base[] = {{P::Pi0, P::Pi},   {P::Pi0, P::E0},   {P::Pi, P::E},     {P::E0, P::E},
                                    {P::PiA0, P::PiA}, {P::PiA0, P::Ea0}, {P::PiA, P::Ea},   {P::Ea0, P::Ea},
                                    {P::E, P::Ea},     {P::E0, P::Ea0},   {P::Pi, P::PiA},   {P::Pi0, P::PiA0}};
    for (std::size_t k = 0; k < 8; ++k) r[k][k] = true;
    for (const auto& [x, y] : base) r[i(x)][i(y)] = true;
    for (std::size_t k = 0; k < 8; ++k)
      for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y)
          if (r[x][k] && r[k][y]) r[x][y] = true;
    return r;
  }();
  return closure[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

bool staticOrder(Order rel, const Svf& psi, const Svf& phi) {
  if (rel == Order::Leq)
    return sigmaPartIncluded(phi.sigmaPart, psi.sigmaPart) && pointPartIncluded(psi.pointPart, phi.pointPart);
  return sigmaPartIncluded(psi.sigmaPart, phi.sigmaPart) && pointPartIncluded(psi.pointPart, phi.pointPart);
}

bool differenceCondition(Condition kind, const Svf& psi, const Svf& phi, const SpectralSnapshot& s) {
  return condition(CellAlgebra(s), kind, psi, phi);
}

const std::array<TheoremShape, 10>& theoremCatalog() {
  using R = Role;
  using T = Target;
  using C = Condition;
  static const std::array<TheoremShape, 10> shapes = {{
      {TheoremId::T21, "T21", Order::Leq, R::Phi, T::Sigma, R::Psi, T::Sigma, C::T21},
      {TheoremId::T22, "T22", Order::Leq, R::Psi, T::Sigma, R::Phi, T::Sigma, C::T21},
      {TheoremId::T31, "T31", Order::Leq, R::Phi, T::SigmaA, R::Psi, T::SigmaA, C::T21},
      {TheoremId::T32, "T32", Order::Leq, R::Psi, T::SigmaA, R::Phi, T::SigmaA, C::T21},
      {TheoremId::T41, "T41", Order::Leq, R::Phi, T::Sigma, R::Psi, T::SigmaA, C::T41},
      {TheoremId::T42, "T42", Order::Leq, R::Phi, T::SigmaA, R::Psi, T::Sigma, C::T42},
      {TheoremId::COR41, "COR41", Order::Leq, R::Psi, T::SigmaA, R::Phi, T::Sigma, C::T41},
      {TheoremId::COR42, "COR42", Order::Leq, R::Psi, T::Sigma, R::Phi, T::SigmaA, C::T42},
      {TheoremId::T45, "T45", Order::Ll, R::Phi, T::Sigma, R::Psi, T::SigmaA, C::T45},
      {TheoremId::T46, "T46", Order::Ll, R::Psi, T::SigmaA, R::Phi, T::Sigma, C::T45},
  }};
  return shapes;
}

const TheoremShape& theoremShape(TheoremId id) {
  const auto k = static_cast<std::size_t>(id);
  if (k >= theoremCatalog().size()) throw Error(Errc::UnknownTheorem, "theorem id out of range");
  return theoremCatalog()[k];
}

TheoremId parseTheoremId(std::string_view name) {
  for (const TheoremShape& s : theoremCatalog())
    if (s.name == name) return s.id;
  throw Error(Errc::UnknownTheorem, "unknown theorem id '" + std::string(name) + "'");
}

bool TheoremReport::hasViolation() const { return violationCount() > 0; }

std::size_t TheoremReport::violationCount() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.violation; }));
}

TheoremReport verifyAll(const ModelAnalysis& a, const VerifyOptions& opts) { return verifyWith(MaskAlgebra(a), opts); }

TheoremReport verifyAll(const OperatorModel& m, const VerifyOptions& opts) { return verifyAll(ModelAnalysis(m), opts); }

TheoremReport verifyAllExact(const SpectralSnapshot& s, const VerifyOptions& opts) {
  return verifyWith(CellAlgebra(s), opts);
}

}  // namespace weyl
