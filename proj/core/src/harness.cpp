#include "weyllab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <random>
#include <thread>

#include "weyllab/error.hpp"
#include "weyllab/model_file.hpp"

namespace weyl {

namespace {

// Shift disks are centered here with radius at most 2, so distinct centers
// never produce overlapping disks.
const std::array<ExactComplex, 5>& shiftCenters() {
  static const std::array<ExactComplex, 5> centers = {ExactComplex(0), ExactComplex(6), ExactComplex(-6),
                                                      ExactComplex(0, 6), ExactComplex(0, -6)};
  return centers;
}

class Generator {
 public:
  Generator(const GenConfig& cfg, std::size_t index) : cfg_(cfg) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t(index) >> 32)};
    rng_.seed(seq);
  }

  // std::uniform_int_distribution is implementation-defined; this keeps
  // corpora identical across standard libraries.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return x % n;
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(hi - lo + 1)); }

  Rational gridRational() { return makeRational(between(-cfg_.maxNumerator, cfg_.maxNumerator), between(1, cfg_.maxDenominator)); }

  ExactComplex gridPoint() {
    Rational re = gridRational();
    Rational im = below(2) ? Rational(0) : gridRational();
    return ExactComplex(re, im);
  }

  Rational radius() {
    std::int64_t den = between(1, std::min<std::int64_t>(cfg_.maxDenominator, 4));
    return makeRational(between(1, 2 * den), den);
  }

  // Points that collide with the geometry already placed: centers, circle
  // points, sequence members and earlier points.
  ExactComplex interestingPoint() {
    switch (below(6)) {
      case 0:
        if (!disks_.empty()) return disks_[below(disks_.size())].first;
        break;
      case 1:
        if (!disks_.empty()) {
          const auto& [c, r] = disks_[below(disks_.size())];
          const ExactComplex offsets[] = {ExactComplex(r), ExactComplex(-r), ExactComplex(0, r), ExactComplex(Rational(r / 2))};
          return c + offsets[below(4)];
        }
        break;
      case 2:
        if (!seqs_.empty()) {
          const auto& [c, r] = seqs_[below(seqs_.size())];
          return c + r / ExactComplex(Rational(between(1, 4)));
        }
        break;
      case 3:
        if (!points_.empty()) return points_[below(points_.size())];
        break;
      case 4: return ExactComplex(0);
      default: break;
    }
    return gridPoint();
  }

  Atom atomOf(AtomKind kind) {
    Atom a;
    switch (kind) {
      case AtomKind::Jordan: a = jordan(interestingPoint(), between(1, 3)); break;
      case AtomKind::ScalarInf: a = scalarInf(interestingPoint()); break;
      case AtomKind::QShift: a = qshift(); break;
      case AtomKind::DiagSeq: {
        ExactComplex c = interestingPoint();
        auto same = std::find_if(seqs_.begin(), seqs_.end(), [&](const auto& s) { return s.first == c; });
        ExactComplex r;
        if (same != seqs_.end()) {
          r = same->second;
        } else {
          do r = gridPoint();
          while (r.isZero());
          seqs_.emplace_back(c, r);
        }
        a = diagSeq(c, r);
        break;
      }
      case AtomKind::ShiftFwd:
      case AtomKind::ShiftAdj: {
        ExactComplex c = shiftCenters()[below(shiftCenters().size())];
        Rational rho = radius();
        disks_.emplace_back(c, rho);
        a = kind == AtomKind::ShiftFwd ? shiftFwd(c, rho) : shiftAdj(c, rho);
        break;
      }
    }
    points_.push_back(a.point);
    return a;
  }

  Atom jordanAtom() {
    static const std::array<ExactComplex, 6> grid = {ExactComplex(0), ExactComplex(1), ExactComplex(-1),
                                                     ExactComplex(Rational(1, 2)), ExactComplex(0, 1),
                                                     ExactComplex(1, 1)};
    ExactComplex p = below(4) ? grid[below(grid.size())] : gridPoint();
    return jordan(p, between(1, 4));
  }

 private:
  const GenConfig& cfg_;
  std::mt19937_64 rng_;
  std::vector<std::pair<ExactComplex, Rational>> disks_;
  std::vector<std::pair<ExactComplex, ExactComplex>> seqs_;
  std::vector<ExactComplex> points_;
};

struct Subset {
  const char* name;
  SetId sub;
  SetId super;
};

using S = SetId;
const Subset kInclusions[] = {
    {"sigmaA<=sigma", S::SigmaA, S::Sigma},      {"sigmaB<=sigma", S::SigmaB, S::Sigma},
    {"sigmaW<=sigmaB", S::SigmaW, S::SigmaB},    {"sigmaBW<=sigmaW", S::SigmaBW, S::SigmaW},
    {"sigmaBW<=sigmaD", S::SigmaBW, S::SigmaD},  {"sigmaD<=sigmaB", S::SigmaD, S::SigmaB},
    {"sigmaLD<=sigmaD", S::SigmaLD, S::SigmaD},  {"sigmaLD<=sigmaUB", S::SigmaLD, S::SigmaUB},
    {"sigmaLD<=sigmaA", S::SigmaLD, S::SigmaA},  {"sigmaUB<=sigmaB", S::SigmaUB, S::SigmaB},
    {"sigmaUB<=sigmaA", S::SigmaUB, S::SigmaA},  {"sigmaSF<=sigmaUB", S::SigmaSFpm, S::SigmaUB},
    {"sigmaSF<=sigmaW", S::SigmaSFpm, S::SigmaW}, {"sigmaSF<=sigmaA", S::SigmaSFpm, S::SigmaA},
    {"sigmaSBF<=sigmaSF", S::SigmaSBFpm, S::SigmaSFpm}, {"sigmaSBF<=sigmaBW", S::SigmaSBFpm, S::SigmaBW},
    {"sigmaSBF<=sigmaLD", S::SigmaSBFpm, S::SigmaLD},
    {"Pi0<=Pi", S::Pi0, S::Pi},                  {"Pi0<=E0", S::Pi0, S::E0},
    {"Pi<=E", S::Pi, S::E},                      {"E0<=E", S::E0, S::E},
    {"E<=sigma", S::E, S::Sigma},                {"E<=Ea", S::E, S::Ea},
    {"E0<=Ea0", S::E0, S::Ea0},                  {"Ea0<=Ea", S::Ea0, S::Ea},
    {"Ea<=sigmaA", S::Ea, S::SigmaA},            {"PiA0<=PiA", S::PiA0, S::PiA},
    {"PiA0<=Ea0", S::PiA0, S::Ea0},              {"PiA<=Ea", S::PiA, S::Ea},
    {"Pi<=PiA", S::Pi, S::PiA},                  {"Pi0<=PiA0", S::Pi0, S::PiA0},
};

struct ModelOutcome {
  std::vector<CorpusViolation> violations;
  std::vector<PartitionStatus> status;
};

ModelOutcome evaluateModel(const OperatorModel& m, std::size_t index) {
  ModelOutcome out;
  auto violation = [&](std::string theorem, std::string pair) {
    out.violations.push_back({index, renderModel(m), std::move(theorem), std::move(pair)});
  };
  try {
    ModelAnalysis analysis(m);
    const SpectralSnapshot& s = analysis.snapshot();
    for (const TheoremRow& row : verifyAll(analysis).rows)
      if (row.violation) violation(row.theorem, row.pair);
    for (const std::string& name : invariantFailures(s)) violation(name, "");
    for (const Svf& f : svfCatalog()) out.status.push_back(partitionStatus(f, s));
  } catch (const std::exception& e) {
    violation(std::string("exception: ") + e.what(), "");
    out.status.assign(svfCatalog().size(), PartitionStatus{});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

OperatorModel generateModel(const GenConfig& cfg, std::size_t index) {
  Generator gen(cfg, index);
  OperatorModel m;
  m.name = "gen-" + std::to_string(cfg.seed) + "-" + std::to_string(index);
  const std::size_t count = 1 + gen.below(std::max<std::size_t>(cfg.maxAtoms, 1));
  if (cfg.jordanOnly) {
    for (std::size_t k = 0; k < count; ++k) m.atoms.push_back(gen.jordanAtom());
    return m;
  }
  if (index % 16 == 5) {
    m.atoms = {qshift(), scalarInf(ExactComplex(0))};
    return m;
  }
  m.atoms.push_back(gen.atomOf(static_cast<AtomKind>(index % 6)));
  for (std::size_t k = 1; k < count; ++k) m.atoms.push_back(gen.atomOf(static_cast<AtomKind>(gen.below(6))));
  return m;
}

std::vector<std::string> invariantFailures(const SpectralSnapshot& s) {
  std::vector<std::string> out;
  for (const Subset& inc : kInclusions)
    if (!isSubset(s[inc.sub], s[inc.super])) out.emplace_back(inc.name);
  if (!equals(s[S::Pi], difference(s[S::Sigma], s[S::SigmaD]))) out.emplace_back("Pi=sigma\\sigmaD");
  if (!equals(s[S::Pi0], difference(s[S::Sigma], s[S::SigmaB]))) out.emplace_back("Pi0=sigma\\sigmaB");
  if (!equals(s[S::PiA], difference(s[S::SigmaA], s[S::SigmaLD]))) out.emplace_back("PiA=sigmaA\\sigmaLD");
  if (!equals(s[S::PiA0], difference(s[S::SigmaA], s[S::SigmaUB]))) out.emplace_back("PiA0=sigmaA\\sigmaUB");
  if (!isSubset(difference(s[S::Sigma], topology(s[S::Sigma]).interior), s[S::SigmaA]))
    out.emplace_back("boundary(sigma)<=sigmaA");
  return out;
}

CorpusReport runCorpus(const GenConfig& cfg) {
  std::vector<ModelOutcome> outcomes(cfg.modelCount);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.modelCount; i = next++) outcomes[i] = evaluateModel(generateModel(cfg, i), i);
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, cfg.modelCount); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  CorpusReport report;
  report.modelsRun = cfg.modelCount;
  const auto& catalog = svfCatalog();
  for (const Svf& f : catalog) report.stats.push_back({std::string(f.name), 0, 0});
  for (const ModelOutcome& o : outcomes) {
    report.violations.insert(report.violations.end(), o.violations.begin(), o.violations.end());
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      report.stats[k].partitionsSigma += o.status[k].partitionsSigma;
      report.stats[k].partitionsSigmaA += o.status[k].partitionsSigmaA;
    }
  }
  for (Target t : {Target::Sigma, Target::SigmaA}) {
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      for (std::size_t j = i + 1; j < catalog.size(); ++j) {
        std::size_t count = 0;
        for (const ModelOutcome& o : outcomes) {
          auto pick = [&](const PartitionStatus& p) { return t == Target::Sigma ? p.partitionsSigma : p.partitionsSigmaA; };
          count += pick(o.status[i]) != pick(o.status[j]);
        }
        if (count) report.distinguishing.push_back({std::string(catalog[i].name), std::string(catalog[j].name), t, count});
      }
    }
  }
  return report;
}

SearchTarget parseTarget(std::string_view text) {
  SearchTarget out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t amp = text.find('&', pos);
    if (amp == std::string_view::npos) amp = text.size();
    std::string_view clause = trim(text.substr(pos, amp - pos));
    pos = amp + 1;
    TargetClause c;
    if (!clause.empty() && clause.front() == '!') {
      c.expected = false;
      clause = trim(clause.substr(1));
    }
    std::size_t dot = clause.rfind('.');
    if (dot == std::string_view::npos)
      throw Error(Errc::SyntaxError, "target clause '" + std::string(clause) + "' must look like Phi_W.sigma");
    std::string_view kind = clause.substr(dot + 1);
    if (kind == "sigma")
      c.target = Target::Sigma;
    else if (kind == "sigmaA")
      c.target = Target::SigmaA;
    else
      throw Error(Errc::SyntaxError, "unknown partition kind '" + std::string(kind) + "'");
    c.svf = std::string(findSvf(clause.substr(0, dot)).name);
    out.clauses.push_back(std::move(c));
  }
  return out;
}

std::string describe(const SearchTarget& t) {
  std::string out;
  for (const TargetClause& c : t.clauses) {
    if (!out.empty()) out += " & ";
    out += (c.expected ? "" : "!") + c.svf + (c.target == Target::Sigma ? ".sigma" : ".sigmaA");
  }
  return out;
}

bool matches(const SearchTarget& t, const SpectralSnapshot& s) {
  for (const TargetClause& c : t.clauses) {
    PartitionStatus p = partitionStatus(findSvf(c.svf), s);
    bool value = c.target == Target::Sigma ? p.partitionsSigma : p.partitionsSigmaA;
    if (value != c.expected) return false;
  }
  return true;
}

std::optional<Counterexample> findCounterexample(const SearchTarget& target, std::size_t budget,
                                                 const GenConfig& cfg) {
  for (std::size_t i = 0; i < budget; ++i) {
    OperatorModel m = generateModel(cfg, i);
    if (matches(target, snapshot(m))) return Counterexample{i, std::move(m)};
  }
  return std::nullopt;
}

}  // namespace weyl
