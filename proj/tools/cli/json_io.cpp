#include "json_io.hpp"

#include "weyllab/error.hpp"

namespace weyl::json {

namespace {

json rationalJson(const Rational& q) { return toString(q); }

json pointList(const std::vector<ExactComplex>& points) {
  json out = json::array();
  for (const ExactComplex& z : points) out.push_back(toJson(z));
  return out;
}

json seqFields(const SequenceTail& s) {
  return {{"kind", "seq"}, {"c", toJson(s.limit)}, {"r", toJson(s.rate)}, {"n0", s.start}, {"excl", s.excluded}};
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::SyntaxError, "cell JSON: " + what); }

Rational rationalFrom(const json& j) {
  if (!j.is_string()) bad("expected a rational string");
  return parseRational(j.get<std::string>());
}

ExactComplex complexFrom(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected [re, im]");
  return ExactComplex(rationalFrom(j[0]), rationalFrom(j[1]));
}

SequenceTail seqFrom(const json& j) {
  SequenceTail s;
  s.limit = complexFrom(j.at("c"));
  s.rate = complexFrom(j.at("r"));
  s.start = j.at("n0").get<std::int64_t>();
  s.excluded = j.at("excl").get<std::vector<std::int64_t>>();
  return s;
}

std::vector<ExactComplex> pointsFrom(const json& j) {
  std::vector<ExactComplex> out;
  for (const json& z : j) out.push_back(complexFrom(z));
  return out;
}

}  // namespace

json toJson(const ExactComplex& z) { return json::array({toString(z.re), toString(z.im)}); }

json toJson(const Cell& cell) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          return {{"kind", "point"}, {"re", toString(c.p.re)}, {"im", toString(c.p.im)}};
        } else if constexpr (std::is_same_v<T, SequenceTail>) {
          return seqFields(c);
        } else if constexpr (std::is_same_v<T, Circle>) {
          return {{"kind", "circle"}, {"a", toJson(c.center)}, {"rho", rationalJson(c.radius)}, {"excl", pointList(c.excluded)}};
        } else {
          json seqs = json::array();
          for (const SequenceTail& s : c.excludedSeqs) seqs.push_back(seqFields(s));
          return {{"kind", "annulus"},        {"a", toJson(c.center)},
                  {"inner", rationalJson(c.inner)}, {"outer", rationalJson(c.outer)},
                  {"exclPoints", pointList(c.excludedPoints)}, {"exclSeqs", seqs}};
        }
      },
      cell);
}

json toJson(const CellSet& s) {
  json out = json::array();
  for (const Cell& c : s.cells()) out.push_back(toJson(c));
  return out;
}

json toJson(const SpectralSnapshot& s) {
  json out = json::object();
  for (SetId id : kAllSets) out[std::string(setName(id))] = toJson(s[id]);
  return out;
}

json toJson(const TheoremReport& r) {
  json out = json::array();
  for (const TheoremRow& row : r.rows) {
    json cells = json::array();
    for (const Cell& c : row.witnesses) cells.push_back(toJson(c));
    json j = {{"theorem", row.theorem},
              {"pair", row.pair},
              {"hypothesesMet", row.hypothesesMet},
              {"conditionHolds", row.conditionHolds},
              {"conclusionHolds", row.conclusionHolds},
              {"verdict", row.violation ? "VIOLATION" : "consistent"},
              {"witnesses", cells}};
    if (!row.note.empty()) j["note"] = row.note;
    out.push_back(std::move(j));
  }
  return out;
}

json toJson(const Assignment& a) {
  json out = json::object();
  for (std::size_t k = 0; k < kVarCount; ++k) out[std::string(varName(static_cast<Var>(k)))] = a.values[k];
  return out;
}

json toJson(const CatalogVerdict& v) {
  auto verdict = [](const Verdict& d) { return d.valid() ? "Valid" : "CounterAtom"; };
  json out = {{"id", theoremShape(v.id).name},
              {"forward", verdict(v.decision.forward)},
              {"backward", verdict(v.decision.backward)}};
  json atoms = json::object();
  if (!v.decision.forward.valid()) atoms["forward"] = toJson(*v.decision.forward.counterAtom);
  if (!v.decision.backward.valid()) atoms["backward"] = toJson(*v.decision.backward.counterAtom);
  if (!atoms.empty()) out["counterAtom"] = atoms;
  return out;
}

json toJson(const CorpusReport& r) {
  json violations = json::array();
  for (const CorpusViolation& v : r.violations)
    violations.push_back({{"index", v.index}, {"theorem", v.theorem}, {"pair", v.pair}, {"model", v.model}});
  json stats = json::array();
  for (const SvfStats& s : r.stats)
    stats.push_back({{"svf", s.name}, {"partitionsSigma", s.partitionsSigma}, {"partitionsSigmaA", s.partitionsSigmaA}});
  json pairs = json::array();
  for (const DistinguishingPair& p : r.distinguishing)
    pairs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"target", p.target == Target::Sigma ? "sigma" : "sigmaA"},
                     {"count", p.count}});
  return {{"modelsRun", r.modelsRun}, {"violations", violations}, {"stats", stats}, {"distinguishing", pairs}};
}

json profileJson(const SpectralSnapshot& s) {
  json out = json::array();
  for (const Svf& f : svfCatalog()) {
    SvfValue v = evaluate(f, s);
    PartitionStatus p = partitionStatus(f, s);
    out.push_back({{"svf", f.name},
                   {"part1", toJson(v.part1)},
                   {"part2", toJson(v.part2)},
                   {"partitionsSigma", p.partitionsSigma},
                   {"partitionsSigmaA", p.partitionsSigmaA}});
  }
  return out;
}

Cell cellFromJson(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "point") return Point{ExactComplex(rationalFrom(j.at("re")), rationalFrom(j.at("im")))};
    if (kind == "seq") return seqFrom(j);
    if (kind == "circle") return Circle{complexFrom(j.at("a")), rationalFrom(j.at("rho")), pointsFrom(j.at("excl"))};
    if (kind == "annulus") {
      Annulus a;
      a.center = complexFrom(j.at("a"));
      a.inner = rationalFrom(j.at("inner"));
      a.outer = rationalFrom(j.at("outer"));
      a.excludedPoints = pointsFrom(j.at("exclPoints"));
      for (const json& s : j.at("exclSeqs")) a.excludedSeqs.push_back(seqFrom(s));
      return a;
    }
    bad("unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace weyl::json
