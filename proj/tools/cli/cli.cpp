#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json_io.hpp"
#include "weyllab/error.hpp"
#include "weyllab/model_file.hpp"

namespace weyl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OperatorModel loadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read model file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parseModelFile(text.str());
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

void writeArtifact(const std::string& dir, const std::string& file, const std::string& text) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / file, std::ios::binary);
  if (!out) throw UsageError("cannot write artifact in '" + dir + "'");
  out << text;
}

int snapshotCommand(const std::string& path, bool asJson, std::ostream& out) {
  OperatorModel m = loadModel(path);
  SpectralSnapshot s = snapshot(m);
  if (asJson) {
    out << json::toJson(s).dump(2) << "\n";
    return 0;
  }
  if (!m.name.empty()) out << "model " << m.name << "\n";
  for (SetId id : kAllSets) out << std::left << std::setw(18) << setName(id) << " " << s[id] << "\n";
  return 0;
}

int profileCommand(const std::string& path, bool asJson, std::ostream& out) {
  SpectralSnapshot s = snapshot(loadModel(path));
  if (asJson) {
    out << json::profileJson(s).dump(2) << "\n";
    return 0;
  }
  out << std::left << std::setw(10) << "svf" << std::setw(18) << "partitions sigma" << "partitions sigmaA\n";
  for (const Svf& f : svfCatalog()) {
    PartitionStatus p = partitionStatus(f, s);
    out << std::left << std::setw(10) << f.name << std::setw(18) << yesNo(p.partitionsSigma)
        << yesNo(p.partitionsSigmaA) << "\n";
  }
  return 0;
}

int verifyCommand(const std::string& path, bool asJson, bool all, std::ostream& out) {
  OperatorModel m = loadModel(path);
  ModelAnalysis analysis(m);
  VerifyOptions opts;
  opts.includeUnmetRows = all;
  TheoremReport report = verifyAll(analysis, opts);
  const int code = report.hasViolation() ? 1 : 0;
  if (asJson) {
    out << json::toJson(report).dump(2) << "\n";
    return code;
  }
  std::string sigma, sigmaA;
  for (const Svf& f : svfCatalog()) {
    PartitionStatus p = partitionStatus(f, analysis.snapshot());
    if (p.partitionsSigma) sigma += " " + std::string(f.name);
    if (p.partitionsSigmaA) sigmaA += " " + std::string(f.name);
  }
  out << "partitions sigma:" << (sigma.empty() ? " none" : sigma) << "\n";
  out << "partitions sigmaA:" << (sigmaA.empty() ? " none" : sigmaA) << "\n";
  for (const TheoremRow& row : report.rows) {
    out << std::left << std::setw(8) << row.theorem << " " << row.pair << "  hyp=" << yesNo(row.hypothesesMet)
        << " cond=" << yesNo(row.conditionHolds) << " concl=" << yesNo(row.conclusionHolds) << "  "
        << (row.violation ? "VIOLATION" : "consistent");
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << "\n";
    for (const Cell& c : row.witnesses) out << "    witness " << describe(c) << "\n";
  }
  out << report.rows.size() << " rows, " << report.violationCount() << " violations\n";
  return code;
}

int decideCommand(const std::string& theorem, const std::string& drop, bool weaken, bool asJson,
                  std::ostream& out) {
  Mutation mutation = Mutation::None;
  if (drop == "order")
    mutation = Mutation::DropOrder;
  else if (drop == "partition")
    mutation = Mutation::DropPartition;
  else if (!drop.empty())
    throw UsageError("--drop-hypothesis expects 'order' or 'partition'");
  if (weaken) {
    if (mutation != Mutation::None) throw UsageError("--weaken-disjoint cannot be combined with --drop-hypothesis");
    mutation = Mutation::WeakenDisjoint;
  }

  std::vector<CatalogVerdict> verdicts;
  if (theorem == "all") {
    for (const TheoremShape& s : theoremCatalog()) verdicts.push_back({s.id, decide(encodeTheorem(s.id, mutation))});
  } else {
    TheoremId id = parseTheoremId(theorem);
    verdicts.push_back({id, decide(encodeTheorem(id, mutation))});
  }
  // Counter-atoms are expected for mutants; only the real encodings must hold.
  bool failed = false;
  if (mutation == Mutation::None)
    for (const CatalogVerdict& v : verdicts) failed |= !v.decision.forward.valid() || !v.decision.backward.valid();

  if (asJson) {
    json::json doc = json::json::array();
    for (const CatalogVerdict& v : verdicts) doc.push_back(json::toJson(v));
    out << (theorem == "all" ? doc : doc[0]).dump(2) << "\n";
    return failed ? 1 : 0;
  }
  auto show = [](const Verdict& v) { return v.valid() ? std::string("Valid") : "CounterAtom" + describe(*v.counterAtom); };
  for (const CatalogVerdict& v : verdicts)
    out << std::left << std::setw(6) << theoremShape(v.id).name << " forward " << show(v.decision.forward)
        << "  backward " << show(v.decision.backward) << "\n";
  return failed ? 1 : 0;
}

struct SearchArgs {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::size_t maxAtoms = 4;
  std::string target;
  bool expectNone = false;
  std::string artifacts;
  bool asJson = false;
};

int searchCommand(const SearchArgs& a, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = a.seed;
  cfg.modelCount = a.count;
  cfg.maxAtoms = a.maxAtoms;

  if (a.target.empty()) {
    CorpusReport report = runCorpus(cfg);
    if (!a.artifacts.empty())
      for (const CorpusViolation& v : report.violations)
        writeArtifact(a.artifacts, "violation-" + std::to_string(v.index) + ".model", v.model);
    if (a.asJson) {
      out << json::toJson(report).dump(2) << "\n";
    } else {
      out << report.modelsRun << " models, " << report.violations.size() << " violations\n";
      for (const CorpusViolation& v : report.violations)
        out << "  model " << v.index << ": " << v.theorem << " " << v.pair << "\n";
      out << std::left << std::setw(10) << "svf" << std::setw(18) << "partitions sigma" << "partitions sigmaA\n";
      for (const SvfStats& s : report.stats)
        out << std::left << std::setw(10) << s.name << std::setw(18) << s.partitionsSigma << s.partitionsSigmaA << "\n";
    }
    return report.violations.empty() ? 0 : 1;
  }

  SearchTarget target = parseTarget(a.target);
  std::optional<Counterexample> found = findCounterexample(target, a.count, cfg);
  if (found && !a.artifacts.empty())
    writeArtifact(a.artifacts, "counterexample-" + std::to_string(found->index) + ".model", renderModel(found->model));
  if (a.asJson) {
    json::json doc = {{"target", describe(target)}, {"budget", a.count}, {"found", found.has_value()}};
    if (found) {
      doc["index"] = found->index;
      doc["model"] = renderModel(found->model);
    }
    out << doc.dump(2) << "\n";
  } else if (found) {
    out << "found model " << found->index << " matching " << describe(target) << "\n" << renderModel(found->model);
  } else {
    out << "no model among " << a.count << " matches " << describe(target) << "\n";
  }
  return found && a.expectNone ? 1 : 0;
}

}  // namespace

CommandResult runCommand(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CLI::App app{"Exact spectral partitioning laboratory", "weyllab"};
  app.require_subcommand(1);

  std::string file, theorem, drop;
  bool asJson = false, all = false, weaken = false;
  SearchArgs search;

  auto* snap = app.add_subcommand("snapshot", "Print the 18 spectral sets of a model");
  snap->add_option("file", file, "Model file")->required();
  snap->add_flag("--json", asJson, "JSON output");

  auto* prof = app.add_subcommand("profile", "Partitioning status of every catalog function");
  prof->add_option("file", file, "Model file")->required();
  prof->add_flag("--json", asJson, "JSON output");

  auto* ver = app.add_subcommand("verify", "Check every theorem on a model");
  ver->add_option("file", file, "Model file")->required();
  ver->add_flag("--json", asJson, "JSON output");
  ver->add_flag("--all", all, "Also list rows whose hypotheses fail");

  auto* dec = app.add_subcommand("decide", "Decide a set-algebraic theorem over Venn atoms");
  dec->add_option("--theorem", theorem, "Theorem id (T21 ... T46) or 'all'")->required();
  dec->add_option("--drop-hypothesis", drop, "Remove the 'order' or 'partition' hypothesis");
  dec->add_flag("--weaken-disjoint", weaken, "Read the disjoint unions of the condition as plain unions");
  dec->add_flag("--json", asJson, "JSON output");

  auto* sea = app.add_subcommand("search", "Run a seeded corpus or search it for a target");
  sea->add_option("--seed", search.seed, "Generator seed")->required();
  sea->add_option("--count", search.count, "Number of models")->required();
  sea->add_option("--max-atoms", search.maxAtoms, "Atoms per model")->check(CLI::PositiveNumber);
  sea->add_option("--target", search.target, "Conjunction such as 'Phi_W.sigma & !Phi_gW.sigma'");
  sea->add_flag("--expect-none", search.expectNone, "Exit 1 when a matching model is found");
  sea->add_option("--artifacts", search.artifacts, "Directory for replayable model files");
  sea->add_flag("--json", search.asJson, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {0, out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return {2, out.str(), err.str()};
  }

  int code = 0;
  try {
    if (*snap)
      code = snapshotCommand(file, asJson, out);
    else if (*prof)
      code = profileCommand(file, asJson, out);
    else if (*ver)
      code = verifyCommand(file, asJson, all, out);
    else if (*dec)
      code = decideCommand(theorem, drop, weaken, asJson, out);
    else
      code = searchCommand(search, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return {2, out.str(), err.str()};
  }
  return {code, out.str(), err.str()};
}

}  // namespace weyl::cli
