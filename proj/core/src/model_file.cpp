#include "weyllab/model_file.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "weyllab/error.hpp"

namespace weyl {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    if (k > start) out.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
  }
  return out;
}

const std::map<std::string_view, std::vector<std::string_view>>& parameterNames() {
  static const std::map<std::string_view, std::vector<std::string_view>> names = {
      {"jordan", {"lambda", "size"}}, {"scalar_inf", {"lambda"}}, {"diag_seq", {"c", "r"}},
      {"qshift", {}},                 {"shift_fwd", {"a", "rho"}}, {"shift_adj", {"a", "rho"}}};
  return names;
}

class LineParser {
 public:
  LineParser(int line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

  Atom atom() {
    if (tokens_.size() < 2) fail(tokens_[0].column + 4, "expected an atom kind");
    const Token& kind = tokens_[1];
    auto it = parameterNames().find(kind.text);
    if (it == parameterNames().end())
      throw Error(Errc::UnknownAtomKind, "unknown atom kind '" + std::string(kind.text) + "'", line_, kind.column);

    std::map<std::string_view, Token> values;
    for (std::size_t k = 2; k < tokens_.size(); ++k) {
      const Token& t = tokens_[k];
      std::size_t eq = t.text.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == t.text.size()) fail(t.column, "expected name=value");
      std::string_view name = t.text.substr(0, eq);
      const auto& allowed = it->second;
      if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
        fail(t.column, "unexpected parameter '" + std::string(name) + "' for " + std::string(kind.text));
      if (values.count(name)) fail(t.column, "duplicate parameter '" + std::string(name) + "'");
      values[name] = {t.text.substr(eq + 1), t.column + static_cast<int>(eq) + 1};
    }
    for (std::string_view name : it->second)
      if (!values.count(name)) fail(kind.column, "missing parameter '" + std::string(name) + "'");

    auto complex = [&](std::string_view name) { return number(values.at(name)); };
    auto real = [&](std::string_view name) {
      const Token& t = values.at(name);
      ExactComplex z = number(t);
      if (z.im != 0) fail(t.column, "'" + std::string(name) + "' must be real");
      return z.re;
    };
    auto integer = [&](std::string_view name) -> std::int64_t {
      const Token& t = values.at(name);
      Rational q = real(name);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) fail(t.column, "'" + std::string(name) + "' must be an integer");
      return q.get_num().get_si();
    };

    if (kind.text == "jordan") return jordan(complex("lambda"), integer("size"));
    if (kind.text == "scalar_inf") return scalarInf(complex("lambda"));
    if (kind.text == "diag_seq") return diagSeq(complex("c"), complex("r"));
    if (kind.text == "qshift") return qshift();
    if (kind.text == "shift_fwd") return shiftFwd(complex("a"), real("rho"));
    return shiftAdj(complex("a"), real("rho"));
  }

  [[noreturn]] void fail(int column, const std::string& what) const {
    throw Error(Errc::SyntaxError, what, line_, column);
  }

 private:
  ExactComplex number(const Token& t) const {
    try {
      return parseComplex(t.text);
    } catch (const Error& e) {
      throw Error(e.code(), "bad number '" + std::string(t.text) + "'", line_, t.column);
    }
  }

  int line_;
  std::vector<Token> tokens_;
};

}  // namespace

OperatorModel parseModelFile(std::string_view text) {
  OperatorModel m;
  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineParser parser(lineNo, tokens);
    if (tokens[0].text == "atom") {
      m.atoms.push_back(parser.atom());
    } else if (tokens[0].text == "name") {
      if (tokens.size() != 2) parser.fail(tokens[0].column, "expected 'name <identifier>'");
      m.name = std::string(tokens[1].text);
    } else {
      parser.fail(tokens[0].column, "expected 'atom' or 'name'");
    }
  }
  validateModel(m);
  return m;
}

std::string renderModel(const OperatorModel& m) {
  std::ostringstream out;
  if (!m.name.empty()) out << "name " << m.name << "\n";
  for (const Atom& a : m.atoms) {
    out << "atom " << atomKindName(a.kind);
    switch (a.kind) {
      case AtomKind::Jordan: out << " lambda=" << toString(a.point) << " size=" << a.size; break;
      case AtomKind::ScalarInf: out << " lambda=" << toString(a.point); break;
      case AtomKind::DiagSeq: out << " c=" << toString(a.point) << " r=" << toString(a.rate); break;
      case AtomKind::QShift: break;
      case AtomKind::ShiftFwd:
      case AtomKind::ShiftAdj: out << " a=" << toString(a.point) << " rho=" << toString(a.radius); break;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace weyl
