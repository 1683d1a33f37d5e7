#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

enum class Errc {
  // cset
  SameLimitSequences,
  MalformedCell,
  UnsupportedRegion,
  UnsupportedSet,
  // profile
  InvalidProfile,
  NonMonotone,
  IncoherentInvertibility,
  IndexInconstant,
  // atoms / engine
  CellOutsideDecomposition,
  OverlappingDisks,
  EmptyModel,
  InvalidAtom,
  NotFiniteDimensional,
  // weylcat / verifier
  UnknownSvf,
  UnknownTheorem,
  // model files
  SyntaxError,
  ZeroDenominator,
  UnknownAtomKind,
};

std::string_view errcName(Errc code);

/// Every failure in the library is reported through this type; the code is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}
  Error(Errc code, const std::string& what, int line, int column)
      : std::runtime_error(std::string(errcName(code)) + " at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        code_(code),
        line_(line),
        column_(column) {}

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Errc code_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace weyl
