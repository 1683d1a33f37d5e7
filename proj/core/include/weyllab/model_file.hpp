#pragma once

#include <string>
#include <string_view>

#include "weyllab/engine.hpp"

namespace weyl {

/// Line-oriented model format:
///
///   # comment
///   name q_plus_zero
///   atom qshift
///   atom scalar_inf lambda=0
///   atom jordan lambda=1/2+1/3i size=2
///   atom diag_seq c=0 r=1
///   atom shift_fwd a=0 rho=1
///
/// Throws SyntaxError (positioned), ZeroDenominator, UnknownAtomKind,
/// EmptyModel and the validateModel errors.
OperatorModel parseModelFile(std::string_view text);

/// Inverse of parseModelFile.
std::string renderModel(const OperatorModel& m);

}  // namespace weyl
