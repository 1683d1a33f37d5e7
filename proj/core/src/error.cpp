#include "weyllab/error.hpp"

namespace weyl {

std::string_view errcName(Errc code) {
  switch (code) {
    case Errc::SameLimitSequences: return "SameLimitSequences";
    case Errc::MalformedCell: return "MalformedCell";
    case Errc::UnsupportedRegion: return "UnsupportedRegion";
    case Errc::UnsupportedSet: return "UnsupportedSet";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::IncoherentInvertibility: return "IncoherentInvertibility";
    case Errc::IndexInconstant: return "IndexInconstant";
    case Errc::CellOutsideDecomposition: return "CellOutsideDecomposition";
    case Errc::OverlappingDisks: return "OverlappingDisks";
    case Errc::EmptyModel: return "EmptyModel";
    case Errc::InvalidAtom: return "InvalidAtom";
    case Errc::NotFiniteDimensional: return "NotFiniteDimensional";
    case Errc::UnknownSvf: return "UnknownSvf";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::UnknownAtomKind: return "UnknownAtomKind";
  }
  return "Unknown";
}

}  // namespace weyl
