#include "unbordered/error.hpp"

namespace unbordered {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::IncompleteRuler: return "IncompleteRuler";
    case Errc::DuplicateMark: return "DuplicateMark";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::TooShort: return "TooShort";
    case Errc::ParseError: return "ParseError";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::MixedLengths: return "MixedLengths";
    case Errc::BorderedSeed: return "BorderedSeed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EmptyRuler: return "EmptyRuler";
    case Errc::IncompleteConstruction: return "IncompleteConstruction";
    case Errc::RepairFailed: return "RepairFailed";
  }
  return "Unknown";
}

}  // namespace unbordered
