#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unbordered {

enum class Errc {
  LengthMismatch,
  IncompleteRuler,
  DuplicateMark,
  InvalidParams,
  TooShort,
  ParseError,
  AlphabetMismatch,
  MixedLengths,
  BorderedSeed,
  TooLarge,
  EmptyRuler,
  IncompleteConstruction,
  RepairFailed,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace unbordered
