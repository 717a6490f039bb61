#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycomp {

enum class Errc {
  InvalidArgument,
  NonPositiveCoordinate,
  OpenRing,
  OriginTooLarge,
  InvalidDeltaSeq,
  UnknownCharacter,
  FieldOverflow,
  ValueOutOfRange,
  HeadOverflow,
  SOverflow,
  MalformedPayload,
  UnknownCode,
  SymbolNotInModel,
  ParseError,
  TooFewPoints,
  EmptyCorpus,
  UnterminatedFrame,
  UnknownSentinel,
  MissingFrame,
  MissingResource,
};

std::string_view errc_name(Errc code);

// Every failure in the library is reported through this type. `position` is
// a character offset into the offending payload or a 1-based line number,
// depending on the operation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace polycomp
