#include "polycomp/error.hpp"

namespace polycomp {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPositiveCoordinate: return "NonPositiveCoordinate";
    case Errc::OpenRing: return "OpenRing";
    case Errc::OriginTooLarge: return "OriginTooLarge";
    case Errc::InvalidDeltaSeq: return "InvalidDeltaSeq";
    case Errc::UnknownCharacter: return "UnknownCharacter";
    case Errc::FieldOverflow: return "FieldOverflow";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::HeadOverflow: return "HeadOverflow";
    case Errc::SOverflow: return "SOverflow";
    case Errc::MalformedPayload: return "MalformedPayload";
    case Errc::UnknownCode: return "UnknownCode";
    case Errc::SymbolNotInModel: return "SymbolNotInModel";
    case Errc::ParseError: return "ParseError";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::UnterminatedFrame: return "UnterminatedFrame";
    case Errc::UnknownSentinel: return "UnknownSentinel";
    case Errc::MissingFrame: return "MissingFrame";
    case Errc::MissingResource: return "MissingResource";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code),
      position_(position) {}

}  // namespace polycomp
