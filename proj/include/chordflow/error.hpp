#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordflow {

enum class ErrorCode {
  DuplicateArcToken,
  MissingArcToken,
  ChordArityError,
  MixedTokenKinds,
  MissingTToken,
  KindMismatch,
  BadMultiplicity,
  BadFirstEncounterOrder,
  DashOnArcEnd,
  BadTCount,
  MisplacedDash,
  SyntaxError,
  NotOneCycled,
  UnreachableSurface,
  SphereUnsupported,
  PartnerNotInCatalog,
  FormatVersionMismatch,
  MalformedRecord,
  UnknownKind,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateArcToken: return "DuplicateArcToken";
    case ErrorCode::MissingArcToken: return "MissingArcToken";
    case ErrorCode::ChordArityError: return "ChordArityError";
    case ErrorCode::MixedTokenKinds: return "MixedTokenKinds";
    case ErrorCode::MissingTToken: return "MissingTToken";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::BadFirstEncounterOrder: return "BadFirstEncounterOrder";
    case ErrorCode::DashOnArcEnd: return "DashOnArcEnd";
    case ErrorCode::BadTCount: return "BadTCount";
    case ErrorCode::MisplacedDash: return "MisplacedDash";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotOneCycled: return "NotOneCycled";
    case ErrorCode::UnreachableSurface: return "UnreachableSurface";
    case ErrorCode::SphereUnsupported: return "SphereUnsupported";
    case ErrorCode::PartnerNotInCatalog: return "PartnerNotInCatalog";
    case ErrorCode::FormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::UnknownKind: return "UnknownKind";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace chordflow
