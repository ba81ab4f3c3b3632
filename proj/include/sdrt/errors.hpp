#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sdrt {

enum class Errc {
  DuplicateId,
  DuplicateOrderIndex,
  DanglingEndpoint,
  MembershipCycle,
  EmptyDocument,
  EmptySegment,
  SelfLoop,
  UnknownLabel,
  UnknownRelationName,
  UnknownDocument,
  IndexOutOfRange,
  SchemaError,
  OverlapError,
  NonTermination,
  EmptyInput,
};

inline std::string_view to_string(Errc c) {
  switch (c) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::DuplicateOrderIndex: return "DuplicateOrderIndex";
    case Errc::DanglingEndpoint: return "DanglingEndpoint";
    case Errc::MembershipCycle: return "MembershipCycle";
    case Errc::EmptyDocument: return "EmptyDocument";
    case Errc::EmptySegment: return "EmptySegment";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::UnknownRelationName: return "UnknownRelationName";
    case Errc::UnknownDocument: return "UnknownDocument";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SchemaError: return "SchemaError";
    case Errc::OverlapError: return "OverlapError";
    case Errc::NonTermination: return "NonTermination";
    case Errc::EmptyInput: return "EmptyInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace sdrt
