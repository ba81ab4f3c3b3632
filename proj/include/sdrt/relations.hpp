#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "sdrt/errors.hpp"

namespace sdrt {

// The sixteen-relation inventory. Subordinating relations extend the graph
// vertically and keep their first argument open; coordinating relations
// extend it horizontally and close it. Parallel and Contrast are structural:
// they license their own attachment possibilities and are exempt from the
// right-frontier check.
enum class RelationName {
  Elaboration,
  EntityElaboration,
  Comment,
  Flashback,
  Background,
  Goal,
  Explanation,
  Attribution,
  Frame,
  Narration,
  Contrast,
  Result,
  Parallel,
  Continuation,
  Alternation,
  Conditional,
};

enum class RelationCategory { Subordinating, Coordinating };

struct RelationType {
  RelationName name;
  RelationCategory category;
  bool structural;

  bool subordinating() const { return category == RelationCategory::Subordinating; }
  bool coordinating() const { return category == RelationCategory::Coordinating; }
};

inline constexpr std::array<RelationName, 16> kRelationInventory = {
    RelationName::Elaboration, RelationName::EntityElaboration,
    RelationName::Comment,     RelationName::Flashback,
    RelationName::Background,  RelationName::Goal,
    RelationName::Explanation, RelationName::Attribution,
    RelationName::Frame,       RelationName::Narration,
    RelationName::Contrast,    RelationName::Result,
    RelationName::Parallel,    RelationName::Continuation,
    RelationName::Alternation, RelationName::Conditional,
};

inline std::string_view to_string(RelationName n) {
  switch (n) {
    case RelationName::Elaboration: return "Elaboration";
    case RelationName::EntityElaboration: return "EntityElaboration";
    case RelationName::Comment: return "Comment";
    case RelationName::Flashback: return "Flashback";
    case RelationName::Background: return "Background";
    case RelationName::Goal: return "Goal";
    case RelationName::Explanation: return "Explanation";
    case RelationName::Attribution: return "Attribution";
    case RelationName::Frame: return "Frame";
    case RelationName::Narration: return "Narration";
    case RelationName::Contrast: return "Contrast";
    case RelationName::Result: return "Result";
    case RelationName::Parallel: return "Parallel";
    case RelationName::Continuation: return "Continuation";
    case RelationName::Alternation: return "Alternation";
    case RelationName::Conditional: return "Conditional";
  }
  return "?";
}

inline std::optional<RelationName> relation_from_string(std::string_view s) {
  for (RelationName n : kRelationInventory) {
    if (to_string(n) == s) return n;
  }
  return std::nullopt;
}

inline RelationType classify(RelationName n) {
  switch (n) {
    case RelationName::Elaboration:
    case RelationName::EntityElaboration:
    case RelationName::Comment:
    case RelationName::Flashback:
    case RelationName::Background:
    case RelationName::Goal:
    case RelationName::Explanation:
    case RelationName::Attribution:
    case RelationName::Frame:
      return {n, RelationCategory::Subordinating, false};
    case RelationName::Contrast:
    case RelationName::Parallel:
      return {n, RelationCategory::Coordinating, true};
    case RelationName::Narration:
    case RelationName::Result:
    case RelationName::Continuation:
    case RelationName::Alternation:
    case RelationName::Conditional:
      return {n, RelationCategory::Coordinating, false};
  }
  throw Error(Errc::UnknownRelationName, "unrecognized relation enum value");
}

inline RelationType classify(std::string_view name) {
  auto n = relation_from_string(name);
  if (!n) throw Error(Errc::UnknownRelationName, std::string(name));
  return classify(*n);
}

}  // namespace sdrt
