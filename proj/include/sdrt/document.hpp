#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sdrt/errors.hpp"
#include "sdrt/sdrs.hpp"

namespace sdrt {

// One elementary discourse unit of a corpus document. start/end are
// character offsets into the document text; embedded EDUs carry spans
// properly nested inside their container's span.
struct Edu {
  std::string id;
  long start = 0;
  long end = 0;
  std::string text;

  friend bool operator==(const Edu&, const Edu&) = default;
};

struct Document {
  std::string id;
  std::vector<Edu> edus;  // textual order: span start ascending, end descending
  std::vector<RelationInstance> relations;
  std::vector<ComplexSegment> segments;

  friend bool operator==(const Document&, const Document&) = default;
};

// Sorts EDUs into textual order (container before embedded) and rejects
// ill-nested spans. Parsing runs this on every document; hand-built
// documents should call it once before use.
inline void normalize_edu_order(Document& doc) {
  for (const auto& e : doc.edus) {
    if (e.start < 0)
      throw Error(Errc::SchemaError, "document " + doc.id + ", EDU " + e.id +
                                         ": negative span start");
    if (e.end <= e.start)
      throw Error(Errc::SchemaError,
                  "document " + doc.id + ", EDU " + e.id + ": span end must exceed start");
  }
  std::sort(doc.edus.begin(), doc.edus.end(), [](const Edu& a, const Edu& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end > b.end;
    return a.id < b.id;
  });
  for (size_t i = 0; i < doc.edus.size(); ++i) {
    for (size_t j = i + 1; j < doc.edus.size(); ++j) {
      const Edu& a = doc.edus[i];
      const Edu& b = doc.edus[j];
      if (b.start >= a.end) continue;  // disjoint
      bool properly_nested = b.end <= a.end && !(a.start == b.start && a.end == b.end);
      if (!properly_nested)
        throw Error(Errc::OverlapError, "document " + doc.id + ": spans of " + a.id +
                                            " and " + b.id + " overlap without nesting");
    }
  }
}

// The full SDRS of a document: EDUs in textual order carry their position
// as order_index.
inline Sdrs document_sdrs(const Document& doc) {
  std::vector<Label> edus;
  edus.reserve(doc.edus.size());
  for (size_t i = 0; i < doc.edus.size(); ++i)
    edus.push_back(Label{doc.edus[i].id, LabelKind::Edu, static_cast<int>(i)});
  return build_sdrs(std::move(edus), doc.relations, doc.segments);
}

}  // namespace sdrt
