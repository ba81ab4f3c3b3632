#pragma once

#include <string>
#include <vector>

#include "sdrt/document.hpp"
#include "sdrt/relations.hpp"

namespace fixtures {

using sdrt::Document;
using sdrt::Edu;
using sdrt::RelationName;

namespace detail {

struct DocBuilder {
  Document doc;
  long pos = 0;

  explicit DocBuilder(std::string id) { doc.id = std::move(id); }

  DocBuilder& edu(const std::string& id, const std::string& text) {
    long start = pos;
    long end = start + static_cast<long>(text.size());
    doc.edus.push_back({id, start, end, text});
    pos = end + 1;
    return *this;
  }

  DocBuilder& embedded(const std::string& id, long start, long end,
                       const std::string& text) {
    doc.edus.push_back({id, start, end, text});
    return *this;
  }

  DocBuilder& rel(RelationName r, const std::string& source, const std::string& target) {
    doc.relations.push_back({r, source, target, sdrt::Origin::Annotated});
    return *this;
  }

  DocBuilder& seg(const std::string& id, std::vector<std::string> members) {
    doc.segments.push_back({id, std::move(members)});
    return *this;
  }
};

}  // namespace detail

// Seven-unit narrative: a top-level frame elaborated by an evening of
// activities, with a nested pair and one long-range coordination back to
// the second unit.
inline Document evening_doc() {
  detail::DocBuilder b("evening-01");
  b.edu("p1", "We spent Friday evening at home.")
      .edu("p2", "Mara cooked a big pot of lentil soup.")
      .edu("p3", "She had found the recipe in her grandmother's notebook.")
      .edu("p4", "The notebook was full of pencil notes.")
      .edu("p5", "Then she toasted some bread.")
      .edu("p6", "The loaf came from the corner bakery.")
      .edu("p7", "Afterwards we played cards until midnight.")
      .rel(RelationName::Elaboration, "p1", "pA")
      .rel(RelationName::Elaboration, "p2", "pB")
      .rel(RelationName::EntityElaboration, "p3", "p4")
      .rel(RelationName::Narration, "p3", "p5")
      .rel(RelationName::Background, "p5", "p6")
      .rel(RelationName::Narration, "p2", "p7")
      .seg("pA", {"p2", "p7"})
      .seg("pB", {"p3", "p5"});
  return b.doc;
}

// Ten-unit renovation report. The annotation carries no explicit segments;
// normalization groups the continuation chain 75-77 under an inferred
// segment, which rescues the long attachment 79 -> 74 but not 79 -> 75.
inline Document renovation_doc() {
  detail::DocBuilder b("renovation-01");
  b.edu("74", "The crew finished the kitchen renovation on Thursday.")
      .edu("75", "Two contractors handled the final fixtures.")
      .edu("76", "One of them had rewired the old pantry circuit.")
      .edu("77", "An apprentice sealed the countertop seams.")
      .edu("78", "The sealant needed a full day to cure.")
      .edu("79", "The project had started back in March.")
      .edu("80", "The first week went to demolition.")
      .edu("81", "A rented skip sat in the driveway for days.")
      .edu("82", "The second week was all plumbing.")
      .edu("83", "A leaky junction under the sink slowed that part down.")
      .rel(RelationName::Comment, "74", "75")
      .rel(RelationName::EntityElaboration, "75", "76")
      .rel(RelationName::Continuation, "75", "77")
      .rel(RelationName::EntityElaboration, "77", "78")
      .rel(RelationName::Elaboration, "75", "79")
      .rel(RelationName::Elaboration, "74", "79")
      .rel(RelationName::EntityElaboration, "79", "80")
      .rel(RelationName::EntityElaboration, "80", "81")
      .rel(RelationName::Continuation, "80", "82")
      .rel(RelationName::EntityElaboration, "82", "83");
  return b.doc;
}

// Two parallel actions grouped as a declared pair, explained jointly, then
// an elaboration that reaches inside the pair's open constituent.
inline Document kitchen_doc() {
  detail::DocBuilder b("kitchen-01");
  b.edu("k1", "Dana chopped the onions.")
      .edu("k2", "Theo crushed the peppercorns.")
      .edu("k3", "They were racing to get dinner ready before the guests arrived.")
      .edu("k4", "He used the flat of an old cleaver.")
      .rel(RelationName::Parallel, "k1", "k2")
      .rel(RelationName::Explanation, "kp", "k3")
      .rel(RelationName::EntityElaboration, "k2", "k4")
      .seg("kp", {"k1", "k2"});
  return b.doc;
}

// A contrast whose second argument is a complex segment of alternatives.
inline Document weekend_doc() {
  detail::DocBuilder b("weekend-01");
  b.edu("b1", "Rosa promised to call when the results came in.")
      .edu("b2", "Maybe the lab was simply backed up.")
      .edu("b3", "Or maybe she had lost my number.")
      .rel(RelationName::Contrast, "b1", "bw")
      .rel(RelationName::Alternation, "b2", "b3")
      .seg("bw", {"b2", "b3"});
  return b.doc;
}

// Incident timeline with two declared segments chained by Result, plus a
// final attachment far off the frontier.
inline Document outage_doc() {
  detail::DocBuilder b("outage-01");
  b.edu("4", "The outage began at nine.")
      .edu("7", "Monitoring flagged the API gateway first.")
      .edu("11", "Engineers rolled back the morning deploy.")
      .edu("12", "They drained traffic from the east region.")
      .edu("13", "They restarted the cache fleet.")
      .edu("14", "Latency fell back under the threshold.")
      .edu("15", "Error rates returned to baseline.")
      .edu("16", "The status page went green again.")
      .edu("19", "The postmortem is scheduled for Friday.")
      .rel(RelationName::EntityElaboration, "4", "7")
      .rel(RelationName::Result, "7", "s1113")
      .rel(RelationName::Result, "s1113", "s1416")
      .rel(RelationName::EntityElaboration, "4", "19")
      .seg("s1113", {"11", "12", "13"})
      .seg("s1416", {"14", "15", "16"});
  return b.doc;
}

// A matrix unit with two embedded relative clauses whose spans nest inside
// it. The embedded pair forms a continuation chain, so normalization groups
// it and keeps the matrix unit on the frontier for the final attachment.
inline Document banquet_doc() {
  detail::DocBuilder b("banquet-01");
  b.embedded("j1", 0, 98,
             "The caterer, who had trained in Lyon, and who still kept her knives "
             "from that kitchen, planned the banquet menu.")
      .embedded("j2", 13, 36, "who had trained in Lyon")
      .embedded("j3", 42, 89, "and who still kept her knives from that kitchen")
      .embedded("j4", 99, 146, "She wanted the menu to feel like a homecoming.")
      .rel(RelationName::EntityElaboration, "j1", "j2")
      .rel(RelationName::Continuation, "j2", "j3")
      .rel(RelationName::Explanation, "j1", "j4");
  return b.doc;
}

// A declared segment whose final member arrives after an intervening unit,
// so the decision naming the segment is evaluated before its point exists
// and must be postponed.
inline Document memo_doc() {
  detail::DocBuilder b("memo-01");
  b.edu("m1", "The quarterly memo went out Monday morning.")
      .edu("m2", "Replies started arriving within the hour.")
      .edu("m3", "A follow-up correction went out after lunch.")
      .rel(RelationName::Narration, "m1", "m2")
      .rel(RelationName::Comment, "m2", "ms")
      .seg("ms", {"m1", "m3"});
  return b.doc;
}

// An EDU whose only direct attachment violates the frontier but whose
// enclosing segment attaches compliantly, which rescues it for the
// per-EDU metric.
inline Document rescue_doc() {
  detail::DocBuilder b("rescue-01");
  b.edu("r1", "The hikers reached the ridge at noon.")
      .edu("r2", "They stopped for lunch.")
      .edu("r3", "The wind picked up hard.")
      .edu("r4", "Loose gravel made the footing worse.")
      .rel(RelationName::Narration, "r1", "r2")
      .rel(RelationName::Elaboration, "r2", "rs")
      .rel(RelationName::EntityElaboration, "r1", "r4")
      .seg("rs", {"r3", "r4"});
  return b.doc;
}

// Distance fixture of rank 1: a mid-document pair, no relations needed.
inline Document rank1_doc() {
  detail::DocBuilder b("rank1-01");
  b.edu("d1", "The train left the station.")
      .edu("d2", "Rain streaked the windows.")
      .edu("d3", "Fields slid past in the dark.")
      .edu("d4", "Nobody spoke.")
      .seg("ds", {"d2", "d3"});
  return b.doc;
}

// Distance fixture of rank 2: a segment nested inside another, anchored at
// the document start, measured from the far end.
inline Document rank2_doc() {
  detail::DocBuilder b("rank2-01");
  b.edu("e1", "The festival opened with a brass band.")
      .edu("e2", "Stalls lined the whole square.")
      .edu("e3", "Children carried paper lanterns.")
      .edu("e4", "By dusk the crowd had doubled.")
      .edu("e5", "The fireworks started at ten.")
      .seg("f1", {"e1", "e2"})
      .seg("f2", {"f1", "e3"});
  return b.doc;
}

// One exempt structural decision and one genuine violation, for exercising
// the include-structural accounting switch.
inline Document flagged_doc() {
  detail::DocBuilder b("flagged-01");
  b.edu("w1", "The north field was plowed on Monday.")
      .edu("w2", "The south field was plowed on Tuesday.")
      .edu("w3", "The plow itself is older than the barn.")
      .rel(RelationName::Parallel, "w1", "w2")
      .rel(RelationName::Elaboration, "w1", "w3");
  return b.doc;
}

// Kitchen variant where the last attachment is coordinating, so the open
// constituent is out of reach under the default gate.
inline Document kitchen_coordinating_doc() {
  Document doc = kitchen_doc();
  doc.id = "kitchen-02";
  doc.relations.back() = {RelationName::Continuation, "k2", "k4", sdrt::Origin::Annotated};
  return doc;
}

// Nested declared segments joined by continuations; factoring distributes
// the top-level elaboration one membership level per pass.
inline Document chain_doc() {
  detail::DocBuilder b("chain-01");
  b.edu("a", "The festival program listed three events.")
      .edu("x1", "First came the parade.")
      .edu("x2", "Then the river race.")
      .edu("x3", "Then the night market.")
      .rel(RelationName::Elaboration, "a", "outer")
      .rel(RelationName::Continuation, "x1", "inner")
      .rel(RelationName::Continuation, "x2", "x3")
      .seg("inner", {"x2", "x3"})
      .seg("outer", {"x1", "inner"});
  return b.doc;
}

// A declared segment already named with the first fresh-id candidate, so
// expansion must skip to the next one.
inline Document collision_doc() {
  detail::DocBuilder b("collision-01");
  b.edu("x1", "The garden tour starts at the rose arbor.")
      .edu("x2", "Volunteers hand out maps there.")
      .edu("x3", "They also sell cold lemonade.")
      .rel(RelationName::EntityElaboration, "x1", "x2")
      .rel(RelationName::Continuation, "x2", "x3")
      .seg("\xcf\x80", {"x1", "x2"});
  return b.doc;
}

// Two islands that never connect: a second component contributes its own
// frontier and counts as one extra violation.
inline Document islands_doc() {
  detail::DocBuilder b("islands-01");
  b.edu("i1", "The ferry crossed at dawn.")
      .edu("i2", "Gulls followed it the whole way.")
      .edu("i3", "Meanwhile the harbor office stayed dark.")
      .edu("i4", "Its clerk was out with a cold.")
      .rel(RelationName::Background, "i1", "i2")
      .rel(RelationName::Explanation, "i3", "i4");
  return b.doc;
}

inline std::vector<Document> unit_corpus() {
  return {evening_doc(), renovation_doc(), kitchen_doc(),  weekend_doc(),
          outage_doc(),  banquet_doc(),    memo_doc(),     rescue_doc(),
          rank1_doc(),   rank2_doc(),      flagged_doc(),  kitchen_coordinating_doc(),
          chain_doc(),   collision_doc(),  islands_doc()};
}

}  // namespace fixtures
