#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "sdrt/sdrt.hpp"

using namespace sdrt;

namespace {

template <typename Fn>
Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an sdrt::Error");
  return Errc::SchemaError;
}

Label edu_label(const std::string& id, int order = -1) {
  return Label{id, LabelKind::Edu, order};
}

}  // namespace

TEST_CASE("document model orders and indexes constituents") {
  Document doc = fixtures::evening_doc();
  normalize_edu_order(doc);
  Sdrs g = document_sdrs(doc);

  CHECK(g.labels().size() == 9);
  CHECK(g.last() == "p7");
  CHECK(g.label("p1").order_index == 0);
  CHECK(g.label("p7").order_index == 6);
  CHECK(g.label("pA").kind == LabelKind::Complex);

  CHECK(g.start_index("pA") == 1);
  CHECK(g.end_index("pA") == 6);
  CHECK(g.start_index("pB") == 2);
  CHECK(g.end_index("pB") == 4);
  CHECK(g.start_index("p4") == 3);
  CHECK(g.end_index("p4") == 3);

  CHECK(g.rank("p3") == 0);
  CHECK(g.rank("pA") == 1);
  CHECK(g.rank("pB") == 1);

  CHECK(g.is_complex("pA"));
  CHECK_FALSE(g.is_complex("p1"));
  CHECK(g.members("pA") == std::vector<std::string>{"p2", "p7"});

  CHECK(g.i_outscopes("pA", "p2"));
  CHECK_FALSE(g.i_outscopes("pA", "p3"));
  CHECK_FALSE(g.i_outscopes("p1", "p2"));

  CHECK(g.has("pB"));
  CHECK_FALSE(g.has("zz"));
  CHECK(error_code_of([&] { g.label("zz"); }) == Errc::UnknownLabel);
  CHECK(error_code_of([&] { g.members("p1"); }) == Errc::UnknownLabel);
}

TEST_CASE("nested segments raise rank and transitive containment") {
  Document doc = fixtures::rank2_doc();
  normalize_edu_order(doc);
  Sdrs g = document_sdrs(doc);

  CHECK(g.rank("f1") == 1);
  CHECK(g.rank("f2") == 2);
  CHECK(g.start_index("f2") == 0);
  CHECK(g.end_index("f2") == 2);

  CHECK(g.contains_transitively("f2", "e1"));
  CHECK(g.contains_transitively("f2", "f1"));
  CHECK_FALSE(g.contains_transitively("f1", "e3"));
  CHECK_FALSE(g.i_outscopes("f2", "e1"));
  CHECK(g.i_outscopes("f2", "f1"));
}

TEST_CASE("embedded spans sort hosts before their embedded units") {
  Document doc = fixtures::banquet_doc();
  normalize_edu_order(doc);
  std::vector<std::string> order;
  for (const auto& e : doc.edus) order.push_back(e.id);
  CHECK(order == std::vector<std::string>{"j1", "j2", "j3", "j4"});

  Sdrs g = document_sdrs(doc);
  CHECK(g.label("j1").order_index == 0);
  CHECK(g.last() == "j4");
}

TEST_CASE("span validation rejects malformed extents") {
  Document doc;
  doc.id = "bad-01";
  doc.edus = {{"a", 0, 10, "x"}, {"b", 5, 15, "y"}};
  CHECK(error_code_of([&] { normalize_edu_order(doc); }) == Errc::OverlapError);

  doc.edus = {{"a", 0, 10, "x"}, {"b", 0, 10, "y"}};
  CHECK(error_code_of([&] { normalize_edu_order(doc); }) == Errc::OverlapError);

  doc.edus = {{"a", -1, 10, "x"}};
  CHECK(error_code_of([&] { normalize_edu_order(doc); }) == Errc::SchemaError);

  doc.edus = {{"a", 10, 10, "x"}};
  CHECK(error_code_of([&] { normalize_edu_order(doc); }) == Errc::SchemaError);
}

TEST_CASE("construction rejects malformed structures") {
  CHECK(error_code_of([] { build_sdrs({}, {}, {}); }) == Errc::EmptyDocument);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a"), edu_label("a")}, {}, {});
        }) == Errc::DuplicateId);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a", 0), edu_label("b", 0)}, {}, {});
        }) == Errc::DuplicateOrderIndex);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a")}, {}, {{"s", {}}});
        }) == Errc::EmptySegment);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a")}, {}, {{"s", {"ghost"}}});
        }) == Errc::DanglingEndpoint);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a")},
                     {{RelationName::Narration, "a", "ghost", Origin::Annotated}}, {});
        }) == Errc::DanglingEndpoint);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a")},
                     {{RelationName::Narration, "a", "a", Origin::Annotated}}, {});
        }) == Errc::SelfLoop);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a")}, {}, {{"s1", {"s2"}}, {"s2", {"s1"}}});
        }) == Errc::MembershipCycle);

  CHECK(error_code_of([] {
          build_sdrs({edu_label("a"), edu_label("b")},
                     {{RelationName::Elaboration, "a", "b", Origin::Annotated},
                      {RelationName::Explanation, "b", "a", Origin::Annotated}},
                     {});
        }) == Errc::MembershipCycle);
}

TEST_CASE("coordinating relation cycles are structurally legal") {
  Sdrs g = build_sdrs({edu_label("a"), edu_label("b")},
                      {{RelationName::Narration, "a", "b", Origin::Annotated},
                       {RelationName::Narration, "b", "a", Origin::Annotated}},
                      {});
  CHECK(g.relations().size() == 2);
  CHECK(g.last() == "b");
}

TEST_CASE("a label may sit in two segments at once") {
  Sdrs g = build_sdrs({edu_label("a"), edu_label("b"), edu_label("c")}, {},
                      {{"s1", {"a", "b"}}, {"s2", {"b", "c"}}});
  CHECK(g.i_outscopes("s1", "b"));
  CHECK(g.i_outscopes("s2", "b"));
  CHECK(g.start_index("s2") == 1);
  CHECK(g.end_index("s1") == 1);
}

TEST_CASE("components partition the graph most recent first") {
  Document doc = fixtures::islands_doc();
  normalize_edu_order(doc);
  Sdrs g = document_sdrs(doc);
  auto comps = g.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].last == "i4");
  CHECK(comps[1].last == "i2");
  std::vector<std::string> first = comps[0].labels;
  std::sort(first.begin(), first.end());
  CHECK(first == std::vector<std::string>{"i3", "i4"});

  Document one = fixtures::evening_doc();
  normalize_edu_order(one);
  auto single = document_sdrs(one).components();
  REQUIRE(single.size() == 1);
  CHECK(single[0].last == "p7");
  CHECK(single[0].labels.size() == 9);
}

TEST_CASE("relation names round-trip through the inventory") {
  for (RelationName n : kRelationInventory) {
    auto back = relation_from_string(to_string(n));
    REQUIRE(back.has_value());
    CHECK(*back == n);
  }
  CHECK_FALSE(relation_from_string("Commentary").has_value());
  CHECK(classify(RelationName::Elaboration).subordinating());
  CHECK(classify(RelationName::Narration).coordinating());
  CHECK(classify(RelationName::Parallel).structural);
  CHECK(classify(RelationName::Contrast).structural);
  CHECK(classify(RelationName::Contrast).coordinating());
  int structural = 0, subordinating = 0, coordinating = 0;
  for (RelationName n : kRelationInventory) {
    RelationType t = classify(n);
    if (t.structural) ++structural;
    if (t.subordinating()) ++subordinating;
    if (t.coordinating()) ++coordinating;
  }
  CHECK(structural == 2);
  CHECK(subordinating == 9);
  CHECK(coordinating == 7);
  CHECK(error_code_of([] { classify("NotARelation"); }) == Errc::UnknownRelationName);
}
