#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sdrt/closure.hpp"
#include "sdrt/document.hpp"
#include "sdrt/errors.hpp"
#include "sdrt/frontier.hpp"
#include "sdrt/relations.hpp"
#include "sdrt/sdrs.hpp"

namespace sdrt {

enum class VerdictStatus {
  Compliant,
  Violation,
  PostponedResolvedCompliant,
  PostponedResolvedViolation,
  Exempt,
};

inline std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Compliant: return "Compliant";
    case VerdictStatus::Violation: return "Violation";
    case VerdictStatus::PostponedResolvedCompliant: return "PostponedResolvedCompliant";
    case VerdictStatus::PostponedResolvedViolation: return "PostponedResolvedViolation";
    case VerdictStatus::Exempt: return "Exempt";
  }
  return "?";
}

// One annotated attachment decision, judged against the right frontier of
// the prefix graph it was evaluated on.
struct AttachmentVerdict {
  std::string doc_id;
  std::string subject;  // the endpoint introduced later
  RelationInstance decision;
  std::string point;  // the already-present endpoint
  VerdictStatus status = VerdictStatus::Compliant;
  std::optional<Provenance> via;   // how the point sat on the frontier, when compliant
  std::optional<int> distance;     // measured in the evaluation-time prefix graph
  std::optional<bool> adjacent;    // point's span reaches the prefix LAST
  int step = 0;                    // replay slot the verdict was emitted at
  bool unresolvable = false;       // endpoint never appeared (counted as violation)
};

struct ReplayOptions {
  bool normalize = true;
  bool coordinating_open_constituents = false;
  bool include_structural = false;
};

struct StepSample {
  int step = 0;
  int frontier_size = 0;
  int label_count = 0;
};

struct DocumentResult {
  std::string id;
  std::vector<AttachmentVerdict> verdicts;
  std::vector<StepSample> steps;
  int components_at_end = 1;
  int violations = 0;            // violating verdicts plus disconnection penalty
  int coordinating_rescues = 0;  // violations the open-constituent clause would lift
};

struct CorpusStats {
  std::optional<double> rfc_edu;
  std::optional<double> rfc_r;
  std::optional<double> nonlocal_fraction;     // measured decisions with distance >= 2
  std::optional<double> nonadjacent_fraction;  // point's span excludes the prefix LAST
  double open_fraction = 0.0;                  // mean |RF| / |labels| over replay steps
  std::map<int, long long> distance_histogram;
  std::map<std::string, int> violations_per_doc;
  long long documents = 0;
  long long decisions = 0;
  long long compliant = 0;
  long long violating = 0;
  long long exempt = 0;
  long long unresolvable = 0;
  long long coordinating_rescues = 0;
  double docs_over_5_violations_fraction = 0.0;
};

// Dist(x) = the farthest textual distance from LAST among the EDUs x covers,
// plus x's rank (EDUs rank 0, segments 1 + max member rank). LAST carries the
// highest order index, so the farthest covered EDU is the earliest one.
inline int constituent_distance(const Sdrs& g, const std::string& x) {
  int last_idx = g.label(g.last()).order_index;
  return (last_idx - g.start_index(x)) + g.rank(x);
}

namespace detail {

inline Sdrs raw_prefix(const Document& doc, int i) {
  std::vector<Label> edus;
  std::unordered_set<std::string> present;
  edus.reserve(i);
  for (int k = 0; k < i; ++k) {
    edus.push_back(Label{doc.edus[k].id, LabelKind::Edu, k});
    present.insert(doc.edus[k].id);
  }
  // A segment joins the prefix as soon as any of its EDUs has appeared,
  // reduced to the members already present; relations need both endpoints.
  std::unordered_map<std::string, const ComplexSegment*> by_id;
  for (const auto& s : doc.segments) by_id[s.id] = &s;
  std::unordered_map<std::string, std::optional<std::vector<std::string>>> reduced;
  auto reduce = [&](auto&& self, const std::string& id) -> bool {
    if (present.count(id)) return true;
    auto seg = by_id.find(id);
    if (seg == by_id.end()) return false;
    auto it = reduced.find(id);
    if (it != reduced.end()) return it->second.has_value();
    reduced[id] = std::nullopt;
    std::vector<std::string> kept;
    for (const auto& m : seg->second->members)
      if (self(self, m)) kept.push_back(m);
    if (kept.empty()) return false;
    reduced[id] = std::move(kept);
    return true;
  };
  std::vector<ComplexSegment> segments;
  for (const auto& s : doc.segments)
    if (reduce(reduce, s.id)) segments.push_back({s.id, *reduced[s.id]});
  auto present_label = [&](const std::string& id) {
    if (present.count(id)) return true;
    auto it = reduced.find(id);
    return it != reduced.end() && it->second.has_value();
  };
  std::vector<RelationInstance> relations;
  for (const auto& r : doc.relations)
    if (present_label(r.source) && present_label(r.target)) relations.push_back(r);
  return build_sdrs(std::move(edus), std::move(relations), std::move(segments));
}

}  // namespace detail

// The normalized discourse graph over the first i EDUs (1-based, textual
// order).
inline Sdrs prefix_graph(const Document& doc, int i, bool apply_normalize = true) {
  if (i < 1 || i > static_cast<int>(doc.edus.size()))
    throw Error(Errc::IndexOutOfRange, "document " + doc.id + ": prefix index " +
                                           std::to_string(i) + " out of 1.." +
                                           std::to_string(doc.edus.size()));
  Sdrs g = detail::raw_prefix(doc, i);
  return apply_normalize ? normalize(g) : g;
}

// Replays the document EDU by EDU and judges every annotated decision
// against the right frontier of the prefix it was made on. An EDU's
// decisions are judged on the prefix preceding it; a complex segment is
// judged once its final member has appeared, against the prefix preceding
// its first member; a decision whose point is still absent is postponed to
// the step where the point first appears.
inline DocumentResult replay(const Document& doc, const ReplayOptions& opts = {}) {
  DocumentResult result;
  result.id = doc.id;
  const Sdrs full = document_sdrs(doc);
  const int n = static_cast<int>(doc.edus.size());

  auto first_step = [&](const std::string& id) { return full.start_index(id) + 1; };
  auto final_step = [&](const std::string& id) { return full.end_index(id) + 1; };
  auto intro_key = [&](const std::string& id) {
    return std::tuple<int, int, int, std::string>(final_step(id), full.rank(id),
                                                  first_step(id), id);
  };

  std::unordered_set<std::string> segment_ids;
  std::unordered_map<std::string, size_t> segment_decl;
  for (size_t i = 0; i < doc.segments.size(); ++i) {
    segment_ids.insert(doc.segments[i].id);
    segment_decl[doc.segments[i].id] = i;
  }

  std::unordered_map<std::string, std::vector<size_t>> edu_subject_decisions;
  // (final step, rank, first step, segment declaration index, relation index)
  std::vector<std::tuple<int, int, int, size_t, size_t>> seg_subject_decisions;
  std::vector<std::pair<std::string, std::string>> endpoints(doc.relations.size());
  for (size_t k = 0; k < doc.relations.size(); ++k) {
    const auto& r = doc.relations[k];
    std::string subject = intro_key(r.source) > intro_key(r.target) ? r.source : r.target;
    std::string point = subject == r.source ? r.target : r.source;
    endpoints[k] = {subject, point};
    if (segment_ids.count(subject))
      seg_subject_decisions.emplace_back(final_step(subject), full.rank(subject),
                                         first_step(subject), segment_decl[subject], k);
    else
      edu_subject_decisions[subject].push_back(k);
  }
  std::sort(seg_subject_decisions.begin(), seg_subject_decisions.end());

  std::vector<std::optional<Sdrs>> graph_cache(n + 1);
  auto ctx = [&](int i) -> const Sdrs& {
    if (!graph_cache[i]) graph_cache[i] = prefix_graph(doc, i, opts.normalize);
    return *graph_cache[i];
  };
  std::vector<std::optional<FrontierSet>> frontier_cache(n + 1);
  auto frontier_of = [&](int i) -> const FrontierSet& {
    if (!frontier_cache[i]) {
      FrontierSet fs;
      for (auto& rf : detail::component_frontiers(ctx(i)))
        for (auto& node : rf.nodes) fs.nodes.push_back(std::move(node));
      frontier_cache[i] = std::move(fs);
    }
    return *frontier_cache[i];
  };

  auto evaluate = [&](size_t k, int ctx_index, bool postponed, int slot) {
    const RelationInstance& d = doc.relations[k];
    const RelationType rt = classify(d.rel);
    AttachmentVerdict v;
    v.doc_id = doc.id;
    v.subject = endpoints[k].first;
    v.decision = d;
    v.point = endpoints[k].second;
    v.step = slot;
    const Sdrs& g = ctx(ctx_index);
    if (rt.structural) {
      v.status = VerdictStatus::Exempt;
    } else {
      auto prov = frontier_of(ctx_index).provenance_of(v.point);
      bool allow_open = rt.subordinating() || opts.coordinating_open_constituents;
      bool available =
          prov.has_value() && (allow_open || *prov != Provenance::OpenConstituent);
      if (available) {
        v.status = postponed ? VerdictStatus::PostponedResolvedCompliant
                             : VerdictStatus::Compliant;
        v.via = *prov;
      } else {
        v.status = postponed ? VerdictStatus::PostponedResolvedViolation
                             : VerdictStatus::Violation;
        if (prov.has_value() && *prov == Provenance::OpenConstituent)
          ++result.coordinating_rescues;
      }
    }
    v.distance = constituent_distance(g, v.point);
    v.adjacent = g.end_index(v.point) == g.label(g.last()).order_index;
    result.verdicts.push_back(std::move(v));
  };

  std::map<int, std::vector<size_t>> pending;  // resolution step -> relation indices
  auto dispatch = [&](size_t k, int ctx_index, int slot) {
    int point_intro = first_step(endpoints[k].second);
    if (ctx_index >= 1 && point_intro <= ctx_index) {
      evaluate(k, ctx_index, false, slot);
    } else if (point_intro <= slot) {
      evaluate(k, point_intro, true, slot);
    } else {
      pending[point_intro].push_back(k);
    }
  };

  size_t seg_cursor = 0;
  for (int s = 1; s <= n; ++s) {
    auto it = edu_subject_decisions.find(doc.edus[s - 1].id);
    if (it != edu_subject_decisions.end())
      for (size_t k : it->second) dispatch(k, s - 1, s);
    while (seg_cursor < seg_subject_decisions.size() &&
           std::get<0>(seg_subject_decisions[seg_cursor]) == s) {
      size_t k = std::get<4>(seg_subject_decisions[seg_cursor]);
      dispatch(k, std::get<2>(seg_subject_decisions[seg_cursor]) - 1, s);
      ++seg_cursor;
    }
    auto due = pending.find(s);
    if (due != pending.end()) {
      for (size_t k : due->second) evaluate(k, s, true, s);
      pending.erase(due);
    }
    result.steps.push_back({s, static_cast<int>(frontier_of(s).nodes.size()),
                            static_cast<int>(ctx(s).labels().size())});
  }

  for (const auto& [step, ks] : pending) {
    for (size_t k : ks) {
      AttachmentVerdict v;
      v.doc_id = doc.id;
      v.subject = endpoints[k].first;
      v.decision = doc.relations[k];
      v.point = endpoints[k].second;
      v.status = VerdictStatus::PostponedResolvedViolation;
      v.step = n;
      v.unresolvable = true;
      result.verdicts.push_back(std::move(v));
    }
  }

  result.components_at_end = static_cast<int>(ctx(n).components().size());
  int violating = 0;
  for (const auto& v : result.verdicts)
    if (v.status == VerdictStatus::Violation ||
        v.status == VerdictStatus::PostponedResolvedViolation)
      ++violating;
  result.violations = violating + (result.components_at_end - 1);
  return result;
}

inline bool compliant_status(VerdictStatus s, bool include_structural = false) {
  return s == VerdictStatus::Compliant || s == VerdictStatus::PostponedResolvedCompliant ||
         (include_structural && s == VerdictStatus::Exempt);
}

inline bool violation_status(VerdictStatus s) {
  return s == VerdictStatus::Violation || s == VerdictStatus::PostponedResolvedViolation;
}

// Compliant decisions over all non-exempt decisions. include_structural
// folds exempt decisions in as compliant instead.
inline std::optional<double> rfc_r_score(const std::vector<AttachmentVerdict>& verdicts,
                                         bool include_structural = false) {
  if (verdicts.empty()) throw Error(Errc::EmptyInput, "no verdicts");
  long long num = 0, den = 0;
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::Exempt && !include_structural) continue;
    ++den;
    if (compliant_status(v.status, include_structural)) ++num;
  }
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

// Fraction of decision-bearing EDUs attached compliantly, directly or as
// part of a complex segment that attached compliantly.
inline std::optional<double> rfc_edu_score(const std::vector<AttachmentVerdict>& verdicts,
                                           const std::vector<Document>& docs,
                                           bool include_structural = false) {
  if (verdicts.empty()) throw Error(Errc::EmptyInput, "no verdicts");
  std::unordered_map<std::string, const Document*> doc_by_id;
  for (const auto& d : docs) doc_by_id[d.id] = &d;

  struct EduFlags {
    bool in_denominator = false;
    bool direct_compliant = false;
  };
  std::map<std::pair<std::string, std::string>, EduFlags> edus;
  std::map<std::string, std::unordered_set<std::string>> rescued_segments;

  for (const auto& v : verdicts) {
    auto dit = doc_by_id.find(v.doc_id);
    if (dit == doc_by_id.end()) throw Error(Errc::UnknownDocument, v.doc_id);
    const Document& doc = *dit->second;
    bool subject_is_segment =
        std::any_of(doc.segments.begin(), doc.segments.end(),
                    [&](const ComplexSegment& s) { return s.id == v.subject; });
    bool counts = v.status != VerdictStatus::Exempt || include_structural;
    if (subject_is_segment) {
      if (compliant_status(v.status, include_structural))
        rescued_segments[v.doc_id].insert(v.subject);
      continue;
    }
    if (!counts) continue;
    EduFlags& f = edus[{v.doc_id, v.subject}];
    f.in_denominator = true;
    if (compliant_status(v.status, include_structural)) f.direct_compliant = true;
  }

  // transitive EDU membership per rescued segment
  std::map<std::string, std::unordered_set<std::string>> rescued_edus;
  for (const auto& [doc_id, segs] : rescued_segments) {
    const Document& doc = *doc_by_id.at(doc_id);
    std::unordered_map<std::string, const ComplexSegment*> by_id;
    for (const auto& s : doc.segments) by_id[s.id] = &s;
    auto& out = rescued_edus[doc_id];
    for (const auto& seg : segs) {
      std::vector<std::string> stack{seg};
      std::unordered_set<std::string> seen;
      while (!stack.empty()) {
        std::string cur = std::move(stack.back());
        stack.pop_back();
        auto it = by_id.find(cur);
        if (it == by_id.end()) {
          out.insert(cur);
          continue;
        }
        for (const auto& m : it->second->members)
          if (seen.insert(m).second) stack.push_back(m);
      }
    }
  }

  long long num = 0, den = 0;
  for (const auto& [key, flags] : edus) {
    if (!flags.in_denominator) continue;
    ++den;
    bool rescued = false;
    auto rit = rescued_edus.find(key.first);
    if (rit != rescued_edus.end()) rescued = rit->second.count(key.second) > 0;
    if (flags.direct_compliant || rescued) ++num;
  }
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

struct ValidationReport {
  std::vector<DocumentResult> documents;
  CorpusStats stats;
};

inline ValidationReport validate_corpus(const std::vector<Document>& docs,
                                        const ReplayOptions& opts = {}) {
  if (docs.empty()) throw Error(Errc::EmptyInput, "empty corpus");
  ValidationReport report;
  std::vector<AttachmentVerdict> all;
  double open_sum = 0.0;
  long long steps_total = 0;
  for (const auto& d : docs) {
    DocumentResult r = replay(d, opts);
    for (const auto& v : r.verdicts) all.push_back(v);
    for (const auto& s : r.steps) {
      open_sum += static_cast<double>(s.frontier_size) / s.label_count;
      ++steps_total;
    }
    report.stats.violations_per_doc[r.id] = r.violations;
    report.stats.coordinating_rescues += r.coordinating_rescues;
    report.documents.push_back(std::move(r));
  }

  CorpusStats& st = report.stats;
  st.documents = static_cast<long long>(docs.size());
  st.decisions = static_cast<long long>(all.size());
  long long measured = 0, nonlocal = 0, nonadjacent = 0;
  for (const auto& v : all) {
    if (v.status == VerdictStatus::Exempt)
      ++st.exempt;
    else if (compliant_status(v.status))
      ++st.compliant;
    else
      ++st.violating;
    if (v.unresolvable) ++st.unresolvable;
    if (v.status != VerdictStatus::Exempt && v.distance.has_value()) {
      ++measured;
      ++st.distance_histogram[*v.distance];
      if (*v.distance >= 2) ++nonlocal;
      if (v.adjacent.has_value() && !*v.adjacent) ++nonadjacent;
    }
  }
  if (!all.empty()) {
    st.rfc_r = rfc_r_score(all, opts.include_structural);
    st.rfc_edu = rfc_edu_score(all, docs, opts.include_structural);
  }
  if (measured > 0) {
    st.nonlocal_fraction = static_cast<double>(nonlocal) / measured;
    st.nonadjacent_fraction = static_cast<double>(nonadjacent) / measured;
  }
  st.open_fraction = steps_total > 0 ? open_sum / steps_total : 1.0;
  long long over5 = 0;
  for (const auto& [_, count] : st.violations_per_doc)
    if (count > 5) ++over5;
  st.docs_over_5_violations_fraction = static_cast<double>(over5) / docs.size();
  return report;
}

inline CorpusStats corpus_stats(const std::vector<Document>& docs,
                                const ReplayOptions& opts = {}) {
  return validate_corpus(docs, opts).stats;
}

}  // namespace sdrt
