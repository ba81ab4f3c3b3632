#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sdrt/errors.hpp"
#include "sdrt/relations.hpp"
#include "sdrt/sdrs.hpp"

namespace sdrt {

namespace detail {

inline Sdrs rebuild(const Sdrs& g, std::vector<RelationInstance> relations,
                    std::vector<ComplexSegment> segments) {
  std::vector<Label> edus;
  for (const auto& l : g.labels())
    if (l.kind == LabelKind::Edu) edus.push_back(l);
  return build_sdrs(std::move(edus), std::move(relations), std::move(segments));
}

// Undirected connectivity between a and b using relation edges and
// membership links whose endpoints both lie in `allowed`.
inline bool connected_within(const std::vector<RelationInstance>& relations,
                             const std::vector<ComplexSegment>& segments,
                             const std::unordered_set<std::string>& allowed,
                             const std::string& a, const std::string& b) {
  std::unordered_map<std::string, std::vector<std::string>> adj;
  auto link = [&](const std::string& x, const std::string& y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  };
  for (const auto& r : relations)
    if (allowed.count(r.source) && allowed.count(r.target)) link(r.source, r.target);
  for (const auto& s : segments)
    if (allowed.count(s.id))
      for (const auto& m : s.members)
        if (allowed.count(m)) link(s.id, m);
  std::unordered_set<std::string> seen{a};
  std::vector<std::string> queue{a};
  while (!queue.empty()) {
    std::string cur = std::move(queue.back());
    queue.pop_back();
    if (cur == b) return true;
    for (const auto& nxt : adj[cur])
      if (seen.insert(nxt).second) queue.push_back(nxt);
  }
  return false;
}

inline std::string fresh_segment_id(const Sdrs& g,
                                    const std::vector<ComplexSegment>& pending) {
  std::unordered_set<std::string> used;
  for (const auto& l : g.labels()) used.insert(l.id);
  for (const auto& s : pending) used.insert(s.id);
  if (!used.count("π")) return "π";
  for (int n = 2;; ++n) {
    std::string candidate = "π" + std::to_string(n);
    if (!used.count(candidate)) return candidate;
  }
}

inline const std::unordered_set<RelationName>& distributive_relations() {
  static const std::unordered_set<RelationName> set{
      RelationName::Elaboration, RelationName::EntityElaboration, RelationName::Frame,
      RelationName::Attribution, RelationName::Comment};
  return set;
}

}  // namespace detail

// Adds Continuation(x, y) between textually adjacent members of every
// complex segment that are not yet connected inside the segment's member
// subgraph.
inline Sdrs ensure_continuation_coherence(const Sdrs& g, bool* changed = nullptr) {
  auto relations = g.relations();
  auto segments = g.segments();
  std::sort(segments.begin(), segments.end(),
            [&](const ComplexSegment& a, const ComplexSegment& b) {
              int sa = g.start_index(a.id), sb = g.start_index(b.id);
              if (sa != sb) return sa < sb;
              return a.id < b.id;
            });
  bool any = false;
  for (const auto& seg : segments) {
    std::unordered_set<std::string> allowed(seg.members.begin(), seg.members.end());
    for (size_t i = 0; i + 1 < seg.members.size(); ++i) {
      const std::string& x = seg.members[i];
      const std::string& y = seg.members[i + 1];
      if (!detail::connected_within(relations, g.segments(), allowed, x, y)) {
        relations.push_back(
            {RelationName::Continuation, x, y, Origin::InferredContinuation});
        any = true;
      }
    }
  }
  if (changed) *changed = any;
  if (!any) return g;
  return detail::rebuild(g, std::move(relations), g.segments());
}

// Groups a maximal rightward Continuation chain reached through some
// non-Continuation relation into a fresh complex segment, lifting those
// relations onto the new segment. Runs to its own fixpoint.
inline Sdrs expand_continuations(const Sdrs& g, bool* changed = nullptr) {
  Sdrs cur = g;
  bool any = false;
  const size_t cap = 2 * g.labels().size() + 4;
  for (size_t iteration = 0;; ++iteration) {
    if (iteration >= cap)
      throw Error(Errc::NonTermination, "expansion failed to reach a fixpoint");
    auto relations = cur.relations();
    auto segments = cur.segments();

    auto has_incoming_continuation = [&](const std::string& id) {
      for (const auto& r : relations)
        if (r.rel == RelationName::Continuation && r.target == id) return true;
      return false;
    };
    auto follow_chain = [&](const std::string& head) {
      std::vector<std::string> chain{head};
      std::unordered_set<std::string> visited{head};
      std::string at = head;
      for (;;) {
        const std::string* next = nullptr;
        for (const auto& r : relations) {
          if (r.rel != RelationName::Continuation || r.source != at) continue;
          if (visited.count(r.target)) continue;
          if (!next || cur.start_index(r.target) < cur.start_index(*next) ||
              (cur.start_index(r.target) == cur.start_index(*next) &&
               (cur.end_index(r.target) < cur.end_index(*next) ||
                (cur.end_index(r.target) == cur.end_index(*next) && r.target < *next))))
            next = &r.target;
        }
        if (!next) break;
        chain.push_back(*next);
        visited.insert(*next);
        at = *next;
      }
      return chain;
    };

    std::optional<Sdrs> next_graph;
    for (const auto& trigger : relations) {
      if (trigger.rel == RelationName::Continuation) continue;
      const std::string head = trigger.target;
      if (has_incoming_continuation(head)) continue;
      std::vector<std::string> chain = follow_chain(head);
      if (chain.size() < 2) continue;
      bool grouped = false;
      for (const auto& s : segments) {
        grouped = std::all_of(chain.begin(), chain.end(), [&](const std::string& c) {
          return cur.contains_transitively(s.id, c);
        });
        if (grouped) break;
      }
      if (grouped) continue;

      std::string seg_id = detail::fresh_segment_id(cur, {});
      std::unordered_set<std::string> in_chain(chain.begin(), chain.end());
      auto inside_chain = [&](const std::string& id) {
        if (in_chain.count(id)) return true;
        for (const auto& c : chain)
          if (cur.is_complex(c) && cur.contains_transitively(c, id)) return true;
        return false;
      };
      auto lifted = relations;
      for (auto& r : lifted) {
        if (r.rel == RelationName::Continuation || r.target != head) continue;
        if (inside_chain(r.source)) continue;
        r.target = seg_id;
        r.origin = Origin::InferredExpansion;
      }
      auto extended = segments;
      extended.push_back({seg_id, std::move(chain)});
      try {
        next_graph = detail::rebuild(cur, std::move(lifted), std::move(extended));
      } catch (const Error& e) {
        // Grouping this chain would close a dominance loop (a lifted source
        // sits below one of the chain members); leave the annotation as is.
        if (e.code() != Errc::MembershipCycle) throw;
        continue;
      }
      break;
    }

    if (!next_graph) break;
    any = true;
    cur = std::move(*next_graph);
  }
  if (changed) *changed = any;
  return cur;
}

// For R(a, σ) with R in the distributive list and σ a complex segment whose
// textually adjacent members are pairwise joined by Continuation edges, adds
// R(a, m) for every direct member m. Distribution is one level deep per call.
inline Sdrs factor_distributive(const Sdrs& g, bool* changed = nullptr) {
  auto relations = g.relations();
  bool any = false;
  auto already_present = [&](RelationName rel, const std::string& s, const std::string& t) {
    for (const auto& r : relations)
      if (r.rel == rel && r.source == s && r.target == t) return true;
    return false;
  };
  auto continuation_between = [&](const std::string& x, const std::string& y) {
    for (const auto& r : relations)
      if (r.rel == RelationName::Continuation &&
          ((r.source == x && r.target == y) || (r.source == y && r.target == x)))
        return true;
    return false;
  };
  const size_t snapshot = relations.size();
  for (size_t i = 0; i < snapshot; ++i) {
    const RelationInstance r = relations[i];
    if (!detail::distributive_relations().count(r.rel)) continue;
    if (!g.is_complex(r.target)) continue;
    const auto& members = g.members(r.target);
    if (members.size() < 2) continue;
    bool chained = true;
    for (size_t m = 0; m + 1 < members.size(); ++m)
      if (!continuation_between(members[m], members[m + 1])) {
        chained = false;
        break;
      }
    if (!chained) continue;
    for (const auto& m : members) {
      if (already_present(r.rel, r.source, m)) continue;
      relations.push_back({r.rel, r.source, m, Origin::InferredFactoring});
      any = true;
    }
  }
  if (changed) *changed = any;
  if (!any) return g;
  return detail::rebuild(g, std::move(relations), g.segments());
}

// Fixpoint of the three closure operations. The iteration cap flags
// pathological inputs; each pass strictly adds structure bounded by the
// node count, so well-formed graphs converge long before it.
inline Sdrs normalize(const Sdrs& g) {
  Sdrs cur = g;
  const size_t cap = 2 * g.labels().size() + 4;
  for (size_t iteration = 0;; ++iteration) {
    if (iteration >= cap)
      throw Error(Errc::NonTermination, "normalize failed to reach a fixpoint");
    bool c1 = false, c2 = false, c3 = false;
    cur = ensure_continuation_coherence(cur, &c1);
    cur = expand_continuations(cur, &c2);
    cur = factor_distributive(cur, &c3);
    if (!c1 && !c2 && !c3) break;
  }
  return cur;
}

}  // namespace sdrt
