#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <utility>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sdrt/errors.hpp"
#include "sdrt/relations.hpp"

namespace sdrt {

enum class LabelKind { Edu, Complex };

// A discourse constituent: an elementary discourse unit or a complex segment.
// EDUs carry their 0-based textual position in order_index; complex segments
// keep order_index at -1 and derive their textual extent from their members.
struct Label {
  std::string id;
  LabelKind kind = LabelKind::Edu;
  int order_index = -1;

  friend bool operator==(const Label&, const Label&) = default;
};

enum class Origin { Annotated, InferredContinuation, InferredExpansion, InferredFactoring };

inline std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::Annotated: return "Annotated";
    case Origin::InferredContinuation: return "InferredContinuation";
    case Origin::InferredExpansion: return "InferredExpansion";
    case Origin::InferredFactoring: return "InferredFactoring";
  }
  return "?";
}

// A typed edge R(source, target). The source is the relation's first
// argument (the attachment point), the target the second (the constituent
// being attached).
struct RelationInstance {
  RelationName rel;
  std::string source;
  std::string target;
  Origin origin = Origin::Annotated;

  friend bool operator==(const RelationInstance&, const RelationInstance&) = default;
};

struct ComplexSegment {
  std::string id;
  std::vector<std::string> members;  // sorted by textual position of earliest contained EDU

  friend bool operator==(const ComplexSegment&, const ComplexSegment&) = default;
};

struct Component {
  std::vector<std::string> labels;
  std::string last;  // most recently introduced EDU in the component
};

// The SDRS tuple: labels A, the relation/membership structure, and LAST.
// Values are immutable after construction; every constructor-checked
// invariant therefore holds for the lifetime of the object.
class Sdrs {
 public:
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<RelationInstance>& relations() const { return relations_; }
  const std::vector<ComplexSegment>& segments() const { return segments_; }
  const std::string& last() const { return last_; }

  bool has(const std::string& id) const { return index_.count(id) > 0; }

  const Label& label(const std::string& id) const { return labels_[require(id)]; }

  bool is_complex(const std::string& id) const {
    return labels_[require(id)].kind == LabelKind::Complex;
  }

  const std::vector<std::string>& members(const std::string& id) const {
    auto it = seg_index_.find(id);
    if (it == seg_index_.end()) throw Error(Errc::UnknownLabel, "not a complex segment: " + id);
    return segments_[it->second].members;
  }

  // i-outscopes(gamma, alpha): alpha is a direct member of complex segment gamma.
  bool i_outscopes(const std::string& gamma, const std::string& alpha) const {
    require(alpha);
    auto it = seg_index_.find(gamma);
    if (it == seg_index_.end()) {
      require(gamma);
      return false;
    }
    const auto& ms = segments_[it->second].members;
    return std::find(ms.begin(), ms.end(), alpha) != ms.end();
  }

  bool contains_transitively(const std::string& seg, const std::string& x) const {
    require(seg);
    require(x);
    auto it = seg_index_.find(seg);
    if (it == seg_index_.end()) return false;
    std::vector<const std::string*> stack{&seg};
    std::unordered_set<std::string> seen;
    while (!stack.empty()) {
      const std::string& cur = *stack.back();
      stack.pop_back();
      auto sit = seg_index_.find(cur);
      if (sit == seg_index_.end()) continue;
      for (const auto& m : segments_[sit->second].members) {
        if (m == x) return true;
        if (seen.insert(m).second) stack.push_back(&m);
      }
    }
    return false;
  }

  // Textual extent, in EDU order indices, of the EDUs a constituent covers.
  int start_index(const std::string& id) const { return start_[require(id)]; }
  int end_index(const std::string& id) const { return end_[require(id)]; }

  // rank(EDU) = 0; rank(segment) = 1 + max member rank.
  int rank(const std::string& id) const { return rank_[require(id)]; }

  // Weakly connected components over relation edges plus membership links.
  // Each component reports its own last (its most recent EDU).
  std::vector<Component> components() const {
    int n = static_cast<int>(labels_.size());
    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    auto find = [&](int a) {
      while (root[a] != a) a = root[a] = root[root[a]];
      return a;
    };
    auto unite = [&](int a, int b) { root[find(a)] = find(b); };
    for (const auto& r : relations_) unite(index_.at(r.source), index_.at(r.target));
    for (const auto& s : segments_) {
      int si = index_.at(s.id);
      for (const auto& m : s.members) unite(si, index_.at(m));
    }
    std::unordered_map<int, Component> by_root;
    for (int i = 0; i < n; ++i) {
      Component& c = by_root[find(i)];
      c.labels.push_back(labels_[i].id);
      if (labels_[i].kind == LabelKind::Edu &&
          (c.last.empty() || labels_[i].order_index > label(c.last).order_index)) {
        c.last = labels_[i].id;
      }
    }
    std::vector<Component> out;
    out.reserve(by_root.size());
    for (auto& [_, c] : by_root) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [this](const Component& a, const Component& b) {
      return label(a.last).order_index > label(b.last).order_index;
    });
    return out;
  }

  friend bool operator==(const Sdrs& a, const Sdrs& b) {
    return a.labels_ == b.labels_ && a.relations_ == b.relations_ &&
           a.segments_ == b.segments_ && a.last_ == b.last_;
  }

  friend Sdrs build_sdrs(std::vector<Label> edus, std::vector<RelationInstance> relations,
                         std::vector<ComplexSegment> segments);

 private:
  Sdrs() = default;

  int require(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(Errc::UnknownLabel, id);
    return it->second;
  }

  std::vector<Label> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<RelationInstance> relations_;
  std::vector<ComplexSegment> segments_;
  std::unordered_map<std::string, int> seg_index_;  // label id -> segments_ position
  std::string last_;
  std::vector<int> start_, end_, rank_;
};

// Validates and assembles an Sdrs. EDUs arrive in textual order; entries
// without a preset order_index get their list position. LAST is the EDU
// with the highest order_index.
inline Sdrs build_sdrs(std::vector<Label> edus, std::vector<RelationInstance> relations,
                       std::vector<ComplexSegment> segments) {
  if (edus.empty()) throw Error(Errc::EmptyDocument, "an SDRS needs at least one EDU");

  Sdrs g;
  for (size_t i = 0; i < edus.size(); ++i) {
    Label l = std::move(edus[i]);
    if (l.kind != LabelKind::Edu)
      throw Error(Errc::SchemaError, "non-EDU label in EDU list: " + l.id);
    if (l.order_index < 0) l.order_index = static_cast<int>(i);
    if (!g.index_.emplace(l.id, static_cast<int>(g.labels_.size())).second)
      throw Error(Errc::DuplicateId, l.id);
    g.labels_.push_back(std::move(l));
  }
  std::unordered_set<int> seen_order;
  for (const auto& l : g.labels_)
    if (!seen_order.insert(l.order_index).second)
      throw Error(Errc::DuplicateOrderIndex, l.id);

  for (auto& s : segments) {
    if (s.members.empty()) throw Error(Errc::EmptySegment, s.id);
    if (!g.index_.emplace(s.id, static_cast<int>(g.labels_.size())).second)
      throw Error(Errc::DuplicateId, s.id);
    g.seg_index_[s.id] = static_cast<int>(g.segments_.size());
    g.labels_.push_back(Label{s.id, LabelKind::Complex, -1});
    g.segments_.push_back(std::move(s));
  }

  for (const auto& s : g.segments_)
    for (const auto& m : s.members)
      if (!g.index_.count(m))
        throw Error(Errc::DanglingEndpoint, "segment " + s.id + " member " + m);
  for (const auto& r : relations) {
    if (r.source == r.target) throw Error(Errc::SelfLoop, r.source);
    if (!g.index_.count(r.source)) throw Error(Errc::DanglingEndpoint, r.source);
    if (!g.index_.count(r.target)) throw Error(Errc::DanglingEndpoint, r.target);
  }
  g.relations_ = std::move(relations);

  // Dominance edges (membership plus subordinating relations) must be acyclic.
  int n = static_cast<int>(g.labels_.size());
  std::vector<std::vector<int>> down(n);
  for (const auto& s : g.segments_) {
    int si = g.index_.at(s.id);
    for (const auto& m : s.members) down[si].push_back(g.index_.at(m));
  }
  for (const auto& r : g.relations_)
    if (classify(r.rel).subordinating())
      down[g.index_.at(r.source)].push_back(g.index_.at(r.target));
  {
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack;
    for (int s0 = 0; s0 < n; ++s0) {
      if (state[s0] != 0) continue;
      stack.emplace_back(s0, 0);
      state[s0] = 1;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < down[v].size()) {
          int w = down[v][next++];
          if (state[w] == 1)
            throw Error(Errc::MembershipCycle,
                        "dominance cycle through " + g.labels_[w].id);
          if (state[w] == 0) {
            state[w] = 1;
            stack.emplace_back(w, 0);
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
  }

  // Textual extents and ranks, bottom-up over the (now known acyclic) membership DAG.
  g.start_.assign(n, -1);
  g.end_.assign(n, -1);
  g.rank_.assign(n, -1);
  auto compute = [&](auto&& self, int v) -> void {
    if (g.rank_[v] >= 0) return;
    const Label& l = g.labels_[v];
    if (l.kind == LabelKind::Edu) {
      g.start_[v] = g.end_[v] = l.order_index;
      g.rank_[v] = 0;
      return;
    }
    int lo = INT_MAX, hi = -1, rk = 0;
    for (const auto& m : g.segments_[g.seg_index_.at(l.id)].members) {
      int mi = g.index_.at(m);
      self(self, mi);
      lo = std::min(lo, g.start_[mi]);
      hi = std::max(hi, g.end_[mi]);
      rk = std::max(rk, g.rank_[mi] + 1);
    }
    g.start_[v] = lo;
    g.end_[v] = hi;
    g.rank_[v] = rk;
  };
  for (int v = 0; v < n; ++v) compute(compute, v);

  for (auto& s : g.segments_) {
    std::sort(s.members.begin(), s.members.end(), [&](const std::string& a, const std::string& b) {
      int ia = g.index_.at(a), ib = g.index_.at(b);
      if (g.start_[ia] != g.start_[ib]) return g.start_[ia] < g.start_[ib];
      if (g.end_[ia] != g.end_[ib]) return g.end_[ia] < g.end_[ib];
      return a < b;
    });
  }

  const Label* last = nullptr;
  for (const auto& l : g.labels_)
    if (l.kind == LabelKind::Edu && (!last || l.order_index > last->order_index)) last = &l;
  g.last_ = last->id;
  return g;
}

}  // namespace sdrt
