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

enum class Provenance {
  Last,
  Outscopes,
  SubordinatingParent,
  TransitiveClosure,
  OpenConstituent,
  DisjointComponent,
};

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Last: return "Last";
    case Provenance::Outscopes: return "Outscopes";
    case Provenance::SubordinatingParent: return "SubordinatingParent";
    case Provenance::TransitiveClosure: return "TransitiveClosure";
    case Provenance::OpenConstituent: return "OpenConstituent";
    case Provenance::DisjointComponent: return "DisjointComponent";
  }
  return "?";
}

struct FrontierNode {
  std::string id;
  Provenance provenance;
  int depth = 0;  // breadth-first distance from the frontier's anchor
};

struct FrontierSet {
  std::vector<FrontierNode> nodes;  // nearest-to-LAST first

  bool contains(const std::string& id) const {
    return std::any_of(nodes.begin(), nodes.end(),
                       [&](const FrontierNode& n) { return n.id == id; });
  }
  std::optional<Provenance> provenance_of(const std::string& id) const {
    for (const auto& n : nodes)
      if (n.id == id) return n.provenance;
    return std::nullopt;
  }
  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (const auto& n : nodes) out.push_back(n.id);
    return out;
  }
};

// The labels immediately dominating alpha: complex segments holding it as a
// direct member, plus sources of subordinating relations targeting it.
inline std::vector<std::string> dominance_parents(const Sdrs& g, const std::string& alpha) {
  g.label(alpha);
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& s : g.segments())
    if (std::find(s.members.begin(), s.members.end(), alpha) != s.members.end() &&
        seen.insert(s.id).second)
      out.push_back(s.id);
  for (const auto& r : g.relations())
    if (r.target == alpha && classify(r.rel).subordinating() && seen.insert(r.source).second)
      out.push_back(r.source);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct FrontierBuilder {
  const Sdrs& g;
  std::unordered_map<std::string, std::vector<std::string>> member_parents;
  std::unordered_map<std::string, std::vector<std::string>> relation_parents;
  std::unordered_map<std::string, size_t> placed;  // id -> index into nodes
  std::vector<FrontierNode> nodes;

  explicit FrontierBuilder(const Sdrs& graph) : g(graph) {
    for (const auto& s : g.segments())
      for (const auto& m : s.members) member_parents[m].push_back(s.id);
    for (const auto& r : g.relations())
      if (classify(r.rel).subordinating()) relation_parents[r.target].push_back(r.source);
  }

  void place(const std::string& id, Provenance prov, int depth) {
    if (placed.count(id)) return;
    placed[id] = nodes.size();
    nodes.push_back({id, prov, depth});
  }

  // Transitive dominance closure from start, optionally restricted to an
  // allowed label set (used for the per-segment open-constituent recursion,
  // where every newly reached node is marked OpenConstituent).
  void walk(const std::string& start, const std::unordered_set<std::string>* allowed,
            int base_depth, bool open) {
    place(start, open ? Provenance::OpenConstituent : Provenance::Last, base_depth);
    std::vector<std::string> frontier{start};
    std::unordered_set<std::string> visited{start};
    int d = 0;
    while (!frontier.empty()) {
      ++d;
      std::vector<std::string> next;
      for (const auto& v : frontier) {
        auto consider = [&](const std::string& parent, bool via_membership) {
          if (allowed && !allowed->count(parent)) return;
          if (!visited.insert(parent).second) return;
          Provenance prov =
              open ? Provenance::OpenConstituent
                   : (d == 1 ? (via_membership ? Provenance::Outscopes
                                               : Provenance::SubordinatingParent)
                             : Provenance::TransitiveClosure);
          place(parent, prov, base_depth + d);
          next.push_back(parent);
        };
        auto mp = member_parents.find(v);
        if (mp != member_parents.end())
          for (const auto& p : mp->second) consider(p, true);
        auto rp = relation_parents.find(v);
        if (rp != relation_parents.end())
          for (const auto& p : rp->second) consider(p, false);
      }
      frontier = std::move(next);
    }
  }

  // A complex segment on the frontier keeps its own open constituents
  // available: recurse into the member-induced subgraph anchored at the
  // member covering the latest text.
  void recurse_open_constituents() {
    std::unordered_set<std::string> expanded;
    for (size_t i = 0; i < nodes.size(); ++i) {
      const std::string id = nodes[i].id;
      if (!g.is_complex(id) || !expanded.insert(id).second) continue;
      const auto& members = g.members(id);
      const std::string* sub_last = nullptr;
      for (const auto& m : members) {
        if (!sub_last) {
          sub_last = &m;
          continue;
        }
        int me = g.end_index(m), se = g.end_index(*sub_last);
        int ms = g.start_index(m), ss = g.start_index(*sub_last);
        if (me > se || (me == se && (ms > ss || (ms == ss && m < *sub_last)))) sub_last = &m;
      }
      std::unordered_set<std::string> allowed(members.begin(), members.end());
      walk(*sub_last, &allowed, nodes[placed.at(id)].depth + 1, true);
    }
  }

  FrontierSet finish() {
    std::stable_sort(nodes.begin(), nodes.end(),
                     [&](const FrontierNode& a, const FrontierNode& b) {
                       if (a.depth != b.depth) return a.depth < b.depth;
                       int ae = g.end_index(a.id), be = g.end_index(b.id);
                       if (ae != be) return ae > be;
                       return a.id < b.id;
                     });
    return FrontierSet{std::move(nodes)};
  }
};

}  // namespace detail

// The right frontier anchored at start: start itself, everything dominating
// it transitively (membership and subordinating relations), and, for each
// complex segment so reached, the open constituents of its member subgraph.
inline FrontierSet right_frontier(const Sdrs& g, const std::string& start) {
  g.label(start);
  detail::FrontierBuilder builder(g);
  builder.walk(start, nullptr, 0, false);
  builder.recurse_open_constituents();
  return builder.finish();
}

namespace detail {

// Per-component frontiers, most recent component first, with each node's
// intrinsic provenance (no DisjointComponent overwrite). This is the basis
// for attachment availability, where the open-constituent distinction must
// survive for every component.
inline std::vector<FrontierSet> component_frontiers(const Sdrs& g) {
  std::vector<FrontierSet> out;
  for (const auto& c : g.components()) out.push_back(right_frontier(g, c.last));
  return out;
}

}  // namespace detail

// Union of per-component right frontiers. Nodes contributed by components
// other than the one holding the graph's LAST are marked DisjointComponent.
inline FrontierSet right_frontier_union(const Sdrs& g) {
  FrontierSet out;
  bool first = true;
  for (auto& rf : detail::component_frontiers(g)) {
    for (auto& n : rf.nodes) {
      if (!first) n.provenance = Provenance::DisjointComponent;
      out.nodes.push_back(std::move(n));
    }
    first = false;
  }
  return out;
}

// Attachment availability: structural relations are exempt from the RFC and
// may target anything; subordinating relations reach the full frontier union
// including open constituents; coordinating relations exclude the nodes that
// are only available as open constituents (the gate the final parameter can
// lift, for measuring that reading).
inline std::vector<std::string> available_attachment_points(
    const Sdrs& g, const RelationType& incoming, bool coordinating_open_constituents = false) {
  std::vector<std::string> out;
  if (incoming.structural) {
    for (const auto& l : g.labels()) out.push_back(l.id);
    return out;
  }
  bool allow_open = incoming.subordinating() || coordinating_open_constituents;
  for (const auto& rf : detail::component_frontiers(g))
    for (const auto& n : rf.nodes)
      if (allow_open || n.provenance != Provenance::OpenConstituent) out.push_back(n.id);
  return out;
}

}  // namespace sdrt
