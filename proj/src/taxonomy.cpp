#include "semrel/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "semrel/error.hpp"
#include "text_util.hpp"

namespace semrel {

namespace {

constexpr RelationKind kAllKinds[] = {RelationKind::Par, RelationKind::Chd, RelationKind::Rb,
                                      RelationKind::Rn, RelationKind::Term};

bool valid_concept_id(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(),
                      [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

std::string where(const std::string& origin) { return origin.empty() ? "" : " (" + origin + ")"; }

bool uses_par(EdgeSet s) { return s == EdgeSet::ParChd || s == EdgeSet::Both; }
bool uses_rb(EdgeSet s) { return s == EdgeSet::RbRn || s == EdgeSet::Both; }

void sort_unique(std::vector<NodeId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string_view relation_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Par: return "PAR";
    case RelationKind::Chd: return "CHD";
    case RelationKind::Rb: return "RB";
    case RelationKind::Rn: return "RN";
    case RelationKind::Term: return "TERM";
  }
  return "?";
}

std::optional<RelationKind> parse_relation(std::string_view name) {
  for (RelationKind k : kAllKinds) {
    if (relation_name(k) == name) return k;
  }
  return std::nullopt;
}

RelationKind inverse(RelationKind kind) {
  switch (kind) {
    case RelationKind::Par: return RelationKind::Chd;
    case RelationKind::Chd: return RelationKind::Par;
    case RelationKind::Rb: return RelationKind::Rn;
    case RelationKind::Rn: return RelationKind::Rb;
    case RelationKind::Term: return RelationKind::Term;
  }
  return kind;
}

Taxonomy Taxonomy::build(const TaxonomySource& source, HierarchyConfig config) {
  Taxonomy t;
  t.config_ = config;

  for (const auto& c : source.concepts) {
    if (!valid_concept_id(c.id)) {
      throw Error(Errc::Parse, "invalid ConceptId '" + c.id + "'");
    }
    auto [it, inserted] = t.by_id_.emplace(c.id, to_node(t.ids_.size()));
    if (!inserted) throw Error(Errc::Parse, "duplicate ConceptId " + c.id);
    t.ids_.push_back(c.id);
    t.preferred_.push_back(c.preferred_term);
  }
  const std::size_t n = t.ids_.size();
  if (n == 0) throw Error(Errc::RootCount, "zero roots: taxonomy declares no concepts");

  auto resolve = [&t](const std::string& id, const std::string& origin) {
    auto it = t.by_id_.find(id);
    if (it == t.by_id_.end()) {
      throw Error(Errc::UndeclaredConcept, "undeclared ConceptId " + id + where(origin));
    }
    return it->second;
  };

  // Normalized relation set: every edge together with its inverse.
  std::set<std::tuple<NodeId, RelationKind, NodeId>> edges;
  for (const auto& r : source.relations) {
    NodeId s = resolve(r.source, r.origin);
    NodeId d = resolve(r.target, r.origin);
    edges.emplace(s, r.kind, d);
    edges.emplace(d, inverse(r.kind), s);
  }

  t.parents_.assign(n, {});
  t.children_.assign(n, {});
  t.neighbors_.assign(n, {});
  for (const auto& [s, kind, d] : edges) {
    bool parent_edge = (kind == RelationKind::Par && uses_par(config.edge_set)) ||
                       (kind == RelationKind::Rb && uses_rb(config.edge_set));
    if (parent_edge) {
      if (s == d) throw Error(Errc::Cycle, "cycle detected: " + t.ids_[to_index(s)] + " is its own parent");
      t.parents_[to_index(s)].push_back(d);
      t.children_[to_index(d)].push_back(s);
    }
    if (s != d) t.neighbors_[to_index(s)].push_back({d, kind});
  }
  for (std::size_t i = 0; i < n; ++i) {
    sort_unique(t.parents_[i]);
    sort_unique(t.children_[i]);
    auto& nb = t.neighbors_[i];
    std::sort(nb.begin(), nb.end(), [&t](const Neighbor& a, const Neighbor& b) {
      const auto& ia = t.ids_[to_index(a.node)];
      const auto& ib = t.ids_[to_index(b.node)];
      if (ia != ib) return ia < ib;
      return a.kind < b.kind;
    });
  }

  std::vector<NodeId> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.parents_[i].empty()) roots.push_back(to_node(i));
  }
  if (roots.empty()) throw Error(Errc::RootCount, "zero roots: every concept has a parent");
  if (roots.size() > 1) {
    std::string names;
    for (std::size_t i = 0; i < roots.size() && i < 5; ++i) {
      names += (i ? ", " : "") + t.ids_[to_index(roots[i])];
    }
    if (roots.size() > 5) names += ", ...";
    throw Error(Errc::RootCount,
                "multiple roots (" + std::to_string(roots.size()) + "): " + names);
  }
  t.root_ = roots.front();

  // Kahn's algorithm over parent->child edges; leftovers sit on a cycle.
  std::vector<std::size_t> pending(n);
  for (std::size_t i = 0; i < n; ++i) pending[i] = t.parents_[i].size();
  std::vector<NodeId> order;
  order.reserve(n);
  order.push_back(t.root_);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (NodeId c : t.children_[to_index(order[head])]) {
      if (--pending[to_index(c)] == 0) order.push_back(c);
    }
  }
  if (order.size() != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pending[i] > 0) throw Error(Errc::Cycle, "cycle detected involving " + t.ids_[i]);
    }
  }

  t.ancestors_.assign(n, {});
  t.depth_.assign(n, 0);
  for (NodeId c : order) {
    auto& anc = t.ancestors_[to_index(c)];
    anc.push_back(c);
    for (NodeId p : t.parents_[to_index(c)]) {
      const auto& pa = t.ancestors_[to_index(p)];
      anc.insert(anc.end(), pa.begin(), pa.end());
    }
    sort_unique(anc);
  }

  if (config.depth_mode == DepthMode::Max) {
    for (NodeId c : order) {
      int d = 1;
      for (NodeId p : t.parents_[to_index(c)]) d = std::max(d, t.depth_[to_index(p)] + 1);
      t.depth_[to_index(c)] = d;
    }
  } else {
    std::deque<NodeId> queue{t.root_};
    t.depth_[to_index(t.root_)] = 1;
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId c : t.children_[to_index(u)]) {
        if (t.depth_[to_index(c)] == 0) {
          t.depth_[to_index(c)] = t.depth_[to_index(u)] + 1;
          queue.push_back(c);
        }
      }
    }
  }

  t.definitions_.assign(n, {});
  for (const auto& d : source.definitions) {
    t.definitions_[to_index(resolve(d.concept_id, d.origin))].push_back(d.text);
  }

  for (const auto& e : source.index) {
    NodeId c = resolve(e.concept_id, e.origin);
    std::string term = detail::to_lower(detail::trim(e.term));
    if (term.empty()) throw Error(Errc::Parse, "empty surface term" + where(e.origin));
    t.index_[term].push_back(c);
  }
  for (auto& [term, senses] : t.index_) sort_unique(senses);

  t.leaf_count_ = static_cast<std::size_t>(
      std::count_if(t.children_.begin(), t.children_.end(), [](const auto& c) { return c.empty(); }));
  return t;
}

std::optional<NodeId> Taxonomy::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

NodeId Taxonomy::node(std::string_view id) const {
  if (auto n = find(id)) return *n;
  throw Error(Errc::UnknownConcept, "unknown ConceptId " + std::string(id));
}

std::span<const NodeId> Taxonomy::senses(std::string_view term) const {
  auto it = index_.find(detail::to_lower(term));
  if (it == index_.end()) return {};
  return it->second;
}

std::vector<NodeId> Taxonomy::descendants(NodeId n) const {
  std::vector<char> seen(size(), 0);
  std::vector<NodeId> out;
  std::vector<NodeId> stack(children_[to_index(n)].begin(), children_[to_index(n)].end());
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    if (seen[to_index(u)]) continue;
    seen[to_index(u)] = 1;
    out.push_back(u);
    for (NodeId c : children_[to_index(u)]) {
      if (!seen[to_index(c)]) stack.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Taxonomy::spath(NodeId a, NodeId b) const {
  if (a == b) return 1;
  // Bidirectional BFS over undirected hierarchy edges. A whole level is
  // expanded before checking for a meeting so the minimum is exact.
  std::unordered_map<std::uint32_t, int> dist[2];
  std::vector<NodeId> frontier[2] = {{a}, {b}};
  dist[0][static_cast<std::uint32_t>(a)] = 0;
  dist[1][static_cast<std::uint32_t>(b)] = 0;

  while (!frontier[0].empty() && !frontier[1].empty()) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    auto& here = dist[side];
    const auto& there = dist[1 - side];
    std::vector<NodeId> next;
    int best = -1;
    for (NodeId u : frontier[side]) {
      int du = here[static_cast<std::uint32_t>(u)];
      auto visit = [&](NodeId v) {
        auto key = static_cast<std::uint32_t>(v);
        if (auto it = there.find(key); it != there.end()) {
          int total = du + 1 + it->second;
          if (best < 0 || total < best) best = total;
        }
        if (here.emplace(key, du + 1).second) next.push_back(v);
      };
      for (NodeId v : parents_[to_index(u)]) visit(v);
      for (NodeId v : children_[to_index(u)]) visit(v);
    }
    if (best >= 0) return best + 1;
    frontier[side] = std::move(next);
  }
  throw Error(Errc::UnreachablePair, "unreachable pair: " + id(a) + " and " + id(b));
}

std::vector<NodeId> Taxonomy::lcs_set(NodeId a, NodeId b) const {
  const auto& aa = ancestors_[to_index(a)];
  const auto& ab = ancestors_[to_index(b)];
  std::vector<NodeId> shared;
  std::set_intersection(aa.begin(), aa.end(), ab.begin(), ab.end(), std::back_inserter(shared));
  std::vector<NodeId> out;
  for (NodeId x : shared) {
    const auto& kids = children_[to_index(x)];
    bool has_shared_child = std::any_of(kids.begin(), kids.end(), [&shared](NodeId c) {
      return std::binary_search(shared.begin(), shared.end(), c);
    });
    if (!has_shared_child) out.push_back(x);
  }
  return out;
}

LeafStats Taxonomy::leaf_stats(NodeId n) const {
  LeafStats s;
  for (NodeId d : descendants(n)) {
    if (is_leaf(d)) ++s.leaves;
  }
  s.subsumers = ancestors_[to_index(n)].size();
  s.max_leaves = leaf_count_;
  return s;
}

}  // namespace semrel
