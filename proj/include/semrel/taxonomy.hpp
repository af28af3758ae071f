#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semrel {

/// Dense handle of a concept inside one Taxonomy. Only meaningful together
/// with the taxonomy that issued it.
enum class NodeId : std::uint32_t {};

constexpr std::size_t to_index(NodeId n) noexcept { return static_cast<std::size_t>(n); }
constexpr NodeId to_node(std::size_t i) noexcept { return static_cast<NodeId>(i); }

enum class RelationKind { Par, Chd, Rb, Rn, Term };

std::string_view relation_name(RelationKind kind);
std::optional<RelationKind> parse_relation(std::string_view name);
RelationKind inverse(RelationKind kind);

/// Which relation pairs make up the hierarchy.
enum class EdgeSet { ParChd, RbRn, Both };

/// Depth of a concept in a multi-parent DAG: shortest or longest root path.
enum class DepthMode { Min, Max };

struct HierarchyConfig {
  EdgeSet edge_set = EdgeSet::ParChd;
  DepthMode depth_mode = DepthMode::Max;
};

/// `source REL target`: REL is the relation of target to source, so
/// `A1 PAR A` makes A a parent of A1 (UMLS MRREL reading).
struct Relation {
  std::string source;
  RelationKind kind;
  std::string target;
  std::string origin;  // "file:line" for diagnostics, may be empty
};

/// Raw declared content of a taxonomy, in file order. Taxonomy::build
/// validates it.
struct TaxonomySource {
  struct Concept {
    std::string id;
    std::string preferred_term;
  };
  struct Definition {
    std::string concept_id;
    std::string text;
    std::string origin;
  };
  struct IndexEntry {
    std::string term;
    std::string concept_id;
    std::string origin;
  };

  std::vector<Concept> concepts;
  std::vector<Relation> relations;
  std::vector<Definition> definitions;
  std::vector<IndexEntry> index;
};

struct Neighbor {
  NodeId node;
  RelationKind kind;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct LeafStats {
  std::size_t leaves = 0;      // leaf descendants, excluding the concept
  std::size_t subsumers = 0;   // ancestors, including the concept
  std::size_t max_leaves = 0;  // leaves in the whole taxonomy

  friend bool operator==(const LeafStats&, const LeafStats&) = default;
};

/// Immutable concept DAG. All queries are const and thread-safe.
///
/// Ancestor sets are reflexive, depth counts nodes (root has depth 1), and
/// spath counts nodes along the shortest undirected hierarchy path, so
/// spath(c, c) == 1.
class Taxonomy {
 public:
  static Taxonomy build(const TaxonomySource& source, HierarchyConfig config = {});

  std::size_t size() const noexcept { return ids_.size(); }
  NodeId root() const noexcept { return root_; }
  const HierarchyConfig& config() const noexcept { return config_; }

  std::optional<NodeId> find(std::string_view id) const;
  /// Throws Errc::UnknownConcept.
  NodeId node(std::string_view id) const;
  const std::string& id(NodeId n) const { return ids_[to_index(n)]; }
  const std::string& preferred_term(NodeId n) const { return preferred_[to_index(n)]; }

  std::span<const NodeId> parents(NodeId n) const { return parents_[to_index(n)]; }
  std::span<const NodeId> children(NodeId n) const { return children_[to_index(n)]; }
  bool is_leaf(NodeId n) const { return children_[to_index(n)].empty(); }
  std::size_t leaf_count() const noexcept { return leaf_count_; }

  /// All concepts linked by any relation kind (inverses materialized),
  /// sorted by ConceptId, the concept itself excluded. A concept linked by
  /// several kinds appears once per kind.
  std::span<const Neighbor> neighbors(NodeId n) const { return neighbors_[to_index(n)]; }
  std::span<const std::string> definitions(NodeId n) const { return definitions_[to_index(n)]; }

  /// Senses of a surface term (lookup is lowercased). Empty when unmapped.
  std::span<const NodeId> senses(std::string_view term) const;
  const std::unordered_map<std::string, std::vector<NodeId>>& index() const noexcept { return index_; }

  /// Reflexive ancestor set sorted by NodeId.
  std::span<const NodeId> ancestors(NodeId n) const { return ancestors_[to_index(n)]; }
  /// Strict descendant set sorted by NodeId.
  std::vector<NodeId> descendants(NodeId n) const;
  int depth(NodeId n) const { return depth_[to_index(n)]; }
  /// Throws Errc::UnreachablePair when no undirected hierarchy path exists.
  int spath(NodeId a, NodeId b) const;
  /// Shared ancestors with no child inside the shared set, sorted by NodeId.
  std::vector<NodeId> lcs_set(NodeId a, NodeId b) const;
  LeafStats leaf_stats(NodeId n) const;

 private:
  Taxonomy() = default;

  HierarchyConfig config_;
  std::vector<std::string> ids_;
  std::vector<std::string> preferred_;
  std::unordered_map<std::string, NodeId> by_id_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::vector<Neighbor>> neighbors_;
  std::vector<std::vector<std::string>> definitions_;
  std::vector<std::vector<NodeId>> ancestors_;
  std::vector<int> depth_;
  std::unordered_map<std::string, std::vector<NodeId>> index_;
  NodeId root_{};
  std::size_t leaf_count_ = 0;
};

struct TaxonomyFiles {
  std::filesystem::path concepts;
  std::filesystem::path relations;
  std::filesystem::path definitions;  // optional, may be empty
  std::filesystem::path index;        // optional, may be empty
};

TaxonomySource read_taxonomy_source(const TaxonomyFiles& files);
Taxonomy load_taxonomy(const TaxonomyFiles& files, HierarchyConfig config = {});

}  // namespace semrel
