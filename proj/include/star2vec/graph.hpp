#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "star2vec/common.hpp"

namespace star2vec {

// person-to-person relations carry the (possibly ambiguous) social edges;
// person-to-entity relations attach people to typed entities.
enum class RelKind : std::uint8_t { person_to_person, person_to_entity };

struct LoadStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;  // distinct (u, r, v) triples, undirected
  std::size_t node_types = 0;
  std::size_t edge_types = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
  std::vector<std::string> warnings;
};

// Immutable typed multigraph with undirected storage. Adjacency lists hold
// distinct neighbors sorted by (neighbor type, id); parallel relation lists
// keep every relation connecting a pair, so multi-edges survive while exact
// duplicates are dropped.
class TypedGraph {
 public:
  class Builder;

  // --- type tables -------------------------------------------------------
  std::size_t node_type_count() const { return node_type_names_.size(); }
  std::size_t edge_type_count() const { return edge_type_names_.size(); }
  const std::string& node_type_name(NodeTypeId t) const { return node_type_names_[t]; }
  const std::string& edge_type_name(EdgeTypeId r) const { return edge_type_names_[r]; }
  std::optional<NodeTypeId> find_node_type(std::string_view name) const;
  std::optional<EdgeTypeId> find_edge_type(std::string_view name) const;
  RelKind relation_kind(EdgeTypeId r) const { return rel_kind_[r]; }
  // "person" is always registered as node type 0.
  NodeTypeId person_type() const { return 0; }
  const std::vector<EdgeTypeId>& person_relations() const { return r_ppl_; }
  std::vector<NodeTypeId> entity_types() const;

  // --- nodes --------------------------------------------------------------
  NodeId node_count() const { return static_cast<NodeId>(type_of_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  NodeTypeId type_of(NodeId u) const { return type_of_[u]; }
  bool is_person(NodeId u) const { return type_of_[u] == person_type(); }
  const std::string& external_id(NodeId u) const { return ext_ids_[u]; }
  std::optional<NodeId> find_node(std::string_view external_id) const;
  const std::vector<NodeId>& persons() const { return persons_; }

  // --- adjacency ----------------------------------------------------------
  // Distinct neighbors of u, sorted by (type, id).
  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_.data() + adj_off_[u], adj_.data() + adj_off_[u + 1]};
  }
  // Contiguous slice of neighbors(u) holding the type-t neighbors.
  std::span<const NodeId> neighbors_of_type(NodeId u, NodeTypeId t) const;
  // N(u, types): neighbors whose type is in `types`, in (type, id) order.
  std::vector<NodeId> neighbors_of_types(NodeId u, std::span<const NodeTypeId> types) const;
  // deg(u, t): number of distinct type-t neighbors. Unknown t yields 0.
  std::uint32_t typed_degree(NodeId u, NodeTypeId t) const;
  std::uint32_t degree(NodeId u) const {
    return static_cast<std::uint32_t>(adj_off_[u + 1] - adj_off_[u]);
  }
  // deg(u, person); precomputed, hot in the strength scoring loop.
  std::uint32_t person_degree(NodeId u) const { return person_deg_[u]; }

  bool has_edge(NodeId u, NodeId v) const {
    return u != v && edge_set_.count(pair_key(u, v)) != 0;
  }
  // All relations connecting u and v (R_(u,v)); empty when not adjacent.
  std::span<const EdgeTypeId> relations_between(NodeId u, NodeId v) const;

  // Visits each distinct (u, r, v) triple once with u < v.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (NodeId u = 0; u < node_count(); ++u) {
      for (std::size_t s = adj_off_[u]; s < adj_off_[u + 1]; ++s) {
        const NodeId v = adj_[s];
        if (v < u) continue;
        for (std::uint32_t k = rel_off_[s]; k < rel_off_[s + 1]; ++k) f(u, rel_[k], v);
      }
    }
  }

  const LoadStats& stats() const { return stats_; }

  // --- persistence (External Interfaces formats) ---------------------------
  static TypedGraph load(std::istream& nodes, std::istream& edges, std::istream& manifest);
  static TypedGraph load_files(const std::string& nodes_path, const std::string& edges_path,
                               const std::string& manifest_path);
  void save(std::ostream& nodes, std::ostream& edges, std::ostream& manifest) const;
  void save_files(const std::string& nodes_path, const std::string& edges_path,
                  const std::string& manifest_path) const;

 private:
  friend class Builder;
  TypedGraph() = default;

  static std::uint64_t pair_key(NodeId u, NodeId v) {
    const NodeId lo = u < v ? u : v;
    const NodeId hi = u < v ? v : u;
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  std::vector<std::string> node_type_names_;
  std::unordered_map<std::string, NodeTypeId> node_type_ids_;
  std::vector<std::string> edge_type_names_;
  std::unordered_map<std::string, EdgeTypeId> edge_type_ids_;
  std::vector<RelKind> rel_kind_;
  std::vector<EdgeTypeId> r_ppl_;

  std::vector<std::string> ext_ids_;
  std::unordered_map<std::string, NodeId> ext_to_id_;
  std::vector<NodeTypeId> type_of_;
  std::vector<NodeId> persons_;

  std::vector<std::size_t> adj_off_;
  std::vector<NodeId> adj_;
  std::vector<std::uint32_t> rel_off_;
  std::vector<EdgeTypeId> rel_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::vector<std::uint32_t> person_deg_;
  std::size_t edge_count_ = 0;

  LoadStats stats_;
};

// Accumulates records (programmatically or from files) and produces the
// indexed immutable graph. Construction is single-owner.
class TypedGraph::Builder {
 public:
  // `where` names the source line in diagnostics; optional for programmatic use.
  Builder& add_node(std::string external_id, std::string type_name, std::string where = {});
  Builder& add_edge(std::string src, std::string edge_type, std::string dst, std::string where = {});
  Builder& declare_relation(std::string edge_type, RelKind kind);
  TypedGraph build();

 private:
  struct NodeRec {
    std::string ext, type, where;
  };
  struct EdgeRec {
    std::string src, type, dst, where;
  };
  std::vector<NodeRec> nodes_;
  std::vector<EdgeRec> edges_;
  std::vector<std::pair<std::string, RelKind>> rel_decls_;
};

}  // namespace star2vec
