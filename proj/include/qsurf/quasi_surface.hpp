#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsurf/fox.hpp"
#include "qsurf/free_group.hpp"

namespace qsurf {

/// Raised by `build` when a quasi-surface description is inconsistent.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DiskSpec {
  /// Gate ids in counterclockwise order along the disk boundary.
  std::vector<std::string> gates;
};

struct GraphEdgeSpec {
  std::string id;
  std::string from;
  std::string to;
};

/// Combinatorial description of a quasi-surface: disjoint disks whose
/// boundary gates are glued to vertices of a finite graph Y.
struct QuasiSurfaceSpec {
  std::vector<DiskSpec> disks;
  std::vector<std::string> vertices;
  std::vector<GraphEdgeSpec> edges;
  std::map<std::string, std::string> gluing;
  std::string basepoint;
};

/// A path in the total graph G, as a word over its oriented edges.
/// Letter indices are edge indices of G, not group generators.
using EdgePath = std::vector<Letter>;

/// Validated quasi-surface with a free presentation of its fundamental group.
///
/// The total graph G has the vertices of Y followed by one cone vertex per
/// disk; its edges are the edges of Y followed by one edge per gate, oriented
/// from the glued vertex to the cone vertex of the gate's disk. The free
/// generators are the edges of G outside a breadth-first spanning tree.
class QuasiSurface {
 public:
  int gate_count() const { return static_cast<int>(gate_names_.size()); }
  int disk_count() const { return static_cast<int>(disk_gates_.size()); }
  int rank() const { return static_cast<int>(generator_edges_.size()); }
  int graph_vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int graph_edge_count() const { return graph_edge_count_; }
  int total_vertex_count() const { return static_cast<int>(parent_edge_.size()); }
  int total_edge_count() const { return static_cast<int>(edge_tail_.size()); }
  int basepoint() const { return basepoint_; }

  const std::string& gate_name(int gate) const { return gate_names_.at(static_cast<std::size_t>(gate)); }
  /// Gate index by id; throws std::out_of_range for unknown ids.
  int gate_index(const std::string& name) const;
  int gate_disk(int gate) const { return gate_disk_[static_cast<std::size_t>(gate)]; }
  /// Position of the gate in its disk's counterclockwise order.
  int gate_slot(int gate) const { return gate_slot_[static_cast<std::size_t>(gate)]; }
  int glued_vertex(int gate) const { return glued_vertex_[static_cast<std::size_t>(gate)]; }
  const std::vector<int>& disk_gates(int disk) const { return disk_gates_[static_cast<std::size_t>(disk)]; }
  /// The gate at `slot` (taken cyclically) of `disk`.
  int gate_at(int disk, int slot) const;

  const std::string& vertex_name(int vertex) const { return vertex_names_.at(static_cast<std::size_t>(vertex)); }
  const std::string& edge_name(int edge) const { return edge_names_.at(static_cast<std::size_t>(edge)); }
  int cone_vertex(int disk) const { return graph_vertex_count() + disk; }
  int gate_edge(int gate) const { return graph_edge_count_ + gate; }
  bool is_gate_edge(int edge) const { return edge >= graph_edge_count_; }
  int edge_gate(int edge) const { return edge - graph_edge_count_; }
  int edge_tail(int edge) const { return edge_tail_[static_cast<std::size_t>(edge)]; }
  int edge_head(int edge) const { return edge_head_[static_cast<std::size_t>(edge)]; }
  /// Generator index carried by an edge, or -1 for spanning-tree edges.
  int edge_generator(int edge) const { return edge_generator_[static_cast<std::size_t>(edge)]; }
  int generator_edge(int generator) const { return generator_edges_.at(static_cast<std::size_t>(generator)); }

  /// Start and end vertex of a traversed letter.
  int letter_source(const Letter& letter) const;
  int letter_target(const Letter& letter) const;

  /// Spanning-tree path from the basepoint to `vertex`.
  const EdgePath& tree_path(int vertex) const { return tree_paths_[static_cast<std::size_t>(vertex)]; }
  /// Closed edge path at the basepoint representing generator `generator`.
  const EdgePath& generator_path(int generator) const { return generator_paths_.at(static_cast<std::size_t>(generator)); }

  /// The group element of a closed edge path (tree edges are trivial).
  GroupWord path_to_word(const EdgePath& path) const;
  /// Reduced closed edge path at the basepoint representing `word`.
  EdgePath word_to_path(const GroupWord& word) const;

  /// Number of signed crossings of generator `generator`'s loop with `gate`.
  int gate_crossing_count(int gate, int generator) const;

  const QuasiSurfaceSpec& spec() const { return spec_; }

 private:
  friend QuasiSurface build(const QuasiSurfaceSpec& spec);
  QuasiSurface() = default;

  QuasiSurfaceSpec spec_;
  std::vector<std::string> gate_names_;
  std::map<std::string, int> gate_lookup_;
  std::vector<int> gate_disk_;
  std::vector<int> gate_slot_;
  std::vector<int> glued_vertex_;
  std::vector<std::vector<int>> disk_gates_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  int graph_edge_count_ = 0;
  int basepoint_ = 0;
  std::vector<int> edge_tail_;
  std::vector<int> edge_head_;
  std::vector<int> parent_edge_;
  std::vector<int> edge_generator_;
  std::vector<int> generator_edges_;
  std::vector<EdgePath> tree_paths_;
  std::vector<EdgePath> generator_paths_;
};

/// Validates `spec` and derives the presentation.
/// Throws ValidationError for duplicate gates, a partial gluing, unknown
/// vertices or a disconnected total graph.
QuasiSurface build(const QuasiSurfaceSpec& spec);

/// The Fox derivative of `gate`, based along the spanning-tree path to the
/// gate's glued vertex. Each traversal of the gate edge towards the disk adds
/// the element of the path before it; each traversal back subtracts the
/// element of the path up to and including it.
FoxDerivative gate_derivative(const QuasiSurface& qs, int gate);

}  // namespace qsurf
