#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idealgraph/oracle.hpp"
#include "idealgraph/ring.hpp"

namespace idealgraph {

enum class GraphKind { gamma0, gamma1, derived };

std::string to_string(GraphKind kind);

/// Display label of a graph vertex. Ring-built vertices carry the exponent
/// vector and, on canonical rings, the matching divisor of n. Element-level
/// vertices carry only a name.
struct VertexLabel {
  std::vector<int> exponents;
  std::optional<std::int64_t> divisor;
  std::string name;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

VertexLabel vertex_label(const IdealExp& ideal);

/// Where a graph came from, for exports and reports.
struct GraphSource {
  std::optional<ChainRingProduct> ring;
  std::string description;
  std::string tag;
};

/// A finite labeled undirected graph with optional loops. Edges hold distinct
/// vertex pairs i < j in sorted order; loops are kept separately. Immutable
/// after construction. Pair queries are O(1) through a dense bitset up to
/// 4096 vertices and binary search above that.
class LoopGraph {
 public:
  LoopGraph(GraphKind kind, GraphSource source, std::vector<VertexLabel> vertices,
            std::vector<std::pair<int, int>> edges, std::vector<int> loops);

  GraphKind kind() const { return kind_; }
  const GraphSource& source() const { return source_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const VertexLabel& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& loops() const { return loops_; }

  bool has_loop(int v) const;
  /// u == v reports the loop at u.
  bool adjacent(int u, int v) const;
  /// Non-loop neighbors, ascending.
  const std::vector<int>& neighbors(int v) const;
  /// Number of incident non-loop edges.
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  /// Vertex index by label: exponent vectors when present, names otherwise.
  std::optional<int> find_vertex(const VertexLabel& label) const;

  /// Presentation order for exports: ascending divisors on canonical rings,
  /// lexicographic exponents otherwise, construction order as fallback.
  std::vector<int> label_order() const;

 private:
  GraphKind kind_;
  GraphSource source_;
  std::vector<VertexLabel> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> loops_;
  std::vector<char> loop_flags_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> dense_;  // row-major bitset, vertex_count <= 4096 only
  int words_per_row_ = 0;
};

/// The paper's exponent test: I and J are adjacent iff
/// max(a_i, b_i) = min(a_i + b_i, gamma_i) at every coordinate.
/// With I = J this reduces to I being idempotent (loop semantics).
bool adjacency_rule(const ChainRingProduct& ring, const IdealExp& lhs, const IdealExp& rhs);

/// Graph on the nontrivial ideals, no loops, vertices in lexicographic
/// exponent order.
LoopGraph build_gamma0(const ChainRingProduct& ring);

/// Graph on all ideals, loops exactly at idempotent ideals. 0 and R are
/// adjacent to every vertex.
LoopGraph build_gamma1(const ChainRingProduct& ring);

/// Element-level constructions driven entirely by oracle_adjacent; used to
/// validate the exponent rule and to handle rings outside the chain-ring
/// product family.
LoopGraph build_gamma0(const oracle::ExplicitRing& ring);
LoopGraph build_gamma1(const oracle::ExplicitRing& ring);

/// Tensor product of loop-graphs: tuples are adjacent iff every component
/// pair is adjacent, where equal components require a loop. A tuple has a
/// loop iff every component does.
LoopGraph tensor_product(std::span<const LoopGraph> factors);

/// Builds Gamma_1(R) directly and as the tensor product of the Gamma_1 of
/// its chain-ring factors, and checks that the canonical exponent bijection
/// preserves edges and loops. Requires k >= 2.
bool check_crt_isomorphism(const ChainRingProduct& ring);

/// Deterministic Graphviz output, vertices in label order then edges (and
/// loops, as self-edges) in lexicographic label order.
std::string export_dot(const LoopGraph& graph);

/// Deterministic JSON: {schema_version, ring, kind, vertices, edges, loops}
/// with vertex indices in label order.
std::string export_json(const LoopGraph& graph);

}  // namespace idealgraph
