#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/ring.hpp"

namespace idealgraph {

/// Degree of a nontrivial ideal in Gamma_0 by the closed formula
///   deg_0(I) = 2^|A(I)| * prod_{i not in A(I)} (gamma_i + 1) - 2 - [A(I) empty]
/// where A(I) = {i : 0 < a_i < gamma_i}.
struct DegreeReport {
  VertexLabel vertex;
  std::vector<int> a_set;  // 0-based coordinate indices
  std::int64_t degree_formula = 0;
  std::optional<std::int64_t> degree_brute;
};

DegreeReport degree_formula(const ChainRingProduct& ring, const IdealExp& ideal);

/// Count of incident non-loop edges; throws on an unknown vertex.
int degree_brute(const LoopGraph& graph, const VertexLabel& vertex);
int degree_brute(const LoopGraph& graph, int vertex);

/// Degree in Gamma_1 semantics: non-loop edges plus one for a loop.
int gamma1_degree(const LoopGraph& graph, int vertex);

struct ComponentReport {
  int component_id = 0;
  std::vector<int> vertices;        // ascending vertex indices
  std::vector<int> eccentricities;  // parallel to vertices
  int diameter = 0;
};

/// Connected components (loops ignored) with per-vertex eccentricities and
/// per-component diameters, by BFS from every vertex.
std::vector<ComponentReport> components_and_diameters(const LoopGraph& graph);

/// Non-loop vertices adjacent to every other vertex; empty when the graph
/// has fewer than two vertices.
std::vector<int> universal_vertices(const LoopGraph& graph);

/// Degree-zero vertices.
std::vector<int> isolated_vertices(const LoopGraph& graph);

/// True iff all pairs from the list are edges.
bool check_clique(const LoopGraph& graph, std::span<const int> vertices);
bool check_clique(const LoopGraph& graph, std::span<const VertexLabel> vertices);

/// BFS shortest path length; nullopt across components.
std::optional<int> distance(const LoopGraph& graph, int from, int to);
std::optional<int> distance(const LoopGraph& graph, const VertexLabel& from, const VertexLabel& to);

/// True iff every two distinct vertices are adjacent (vacuously for <= 1).
bool is_complete(const LoopGraph& graph);

/// Structural summary used by the conjecture scanner. The witness, present
/// iff some component has diameter > 2, is the lexicographically first
/// vertex pair at distance > 2.
struct GraphStructure {
  int vertex_count = 0;
  int component_count = 0;
  int max_component_diameter = 0;
  bool is_connected = false;  // exactly one component and at least one vertex
  bool degenerate = false;    // no vertices at all
  std::optional<std::pair<int, int>> witness;
  int witness_distance = 0;
};

GraphStructure analyze_structure(const LoopGraph& graph);

/// Per-modulus summary emitted by the scanner.
struct ScanEntry {
  std::int64_t n = 0;
  int vertex_count = 0;
  int component_count = 0;
  int max_component_diameter = 0;
  bool is_connected = false;
  bool counterexample_flag = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;  // divisor labels
  int witness_distance = 0;

  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

struct ScanTotals {
  std::int64_t scanned = 0;
  std::int64_t flagged = 0;
  std::int64_t connected = 0;
  std::int64_t degenerate = 0;
  int max_component_diameter = 0;
  std::map<int, std::int64_t> diameter_histogram;

  friend bool operator==(const ScanTotals&, const ScanTotals&) = default;
};

struct ScanReport {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::vector<ScanEntry> entries;  // empty when keep_entries was off
  std::vector<ScanEntry> flagged;  // always retained
  ScanTotals totals;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanOptions {
  int parallelism = 1;
  bool keep_entries = true;
  /// Called for every entry in ascending n order, after all workers merge.
  std::function<void(const ScanEntry&)> sink;
};

/// Builds Gamma_0(Z_n) for every n in [from, to] and summarizes component
/// structure. The result is independent of the parallelism level.
/// Requires 2 <= from <= to <= 10^7.
ScanReport scan_range(std::int64_t from, std::int64_t to, const ScanOptions& options);
ScanReport scan_range(std::int64_t from, std::int64_t to, int parallelism = 1);

std::string scan_meta_json(const ScanReport& report);
std::string to_json_line(const ScanEntry& entry);
std::string scan_totals_json(const ScanTotals& totals);
/// Meta line, one line per n, totals line.
std::string to_json_lines(const ScanReport& report);
std::string summary_table(const ScanReport& report);

/// CSV degree table, one row per nontrivial ideal in label order:
/// divisor,exponents,a_set_size,degree_formula,degree_brute
std::string degrees_csv(const ChainRingProduct& ring);

/// One named theorem or lemma checked exhaustively over a single ring.
struct PropertyCheck {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct VerifyOptions {
  bool with_oracle = false;  // element-level cross-checks, n <= 2000
};

/// Runs every theorem suite against Z_n. With the oracle enabled it also
/// replays the ideal arithmetic and both graphs at the element level.
std::vector<PropertyCheck> verify_ring_properties(std::int64_t n, const VerifyOptions& options);

}  // namespace idealgraph
