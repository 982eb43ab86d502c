#include "idealgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace idealgraph {
namespace {

constexpr int kDenseAdjacencyLimit = 4096;

GraphSource ring_source(const ChainRingProduct& ring) {
  return GraphSource{ring, ring.describe(), ring.tag()};
}

GraphSource oracle_source(const oracle::ExplicitRing& ring) {
  return GraphSource{std::nullopt, ring.description(), ring.tag()};
}

std::string dot_quote(const std::string& s) {
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::gamma0: return "gamma0";
    case GraphKind::gamma1: return "gamma1";
    case GraphKind::derived: return "derived";
  }
  return "unknown";
}

VertexLabel vertex_label(const IdealExp& ideal) {
  VertexLabel label;
  label.exponents.assign(ideal.exponents().begin(), ideal.exponents().end());
  label.divisor = ideal.divisor();
  label.name = ideal.label();
  return label;
}

LoopGraph::LoopGraph(GraphKind kind, GraphSource source, std::vector<VertexLabel> vertices,
                     std::vector<std::pair<int, int>> edges, std::vector<int> loops)
    : kind_(kind),
      source_(std::move(source)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      loops_(std::move(loops)) {
  const int n = vertex_count();
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::domain_error("loops must not appear in the edge list");
    if (u < 0 || v >= n) throw std::domain_error("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  std::sort(loops_.begin(), loops_.end());
  loops_.erase(std::unique(loops_.begin(), loops_.end()), loops_.end());
  if (!loops_.empty() && (loops_.front() < 0 || loops_.back() >= n)) {
    throw std::domain_error("loop vertex out of range");
  }
  if (kind_ == GraphKind::gamma0 && !loops_.empty()) {
    throw std::domain_error("gamma0 graphs carry no loops");
  }
  loop_flags_.assign(static_cast<std::size_t>(n), 0);
  for (int v : loops_) loop_flags_[static_cast<std::size_t>(v)] = 1;
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  if (n <= kDenseAdjacencyLimit && n > 0) {
    words_per_row_ = (n + 63) / 64;
    dense_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
    for (const auto& [u, v] : edges_) {
      dense_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] |= 1ULL << (v % 64);
      dense_[static_cast<std::size_t>(v) * words_per_row_ + u / 64] |= 1ULL << (u % 64);
    }
  }
}

bool LoopGraph::has_loop(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::domain_error("vertex out of range");
  return loop_flags_[static_cast<std::size_t>(v)] != 0;
}

bool LoopGraph::adjacent(int u, int v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) {
    throw std::domain_error("vertex out of range");
  }
  if (u == v) return has_loop(u);
  if (!dense_.empty()) {
    return (dense_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] >> (v % 64)) & 1;
  }
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

const std::vector<int>& LoopGraph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::domain_error("vertex out of range");
  return adjacency_[static_cast<std::size_t>(v)];
}

std::optional<int> LoopGraph::find_vertex(const VertexLabel& label) const {
  for (int v = 0; v < vertex_count(); ++v) {
    const VertexLabel& candidate = vertices_[static_cast<std::size_t>(v)];
    const bool match = label.exponents.empty() ? candidate.name == label.name
                                               : candidate.exponents == label.exponents;
    if (match) return v;
  }
  return std::nullopt;
}

std::vector<int> LoopGraph::label_order() const {
  std::vector<int> order(static_cast<std::size_t>(vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  const bool all_divisors =
      std::all_of(vertices_.begin(), vertices_.end(), [](const VertexLabel& v) { return v.divisor.has_value(); });
  if (all_divisors) {
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return *vertex(a).divisor < *vertex(b).divisor; });
    return order;
  }
  const bool all_exponents =
      std::all_of(vertices_.begin(), vertices_.end(), [](const VertexLabel& v) { return !v.exponents.empty(); });
  if (all_exponents) {
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertex(a).exponents < vertex(b).exponents; });
  }
  return order;
}

bool adjacency_rule(const ChainRingProduct& ring, const IdealExp& lhs, const IdealExp& rhs) {
  if (!ring.same_ring(lhs.ring()) || !lhs.ring().same_ring(rhs.ring())) {
    throw std::domain_error("ideal ring mismatch");
  }
  for (int i = 0; i < ring.arity(); ++i) {
    const int a = lhs.exponent(i);
    const int b = rhs.exponent(i);
    if (std::max(a, b) != std::min(a + b, ring.factor(i).gamma)) return false;
  }
  return true;
}

namespace {

LoopGraph build_from_ideals(GraphKind kind, const ChainRingProduct& ring,
                            std::vector<IdealExp> ideals) {
  const int n = static_cast<int>(ideals.size());
  std::vector<VertexLabel> labels;
  labels.reserve(ideals.size());
  for (const auto& ideal : ideals) labels.push_back(vertex_label(ideal));
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  for (int i = 0; i < n; ++i) {
    if (kind == GraphKind::gamma1 && is_idempotent(ideals[static_cast<std::size_t>(i)])) {
      loops.push_back(i);
    }
    for (int j = i + 1; j < n; ++j) {
      if (adjacency_rule(ring, ideals[static_cast<std::size_t>(i)], ideals[static_cast<std::size_t>(j)])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return LoopGraph(kind, ring_source(ring), std::move(labels), std::move(edges), std::move(loops));
}

}  // namespace

LoopGraph build_gamma0(const ChainRingProduct& ring) {
  return build_from_ideals(GraphKind::gamma0, ring, enumerate_ideals(ring, true));
}

LoopGraph build_gamma1(const ChainRingProduct& ring) {
  auto ideals = enumerate_ideals(ring, false);
  auto graph = build_from_ideals(GraphKind::gamma1, ring, ideals);
  // 0 and R are adjacent to everything; the rule guarantees it, so a failure
  // here means the construction itself is broken.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!ideals[i].is_trivial()) continue;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (i != j && !graph.adjacent(static_cast<int>(i), static_cast<int>(j))) {
        throw std::logic_error("trivial ideal not universal in gamma1");
      }
    }
  }
  return graph;
}

namespace {

LoopGraph build_from_oracle(GraphKind kind, const oracle::ExplicitRing& ring) {
  auto ideals = oracle::all_ideals(ring);
  if (kind == GraphKind::gamma0) {
    std::erase_if(ideals, [](const oracle::ElementIdeal& ideal) { return ideal.is_trivial(); });
  }
  const int n = static_cast<int>(ideals.size());
  std::vector<VertexLabel> labels;
  labels.reserve(ideals.size());
  for (const auto& ideal : ideals) {
    labels.push_back(VertexLabel{{}, std::nullopt, oracle::ideal_label(ideal)});
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  for (int i = 0; i < n; ++i) {
    const auto& lhs = ideals[static_cast<std::size_t>(i)];
    if (kind == GraphKind::gamma1 && oracle::set_product(lhs, lhs) == lhs) loops.push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (oracle::oracle_adjacent(lhs, ideals[static_cast<std::size_t>(j)])) edges.emplace_back(i, j);
    }
  }
  return LoopGraph(kind, oracle_source(ring), std::move(labels), std::move(edges), std::move(loops));
}

}  // namespace

LoopGraph build_gamma0(const oracle::ExplicitRing& ring) {
  return build_from_oracle(GraphKind::gamma0, ring);
}

LoopGraph build_gamma1(const oracle::ExplicitRing& ring) {
  return build_from_oracle(GraphKind::gamma1, ring);
}

LoopGraph tensor_product(std::span<const LoopGraph> factors) {
  if (factors.empty()) throw std::domain_error("tensor product of an empty graph list");
  for (const auto& g : factors) {
    if (g.kind() == GraphKind::gamma0) {
      throw std::domain_error("tensor product requires loop-aware (gamma1-style) factors");
    }
  }
  std::int64_t total = 1;
  for (const auto& g : factors) total *= g.vertex_count();
  if (total > (1 << 22)) throw std::range_error("tensor product too large");

  const int k = static_cast<int>(factors.size());
  const int n = static_cast<int>(total);
  auto decode = [&](int index, std::vector<int>& tuple) {
    for (int i = k - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = index % factors[static_cast<std::size_t>(i)].vertex_count();
      index /= factors[static_cast<std::size_t>(i)].vertex_count();
    }
  };

  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(n));
  std::vector<int> tuple(static_cast<std::size_t>(k));
  for (int index = 0; index < n; ++index) {
    decode(index, tuple);
    VertexLabel label;
    bool all_divisors = true;
    std::int64_t divisor = 1;
    for (int i = 0; i < k; ++i) {
      const VertexLabel& part = factors[static_cast<std::size_t>(i)].vertex(tuple[static_cast<std::size_t>(i)]);
      label.exponents.insert(label.exponents.end(), part.exponents.begin(), part.exponents.end());
      if (part.divisor) {
        divisor *= *part.divisor;
      } else {
        all_divisors = false;
      }
    }
    if (all_divisors) label.divisor = divisor;
    if (label.divisor) {
      label.name = std::to_string(*label.divisor);
    } else {
      label.name = "(";
      for (std::size_t i = 0; i < label.exponents.size(); ++i) {
        if (i > 0) label.name += ",";
        label.name += std::to_string(label.exponents[i]);
      }
      label.name += ")";
    }
    labels.push_back(std::move(label));
  }

  auto component_adjacent = [&](int factor, int u, int v) {
    const LoopGraph& g = factors[static_cast<std::size_t>(factor)];
    return u == v ? g.has_loop(u) : g.adjacent(u, v);
  };

  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  std::vector<int> tu(static_cast<std::size_t>(k));
  std::vector<int> tv(static_cast<std::size_t>(k));
  for (int u = 0; u < n; ++u) {
    decode(u, tu);
    bool loop = true;
    for (int i = 0; i < k && loop; ++i) {
      loop = factors[static_cast<std::size_t>(i)].has_loop(tu[static_cast<std::size_t>(i)]);
    }
    if (loop) loops.push_back(u);
    for (int v = u + 1; v < n; ++v) {
      decode(v, tv);
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        ok = component_adjacent(i, tu[static_cast<std::size_t>(i)], tv[static_cast<std::size_t>(i)]);
      }
      if (ok) edges.emplace_back(u, v);
    }
  }
  GraphSource source;
  source.description = "tensor product";
  source.tag = "tensor";
  return LoopGraph(GraphKind::derived, std::move(source), std::move(labels), std::move(edges),
                   std::move(loops));
}

bool check_crt_isomorphism(const ChainRingProduct& ring) {
  if (ring.arity() < 2) {
    throw std::domain_error("check_crt_isomorphism requires at least two factors");
  }
  const LoopGraph direct = build_gamma1(ring);
  std::vector<LoopGraph> parts;
  parts.reserve(static_cast<std::size_t>(ring.arity()));
  for (const PrimePower& f : ring.factors()) {
    parts.push_back(build_gamma1(ChainRingProduct({f}, f.value())));
  }
  const LoopGraph product = tensor_product(parts);
  if (direct.vertex_count() != product.vertex_count()) return false;
  // Both sides enumerate exponent vectors with the last coordinate fastest,
  // so the canonical bijection is the identity on indices.
  for (int v = 0; v < direct.vertex_count(); ++v) {
    if (direct.vertex(v).exponents != product.vertex(v).exponents) return false;
  }
  return direct.edges() == product.edges() && direct.loops() == product.loops();
}

std::string export_dot(const LoopGraph& graph) {
  std::string name = to_string(graph.kind());
  if (!graph.source().tag.empty()) name += "_" + graph.source().tag;
  std::string out = "graph " + name + " {\n";
  const std::vector<int> order = graph.label_order();
  std::vector<int> position(static_cast<std::size_t>(graph.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (int v : order) out += "  " + dot_quote(graph.vertex(v).name) + ";\n";
  std::vector<std::pair<int, int>> lines;
  lines.reserve(graph.edges().size() + graph.loops().size());
  for (const auto& [u, v] : graph.edges()) {
    lines.emplace_back(std::min(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]),
                       std::max(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]));
  }
  for (int v : graph.loops()) {
    lines.emplace_back(position[static_cast<std::size_t>(v)], position[static_cast<std::size_t>(v)]);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) {
    out += "  " + dot_quote(graph.vertex(order[static_cast<std::size_t>(a)]).name) + " -- " +
           dot_quote(graph.vertex(order[static_cast<std::size_t>(b)]).name) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const LoopGraph& graph) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["schema_version"] = 1;
  json ring;
  if (graph.source().ring && graph.source().ring->crt_modulus()) {
    ring["n"] = *graph.source().ring->crt_modulus();
  } else if (graph.source().ring) {
    json factors = json::array();
    for (const PrimePower& f : graph.source().ring->factors()) {
      factors.push_back({f.p, f.gamma});
    }
    ring["factors"] = std::move(factors);
  } else {
    ring["description"] = graph.source().description;
  }
  doc["ring"] = std::move(ring);
  doc["kind"] = to_string(graph.kind());
  const std::vector<int> order = graph.label_order();
  std::vector<int> position(static_cast<std::size_t>(graph.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  json vertices = json::array();
  for (int v : order) {
    const VertexLabel& label = graph.vertex(v);
    json entry;
    entry["name"] = label.name;
    if (!label.exponents.empty()) entry["exponents"] = label.exponents;
    if (label.divisor) entry["divisor"] = *label.divisor;
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(graph.edges().size());
  for (const auto& [u, v] : graph.edges()) {
    edges.emplace_back(std::min(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]),
                       std::max(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]));
  }
  std::sort(edges.begin(), edges.end());
  json edge_array = json::array();
  for (const auto& [u, v] : edges) edge_array.push_back({u, v});
  doc["edges"] = std::move(edge_array);
  std::vector<int> loops;
  loops.reserve(graph.loops().size());
  for (int v : graph.loops()) loops.push_back(position[static_cast<std::size_t>(v)]);
  std::sort(loops.begin(), loops.end());
  doc["loops"] = loops;
  return doc.dump(2) + "\n";
}

}  // namespace idealgraph
