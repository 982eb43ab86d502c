#include "idealgraph/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "idealgraph/oracle.hpp"

namespace idealgraph {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> bfs_distances(const LoopGraph& graph, int source) {
  std::vector<int> dist(static_cast<std::size_t>(graph.vertex_count()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::queue<int> queue;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : graph.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

int require_vertex(const LoopGraph& graph, const VertexLabel& label) {
  if (auto v = graph.find_vertex(label)) return *v;
  throw std::domain_error("vertex not in graph: " + label.name);
}

}  // namespace

DegreeReport degree_formula(const ChainRingProduct& ring, const IdealExp& ideal) {
  if (!ring.same_ring(ideal.ring())) throw std::domain_error("ideal ring mismatch");
  if (ideal.is_trivial()) throw std::domain_error("degree_formula requires a nontrivial ideal");
  DegreeReport report;
  report.vertex = vertex_label(ideal);
  std::int64_t count = 1;
  for (int i = 0; i < ring.arity(); ++i) {
    const int a = ideal.exponent(i);
    if (a > 0 && a < ring.factor(i).gamma) {
      report.a_set.push_back(i);
      count *= 2;
    } else {
      count *= ring.factor(i).gamma + 1;
    }
  }
  report.degree_formula = count - 2 - (report.a_set.empty() ? 1 : 0);
  return report;
}

int degree_brute(const LoopGraph& graph, int vertex) {
  if (vertex < 0 || vertex >= graph.vertex_count()) throw std::domain_error("vertex out of range");
  return graph.degree(vertex);
}

int degree_brute(const LoopGraph& graph, const VertexLabel& vertex) {
  return degree_brute(graph, require_vertex(graph, vertex));
}

int gamma1_degree(const LoopGraph& graph, int vertex) {
  return degree_brute(graph, vertex) + (graph.has_loop(vertex) ? 1 : 0);
}

std::vector<ComponentReport> components_and_diameters(const LoopGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<ComponentReport> reports;
  for (int start = 0; start < n; ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(reports.size());
    ComponentReport report;
    report.component_id = id;
    const auto dist = bfs_distances(graph, start);
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] >= 0) {
        component[static_cast<std::size_t>(v)] = id;
        report.vertices.push_back(v);
      }
    }
    reports.push_back(std::move(report));
  }
  for (auto& report : reports) {
    report.eccentricities.reserve(report.vertices.size());
    for (int v : report.vertices) {
      const auto dist = bfs_distances(graph, v);
      int ecc = 0;
      for (int u : report.vertices) ecc = std::max(ecc, dist[static_cast<std::size_t>(u)]);
      report.eccentricities.push_back(ecc);
      report.diameter = std::max(report.diameter, ecc);
    }
  }
  return reports;
}

std::vector<int> universal_vertices(const LoopGraph& graph) {
  std::vector<int> result;
  if (graph.vertex_count() < 2) return result;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) == graph.vertex_count() - 1) result.push_back(v);
  }
  return result;
}

std::vector<int> isolated_vertices(const LoopGraph& graph) {
  std::vector<int> result;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) == 0) result.push_back(v);
  }
  return result;
}

bool check_clique(const LoopGraph& graph, std::span<const int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= graph.vertex_count()) throw std::domain_error("vertex out of range");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) continue;
      if (!graph.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool check_clique(const LoopGraph& graph, std::span<const VertexLabel> vertices) {
  std::vector<int> indices;
  indices.reserve(vertices.size());
  for (const auto& label : vertices) indices.push_back(require_vertex(graph, label));
  return check_clique(graph, indices);
}

std::optional<int> distance(const LoopGraph& graph, int from, int to) {
  if (from < 0 || from >= graph.vertex_count() || to < 0 || to >= graph.vertex_count()) {
    throw std::domain_error("vertex out of range");
  }
  const int d = bfs_distances(graph, from)[static_cast<std::size_t>(to)];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> distance(const LoopGraph& graph, const VertexLabel& from, const VertexLabel& to) {
  return distance(graph, require_vertex(graph, from), require_vertex(graph, to));
}

bool is_complete(const LoopGraph& graph) {
  const std::int64_t n = graph.vertex_count();
  return graph.edge_count() == n * (n - 1) / 2;
}

GraphStructure analyze_structure(const LoopGraph& graph) {
  GraphStructure s;
  s.vertex_count = graph.vertex_count();
  s.degenerate = s.vertex_count == 0;
  const auto components = components_and_diameters(graph);
  s.component_count = static_cast<int>(components.size());
  s.is_connected = s.component_count == 1 && s.vertex_count >= 1;
  for (const auto& c : components) s.max_component_diameter = std::max(s.max_component_diameter, c.diameter);
  if (s.max_component_diameter > 2) {
    for (int u = 0; u < graph.vertex_count() && !s.witness; ++u) {
      const auto dist = bfs_distances(graph, u);
      for (int v = u + 1; v < graph.vertex_count(); ++v) {
        if (dist[static_cast<std::size_t>(v)] > 2) {
          s.witness = {u, v};
          s.witness_distance = dist[static_cast<std::size_t>(v)];
          break;
        }
      }
    }
  }
  return s;
}

namespace {

ScanEntry scan_single(std::int64_t n) {
  const ChainRingProduct ring = factor(n);
  const LoopGraph graph = build_gamma0(ring);
  const GraphStructure s = analyze_structure(graph);
  ScanEntry entry;
  entry.n = n;
  entry.vertex_count = s.vertex_count;
  entry.component_count = s.component_count;
  entry.max_component_diameter = s.max_component_diameter;
  entry.is_connected = s.is_connected;
  entry.counterexample_flag = s.max_component_diameter > 2;
  if (s.witness) {
    entry.witness = {*graph.vertex(s.witness->first).divisor, *graph.vertex(s.witness->second).divisor};
    entry.witness_distance = s.witness_distance;
  }
  return entry;
}

}  // namespace

ScanReport scan_range(std::int64_t from, std::int64_t to, const ScanOptions& options) {
  if (from < 2 || from > to || to > 10'000'000) {
    throw std::domain_error("scan range must satisfy 2 <= from <= to <= 10^7");
  }
  constexpr std::int64_t kBlockSize = 256;
  const std::int64_t count = to - from + 1;
  const std::int64_t block_count = (count + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<ScanEntry>> blocks(static_cast<std::size_t>(block_count));
  std::atomic<std::int64_t> next_block{0};
  auto worker = [&] {
    while (true) {
      const std::int64_t b = next_block.fetch_add(1);
      if (b >= block_count) return;
      const std::int64_t lo = from + b * kBlockSize;
      const std::int64_t hi = std::min(to, lo + kBlockSize - 1);
      auto& out = blocks[static_cast<std::size_t>(b)];
      out.reserve(static_cast<std::size_t>(hi - lo + 1));
      for (std::int64_t n = lo; n <= hi; ++n) out.push_back(scan_single(n));
    }
  };
  const int workers = std::max(1, options.parallelism);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScanReport report;
  report.from = from;
  report.to = to;
  if (options.keep_entries) report.entries.reserve(static_cast<std::size_t>(count));
  for (const auto& block : blocks) {
    for (const auto& entry : block) {
      report.totals.scanned += 1;
      report.totals.max_component_diameter =
          std::max(report.totals.max_component_diameter, entry.max_component_diameter);
      report.totals.diameter_histogram[entry.max_component_diameter] += 1;
      if (entry.is_connected) report.totals.connected += 1;
      if (entry.vertex_count == 0) report.totals.degenerate += 1;
      if (entry.counterexample_flag) {
        report.totals.flagged += 1;
        report.flagged.push_back(entry);
      }
      if (options.sink) options.sink(entry);
      if (options.keep_entries) report.entries.push_back(entry);
    }
  }
  return report;
}

ScanReport scan_range(std::int64_t from, std::int64_t to, int parallelism) {
  ScanOptions options;
  options.parallelism = parallelism;
  return scan_range(from, to, options);
}

std::string scan_meta_json(const ScanReport& report) {
  ordered_json meta;
  meta["schema_version"] = 1;
  meta["kind"] = "gamma0-scan";
  meta["from"] = report.from;
  meta["to"] = report.to;
  return meta.dump();
}

std::string to_json_line(const ScanEntry& entry) {
  ordered_json line;
  line["n"] = entry.n;
  line["vertex_count"] = entry.vertex_count;
  line["component_count"] = entry.component_count;
  line["max_component_diameter"] = entry.max_component_diameter;
  line["is_connected"] = entry.is_connected;
  line["counterexample_flag"] = entry.counterexample_flag;
  if (entry.witness) {
    ordered_json witness;
    witness["u"] = entry.witness->first;
    witness["v"] = entry.witness->second;
    witness["distance"] = entry.witness_distance;
    line["witness"] = std::move(witness);
  }
  return line.dump();
}

std::string scan_totals_json(const ScanTotals& totals) {
  ordered_json doc;
  ordered_json inner;
  inner["scanned"] = totals.scanned;
  inner["flagged"] = totals.flagged;
  inner["connected"] = totals.connected;
  inner["degenerate"] = totals.degenerate;
  inner["max_component_diameter"] = totals.max_component_diameter;
  ordered_json histogram;
  for (const auto& [diameter, count] : totals.diameter_histogram) {
    histogram[std::to_string(diameter)] = count;
  }
  inner["diameter_histogram"] = std::move(histogram);
  doc["totals"] = std::move(inner);
  return doc.dump();
}

std::string to_json_lines(const ScanReport& report) {
  std::string out = scan_meta_json(report) + "\n";
  for (const auto& entry : report.entries) out += to_json_line(entry) + "\n";
  out += scan_totals_json(report.totals) + "\n";
  return out;
}

std::string summary_table(const ScanReport& report) {
  std::ostringstream out;
  out << "gamma0 component-diameter scan, n = " << report.from << " .. " << report.to << "\n";
  out << "  scanned:                " << report.totals.scanned << "\n";
  out << "  connected:              " << report.totals.connected << "\n";
  out << "  without vertices:       " << report.totals.degenerate << "\n";
  out << "  max component diameter: " << report.totals.max_component_diameter << "\n";
  out << "  diameter histogram:    ";
  for (const auto& [diameter, count] : report.totals.diameter_histogram) {
    out << " " << diameter << ":" << count;
  }
  out << "\n";
  out << "  flagged (diameter > 2): " << report.totals.flagged << "\n";
  for (const auto& entry : report.flagged) {
    out << "    n=" << entry.n;
    if (entry.witness) {
      out << "  d(<" << entry.witness->first << ">,<" << entry.witness->second
          << ">) = " << entry.witness_distance;
    }
    out << "\n";
  }
  return out.str();
}

std::string degrees_csv(const ChainRingProduct& ring) {
  const LoopGraph graph = build_gamma0(ring);
  std::string out = "divisor,exponents,a_set_size,degree_formula,degree_brute\n";
  const auto ideals = enumerate_ideals(ring, true);
  std::vector<std::size_t> order(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) order[i] = i;
  if (ring.crt_modulus()) {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return *ideals[a].divisor() < *ideals[b].divisor(); });
  }
  std::string tuple;
  for (std::size_t i : order) {
    const DegreeReport report = degree_formula(ring, ideals[i]);
    const int brute = degree_brute(graph, report.vertex);
    tuple = "(";
    for (int c = 0; c < ideals[i].arity(); ++c) {
      if (c > 0) tuple += ",";
      tuple += std::to_string(ideals[i].exponent(c));
    }
    tuple += ")";
    out += ideals[i].label() + ",\"" + tuple + "\"," + std::to_string(report.a_set.size()) + "," +
           std::to_string(report.degree_formula) + "," + std::to_string(brute) + "\n";
  }
  return out;
}

namespace {

using oracle::ElementIdeal;
using oracle::ExplicitRing;

ElementIdeal element_colon(const ExplicitRing& ring, const ElementIdeal& lhs, const ElementIdeal& rhs) {
  std::vector<int> members;
  for (int r = 0; r < ring.size(); ++r) {
    bool ok = true;
    for (int j : rhs.members()) {
      if (!lhs.contains(ring.mul(r, j))) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(r);
  }
  return ElementIdeal(ring, std::move(members));
}

ElementIdeal element_radical(const ExplicitRing& ring, const ElementIdeal& ideal) {
  std::vector<int> members;
  std::vector<char> seen(static_cast<std::size_t>(ring.size()));
  for (int r = 0; r < ring.size(); ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    int x = r;
    bool in_radical = false;
    while (!seen[static_cast<std::size_t>(x)]) {
      if (ideal.contains(x)) {
        in_radical = true;
        break;
      }
      seen[static_cast<std::size_t>(x)] = 1;
      x = ring.mul(x, r);
    }
    if (in_radical) members.push_back(r);
  }
  return ElementIdeal(ring, std::move(members));
}

struct PropertyRunner {
  std::vector<PropertyCheck> checks;

  void record(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass ? PropertyCheck::Status::pass : PropertyCheck::Status::fail,
                      pass ? "" : detail});
  }

  void skip(const std::string& name, const std::string& why) {
    checks.push_back({name, PropertyCheck::Status::skip, why});
  }
};

std::string pair_text(const IdealExp& a, const IdealExp& b) {
  return "I=" + a.label() + " J=" + b.label();
}

}  // namespace

std::vector<PropertyCheck> verify_ring_properties(std::int64_t n, const VerifyOptions& options) {
  if (n < 2) throw std::domain_error("verify requires n >= 2");
  if (options.with_oracle && n > 2000) {
    throw std::domain_error("oracle verification is limited to n <= 2000");
  }
  const ChainRingProduct ring = factor(n);
  const auto all = enumerate_ideals(ring, false);
  const auto nontrivial = enumerate_ideals(ring, true);
  const LoopGraph g0 = build_gamma0(ring);
  const LoopGraph g1 = build_gamma1(ring);
  const RingClass cls = classify_ring(ring);
  const IdealExp zero = zero_ideal(ring);
  const IdealExp unit = unit_ideal(ring);
  const IdealExp rad = jacobson_radical(ring);
  PropertyRunner runner;

  {
    bool pass = true;
    std::string detail;
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto product = ideal_product(a, b);
        const auto meet = ideal_intersect(a, b);
        if (!(meet.contains(product) && a.contains(meet))) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("lattice-sandwich", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (ideal_sum(a, b) == unit && !(ideal_product(a, b) == ideal_intersect(a, b))) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("lemma-comaximal-adjacent", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (ideal_intersect(a, b) == zero && !(ideal_product(a, b) == zero)) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("lemma-zero-intersection", pass, detail);
  }

  if (cls.is_reduced) {
    bool pass = true;
    std::string detail;
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (ideal_product(a, b) == zero && !(ideal_intersect(a, b) == zero)) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("lemma-reduced-product-zero", pass, detail);
  } else {
    runner.skip("lemma-reduced-product-zero", "ring is not reduced");
  }

  {
    bool pass = true;
    std::string detail;
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (ideal_product(a, b) == b && !(ideal_product(a, b) == ideal_intersect(a, b))) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("lemma-absorbing-product", pass, detail);
  }

  {
    // In Z_n every ideal is principal, so J ranges over all of them.
    bool pass = true;
    std::string detail;
    for (const auto& a : all) {
      for (const auto& b : all) {
        const bool adjacent = ideal_product(a, b) == ideal_intersect(a, b);
        const bool colon_splits = ideal_colon(a, b) == ideal_sum(a, annihilator(b));
        if (adjacent != colon_splits) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("colon-criterion", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const auto& a : all) {
      if (a.is_unit_ideal()) continue;
      for (const auto& b : all) {
        if (b.is_unit_ideal()) continue;
        bool disjoint = true;
        for (int i = 0; i < ring.arity() && disjoint; ++i) {
          disjoint = a.exponent(i) == 0 || b.exponent(i) == 0;
        }
        if (disjoint && !(ideal_colon(a, b) == a)) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("associated-prime-avoidance", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int i = 0; i < ring.arity(); ++i) {
      std::vector<int> alpha(static_cast<std::size_t>(ring.arity()), 0);
      alpha[static_cast<std::size_t>(i)] = 1;
      const IdealExp prime(ring, alpha);
      for (const auto& b : all) {
        if (b.exponent(i) != 0) continue;
        if (!(ideal_product(prime, b) == ideal_intersect(prime, b))) {
          pass = false;
          detail = pair_text(prime, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("prime-principal-adjacency", pass, detail);
  }

  {
    std::vector<VertexLabel> labels;
    for (const auto& m : maximal_ideals(ring)) labels.push_back(vertex_label(m));
    runner.record("max-ideals-clique", check_clique(g0, labels), "Max(R) is not a clique");
    labels.clear();
    for (const auto& m : minimal_ideals(ring)) labels.push_back(vertex_label(m));
    runner.record("min-ideals-clique", check_clique(g0, labels), "M(R) is not a clique");
  }

  if (g0.vertex_count() >= 2) {
    std::vector<int> expected;
    for (int v = 0; v < g0.vertex_count(); ++v) {
      const IdealExp ideal(ring, g0.vertex(v).exponents);
      if (is_idempotent(ideal)) expected.push_back(v);
    }
    runner.record("universal-iff-idempotent", universal_vertices(g0) == expected,
                  "universal vertex set differs from the idempotent ideals");
  } else {
    runner.skip("universal-iff-idempotent", "fewer than two vertices");
  }

  {
    bool has_nontrivial_idempotent = false;
    for (const auto& ideal : nontrivial) {
      if (is_idempotent(ideal)) {
        has_nontrivial_idempotent = true;
        break;
      }
    }
    if (has_nontrivial_idempotent) {
      const GraphStructure s = analyze_structure(g0);
      runner.record("idempotent-implies-connected-diam2",
                    s.is_connected && s.max_component_diameter <= 2,
                    "graph not connected with diameter <= 2");
    } else {
      runner.skip("idempotent-implies-connected-diam2", "no nontrivial idempotent ideal");
    }
  }

  {
    bool pass = true;
    std::string detail;
    for (int v : isolated_vertices(g0)) {
      const IdealExp ideal(ring, g0.vertex(v).exponents);
      if (!(rad.contains(ideal) && is_large(ideal))) {
        pass = false;
        detail = "isolated vertex " + ideal.label();
        break;
      }
    }
    runner.record("isolated-in-radical-and-large", pass, detail);
  }

  if (g0.vertex_count() >= 2) {
    const GraphStructure s = analyze_structure(g0);
    runner.record("connected-iff-not-prime-power", s.is_connected == (ring.arity() >= 2),
                  "connectivity disagrees with the local-ring criterion");
    runner.record("complete-iff-squarefree", is_complete(g0) == cls.is_reduced,
                  "completeness disagrees with squarefreeness");
  } else {
    runner.skip("connected-iff-not-prime-power", "fewer than two vertices");
    runner.skip("complete-iff-squarefree", "fewer than two vertices");
  }

  if (ring.arity() == 1) {
    runner.record("prime-power-edge-free", g0.edge_count() == 0, "chain ring graph has edges");
  } else {
    runner.skip("prime-power-edge-free", "not a prime power");
  }

  {
    bool pass = true;
    std::string detail;
    for (const auto& a : nontrivial) {
      if (!rad.contains(a)) continue;
      for (const auto& b : nontrivial) {
        if (a == b || !rad.contains(b)) continue;
        if (!(a.contains(b) || b.contains(a))) continue;
        if (ideal_product(a, b) == ideal_intersect(a, b)) {
          pass = false;
          detail = pair_text(a, b);
          break;
        }
      }
      if (!pass) break;
    }
    runner.record("chains-in-radical-independent", pass, detail);
  }

  if (ring.arity() >= 2) {
    runner.record("crt-isomorphism", check_crt_isomorphism(ring),
                  "tensor product differs from the direct construction");
  } else {
    runner.skip("crt-isomorphism", "single chain-ring factor");
  }

  {
    bool pass = true;
    std::string detail;
    for (const auto& ideal : nontrivial) {
      const DegreeReport report = degree_formula(ring, ideal);
      if (report.degree_formula != degree_brute(g0, report.vertex)) {
        pass = false;
        detail = "ideal " + ideal.label();
        break;
      }
    }
    runner.record("degree-formula-vs-brute", pass, detail);
  }

  {
    bool pass = true;
    for (const auto& [u, v] : g0.edges()) {
      if (!g1.adjacent(g1.find_vertex(g0.vertex(u)).value(), g1.find_vertex(g0.vertex(v)).value())) {
        pass = false;
        break;
      }
    }
    std::int64_t restricted = 0;
    for (const auto& [u, v] : g1.edges()) {
      const IdealExp a(ring, g1.vertex(u).exponents);
      const IdealExp b(ring, g1.vertex(v).exponents);
      if (!a.is_trivial() && !b.is_trivial()) ++restricted;
    }
    pass = pass && restricted == g0.edge_count();
    runner.record("gamma0-is-gamma1-restriction", pass,
                  "gamma0 is not the restriction of gamma1 to nontrivial ideals");
  }

  {
    bool pass = true;
    std::string detail;
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(g0.vertex_count()));
    for (int v = 0; v < g0.vertex_count(); ++v) dist[static_cast<std::size_t>(v)] = bfs_distances(g0, v);
    for (int u = 0; u < g0.vertex_count() && pass; ++u) {
      for (int v = u + 1; v < g0.vertex_count(); ++v) {
        const auto& a = g0.vertex(u).exponents;
        const auto& b = g0.vertex(v).exponents;
        bool shared_zero = false;
        for (int i = 0; i < ring.arity() && !shared_zero; ++i) {
          shared_zero = a[static_cast<std::size_t>(i)] == 0 && b[static_cast<std::size_t>(i)] == 0;
        }
        if (!shared_zero) continue;
        const int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (d < 0 || d > 2) {
          pass = false;
          detail = "d(" + g0.vertex(u).name + "," + g0.vertex(v).name + ") > 2";
          break;
        }
      }
    }
    // In Z_n the principal nilradical-avoiding pairs are exactly the pairs
    // sharing a zero coordinate, so one sweep covers both distance theorems.
    runner.record("distance-avoided-maximal", pass, detail);
    runner.record("distance-nilradical", pass, detail);
  }

  if (options.with_oracle) {
    const ExplicitRing zn = oracle::make_zmod(n);
    const auto element_ideals = oracle::all_ideals(zn);

    {
      bool pass = static_cast<std::int64_t>(element_ideals.size()) == ring.ideal_count();
      std::string detail = pass ? "" : "ideal count differs from the divisor count";
      if (pass) {
        for (const auto& ideal : all) {
          const ElementIdeal expected = oracle::principal_ideal(zn, static_cast<int>(*ideal.divisor() % n));
          if (std::find(element_ideals.begin(), element_ideals.end(), expected) == element_ideals.end()) {
            pass = false;
            detail = "divisor " + ideal.label() + " missing at the element level";
            break;
          }
        }
      }
      runner.record("oracle-divisor-bijection", pass, detail);
    }

    auto element_of = [&](const IdealExp& ideal) {
      return oracle::principal_ideal(zn, static_cast<int>(*ideal.divisor() % n));
    };

    {
      bool pass = true;
      std::string detail;
      for (const auto& a : all) {
        const ElementIdeal ea = element_of(a);
        if (!(element_radical(zn, ea) == element_of(radical(a)))) {
          pass = false;
          detail = "radical of " + a.label();
          break;
        }
        for (const auto& b : all) {
          const ElementIdeal eb = element_of(b);
          if (!(oracle::set_product(ea, eb) == element_of(ideal_product(a, b))) ||
              !(oracle::set_intersect(ea, eb) == element_of(ideal_intersect(a, b))) ||
              !(oracle::set_sum(ea, eb) == element_of(ideal_sum(a, b))) ||
              !(element_colon(zn, ea, eb) == element_of(ideal_colon(a, b)))) {
            pass = false;
            detail = pair_text(a, b);
            break;
          }
        }
        if (!pass) break;
      }
      runner.record("oracle-operation-agreement", pass, detail);
    }

    {
      bool pass = true;
      std::string detail;
      for (const auto& a : nontrivial) {
        for (const auto& b : nontrivial) {
          if (a == b) continue;
          const bool rule = adjacency_rule(ring, a, b);
          const bool arithmetic = ideal_product(a, b) == ideal_intersect(a, b);
          const bool element = oracle::oracle_adjacent(element_of(a), element_of(b));
          if (rule != arithmetic || rule != element) {
            pass = false;
            detail = pair_text(a, b);
            break;
          }
        }
        if (!pass) break;
      }
      runner.record("oracle-edge-agreement", pass, detail);
    }

    {
      bool pass = true;
      std::string detail;
      for (const auto& a : all) {
        const auto generator = oracle::idempotent_generator(zn, element_of(a));
        if (generator.has_value() != is_idempotent(a)) {
          pass = false;
          detail = "ideal " + a.label();
          break;
        }
      }
      runner.record("oracle-idempotent-generator", pass, detail);
    }
  }

  return runner.checks;
}

}  // namespace idealgraph
