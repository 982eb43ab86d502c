#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "idealgraph/analysis.hpp"
#include "idealgraph/graph.hpp"
#include "idealgraph/oracle.hpp"
#include "idealgraph/ring.hpp"

namespace {

using namespace idealgraph;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitInvariant = 3;

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::domain_error("cannot open output file: " + output_path);
  out << text;
}

std::string graph_table(const LoopGraph& graph, const ChainRingProduct* ring) {
  std::ostringstream out;
  out << to_string(graph.kind()) << "(" << graph.source().description << "): "
      << graph.vertex_count() << " vertices";
  if (graph.vertex_count() == 0 && ring && classify_ring(*ring).is_field) out << " (field)";
  out << ", " << graph.edge_count() << " edges";
  if (graph.kind() != GraphKind::gamma0) out << ", " << graph.loops().size() << " loops";
  out << "\n";
  const auto order = graph.label_order();
  if (!order.empty()) {
    out << "vertices:";
    for (int v : order) out << " " << graph.vertex(v).name;
    out << "\n";
  }
  if (graph.edge_count() > 0) {
    std::vector<int> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges()) {
      edges.emplace_back(std::min(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]),
                         std::max(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]));
    }
    std::sort(edges.begin(), edges.end());
    out << "edges:";
    for (const auto& [u, v] : edges) {
      out << " " << graph.vertex(order[static_cast<std::size_t>(u)]).name << "--"
          << graph.vertex(order[static_cast<std::size_t>(v)]).name;
    }
    out << "\n";
  }
  if (!graph.loops().empty()) {
    out << "loops:";
    std::vector<std::string> names;
    for (int v : graph.loops()) names.push_back(graph.vertex(v).name);
    std::sort(names.begin(), names.end());
    for (const auto& name : names) out << " " << name;
    out << "\n";
  }
  return out.str();
}

int cmd_graph(std::int64_t n, bool gamma1, const std::string& format, const std::string& output) {
  const ChainRingProduct ring = factor(n);
  const LoopGraph graph = gamma1 ? build_gamma1(ring) : build_gamma0(ring);
  if (format == "dot") {
    write_output(export_dot(graph), output);
  } else if (format == "json") {
    write_output(export_json(graph), output);
  } else if (format == "table") {
    write_output(graph_table(graph, &ring), output);
  } else {
    throw std::domain_error("graph supports --format dot|json|table");
  }
  return kExitOk;
}

int cmd_degrees(std::int64_t n, const std::string& format, const std::string& output) {
  const ChainRingProduct ring = factor(n);
  const LoopGraph graph = build_gamma0(ring);
  const auto ideals = enumerate_ideals(ring, true);
  bool mismatch = false;
  std::vector<DegreeReport> reports;
  for (const auto& ideal : ideals) {
    DegreeReport report = degree_formula(ring, ideal);
    report.degree_brute = degree_brute(graph, report.vertex);
    mismatch = mismatch || report.degree_formula != *report.degree_brute;
    reports.push_back(std::move(report));
  }
  std::sort(reports.begin(), reports.end(), [](const DegreeReport& a, const DegreeReport& b) {
    if (a.vertex.divisor && b.vertex.divisor) return *a.vertex.divisor < *b.vertex.divisor;
    return a.vertex.exponents < b.vertex.exponents;
  });
  if (format == "csv") {
    write_output(degrees_csv(ring), output);
  } else if (format == "table") {
    std::ostringstream out;
    out << "degrees of gamma0(" << ring.describe() << ")\n";
    out << "divisor  exponents  |A(I)|  formula  brute\n";
    for (const auto& r : reports) {
      std::string tuple = "(";
      for (std::size_t i = 0; i < r.vertex.exponents.size(); ++i) {
        if (i > 0) tuple += ",";
        tuple += std::to_string(r.vertex.exponents[i]);
      }
      tuple += ")";
      out << r.vertex.name << "  " << tuple << "  " << r.a_set.size() << "  " << r.degree_formula
          << "  " << *r.degree_brute << "\n";
    }
    write_output(out.str(), output);
  } else if (format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["n"] = n;
    ordered_json rows = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json row;
      row["divisor"] = r.vertex.divisor ? ordered_json(*r.vertex.divisor) : ordered_json(nullptr);
      row["exponents"] = r.vertex.exponents;
      row["a_set_size"] = r.a_set.size();
      row["degree_formula"] = r.degree_formula;
      row["degree_brute"] = *r.degree_brute;
      rows.push_back(std::move(row));
    }
    doc["degrees"] = std::move(rows);
    write_output(doc.dump(2) + "\n", output);
  } else {
    throw std::domain_error("degrees supports --format csv|table|json");
  }
  if (mismatch) {
    std::cerr << "invariant violation: degree formula disagrees with the brute count\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_ring(std::int64_t n, const std::string& format, const std::string& output) {
  const ChainRingProduct ring = factor(n);
  const RingClass cls = classify_ring(ring);
  const IdealExp rad = jacobson_radical(ring);
  const auto maximal = maximal_ideals(ring);
  const auto minimal = minimal_ideals(ring);
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  if (format == "table") {
    std::ostringstream out;
    out << "ring: " << ring.describe() << "\n";
    out << "factors:";
    for (const auto& f : ring.factors()) out << " " << f.p << "^" << f.gamma;
    out << "\n";
    out << "ideals: " << ring.ideal_count() << " (nontrivial " << ring.ideal_count() - 2 << ")\n";
    out << "local: " << yesno(cls.is_local) << "  field: " << yesno(cls.is_field)
        << "  reduced: " << yesno(cls.is_reduced) << "  vnr: " << yesno(cls.is_vnr) << "\n";
    out << "jacobson radical: " << rad.label() << "\n";
    out << "maximal ideals:";
    for (const auto& m : maximal) out << " " << m.label();
    out << "\n";
    out << "minimal ideals:";
    for (const auto& m : minimal) out << " " << m.label();
    out << "\n";
    write_output(out.str(), output);
  } else if (format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["n"] = n;
    ordered_json factors = ordered_json::array();
    for (const auto& f : ring.factors()) factors.push_back({f.p, f.gamma});
    doc["factors"] = std::move(factors);
    doc["ideal_count"] = ring.ideal_count();
    doc["classification"] = {{"local", cls.is_local},
                             {"field", cls.is_field},
                             {"reduced", cls.is_reduced},
                             {"vnr", cls.is_vnr}};
    doc["jacobson_radical"] = rad.label();
    ordered_json max_labels = ordered_json::array();
    for (const auto& m : maximal) max_labels.push_back(m.label());
    doc["maximal_ideals"] = std::move(max_labels);
    ordered_json min_labels = ordered_json::array();
    for (const auto& m : minimal) min_labels.push_back(m.label());
    doc["minimal_ideals"] = std::move(min_labels);
    write_output(doc.dump(2) + "\n", output);
  } else {
    throw std::domain_error("ring supports --format table|json");
  }
  return kExitOk;
}

int cmd_verify(std::int64_t n, bool with_oracle) {
  const ChainRingProduct ring = factor(n);
  const RingClass cls = classify_ring(ring);
  const LoopGraph g0 = build_gamma0(ring);
  const GraphStructure s = analyze_structure(g0);
  std::cout << "ring: " << ring.describe() << " (k=" << ring.arity() << ")\n";
  std::cout << "gamma0: " << s.vertex_count << " vertices, " << g0.edge_count() << " edges, "
            << s.component_count << " components, max diameter " << s.max_component_diameter
            << "\n";
  std::cout << "complete graph: " << (is_complete(g0) && g0.vertex_count() >= 2 ? "yes" : "no")
            << (cls.is_reduced ? " (squarefree)" : " (not squarefree)") << "\n";
  VerifyOptions options;
  options.with_oracle = with_oracle;
  const auto checks = verify_ring_properties(n, options);
  int failed = 0;
  int skipped = 0;
  for (const auto& check : checks) {
    switch (check.status) {
      case PropertyCheck::Status::pass:
        std::cout << check.name << ": pass\n";
        break;
      case PropertyCheck::Status::fail:
        ++failed;
        std::cout << check.name << ": FAIL (" << check.detail << ")\n";
        break;
      case PropertyCheck::Status::skip:
        ++skipped;
        std::cout << check.name << ": skip (" << check.detail << ")\n";
        break;
    }
  }
  std::cout << checks.size() - failed - skipped << " pass, " << failed << " fail, " << skipped
            << " skipped\n";
  return failed > 0 ? kExitInvariant : kExitOk;
}

int cmd_scan(std::int64_t from, std::int64_t to, int jobs, const std::string& output) {
  std::ofstream file;
  std::ostream* lines = &std::cout;
  if (!output.empty()) {
    file.open(output, std::ios::binary);
    if (!file) throw std::domain_error("cannot open output file: " + output);
    lines = &file;
  }
  ScanReport meta;
  meta.from = from;
  meta.to = to;
  *lines << scan_meta_json(meta) << "\n";
  ScanOptions options;
  options.parallelism = jobs;
  options.keep_entries = false;
  options.sink = [&](const ScanEntry& entry) { *lines << to_json_line(entry) << "\n"; };
  const ScanReport report = scan_range(from, to, options);
  *lines << scan_totals_json(report.totals) << "\n";
  std::ostream& summary = output.empty() ? std::cerr : std::cout;
  summary << summary_table(report);
  if (report.totals.flagged > 0) {
    summary << "conjecture counterexample found\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_local_sq(std::int64_t q, const std::string& format, const std::string& output) {
  const oracle::ExplicitRing ring = oracle::make_local_square_zero(q);
  const LoopGraph graph = build_gamma0(ring);
  const auto components = components_and_diameters(graph);
  // Expected shape: one complete component on q+1 minimal ideals plus the
  // isolated maximal ideal.
  bool shape_ok = components.size() == 2 && graph.vertex_count() == static_cast<int>(q) + 2;
  if (shape_ok) {
    std::vector<std::size_t> sizes{components[0].vertices.size(), components[1].vertices.size()};
    std::sort(sizes.begin(), sizes.end());
    shape_ok = sizes[0] == 1 && sizes[1] == static_cast<std::size_t>(q) + 1;
    for (const auto& component : components) {
      if (component.vertices.size() > 1) {
        shape_ok = shape_ok && check_clique(graph, component.vertices) && component.diameter == 1;
      }
    }
  }
  std::string body;
  if (format == "dot") {
    body = export_dot(graph);
  } else if (format == "json") {
    body = export_json(graph);
  } else if (format == "table") {
    body = graph_table(graph, nullptr);
  } else {
    throw std::domain_error("local-sq supports --format dot|json|table");
  }
  body += "shape: K_" + std::to_string(q + 1) + " u K_1 " + (shape_ok ? "(verified)" : "(VIOLATED)") + "\n";
  write_output(body, output);
  if (!shape_ok) {
    std::cerr << "invariant violation: gamma0 is not K_" << q + 1 << " u K_1\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int default_jobs() {
  if (const char* env = std::getenv("IDEALGRAPH_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ideal graphs gamma0/gamma1 of finite commutative rings"};
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t from = 0;
  std::int64_t to = 0;
  bool gamma1 = false;
  bool with_oracle = false;
  int jobs = default_jobs();
  std::string format;
  std::string output;

  auto* graph_cmd = app.add_subcommand("graph", "print gamma0 (or gamma1) of Z_n");
  graph_cmd->add_option("n", n, "modulus")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{10'000'000}));
  graph_cmd->add_flag("--gamma1", gamma1, "build gamma1 instead of gamma0");
  graph_cmd->add_option("--format", format, "dot|json|table")->default_val("table");
  graph_cmd->add_option("--output,-o", output, "write to file instead of stdout");

  auto* degrees_cmd = app.add_subcommand("degrees", "degree table of gamma0(Z_n), formula and brute");
  degrees_cmd->add_option("n", n, "modulus")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{10'000'000}));
  degrees_cmd->add_option("--format", format, "csv|table|json")->default_val("csv");
  degrees_cmd->add_option("--output,-o", output, "write to file instead of stdout");

  auto* ring_cmd = app.add_subcommand("ring", "structural summary of Z_n");
  ring_cmd->add_option("n", n, "modulus")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{10'000'000}));
  ring_cmd->add_option("--format", format, "table|json")->default_val("table");
  ring_cmd->add_option("--output,-o", output, "write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem suites against Z_n");
  verify_cmd->add_option("n", n, "modulus")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{10'000'000}));
  verify_cmd->add_flag("--oracle", with_oracle, "cross-check at the element level (n <= 2000)");

  auto* scan_cmd = app.add_subcommand("scan", "scan gamma0(Z_n) component diameters over a range");
  scan_cmd->add_option("from", from, "first modulus")->required();
  scan_cmd->add_option("to", to, "last modulus")->required();
  scan_cmd->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1, 256));
  scan_cmd->add_option("--output,-o", output, "JSON-lines report file (default stdout)");

  auto* local_cmd = app.add_subcommand("local-sq", "gamma0 of F_q[X,Y]/(X,Y)^2 via the element oracle");
  local_cmd->add_option("q", q, "prime q <= 31")->required();
  local_cmd->add_option("--format", format, "dot|json|table")->default_val("table");
  local_cmd->add_option("--output,-o", output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (graph_cmd->parsed()) return cmd_graph(n, gamma1, format, output);
    if (degrees_cmd->parsed()) return cmd_degrees(n, format, output);
    if (ring_cmd->parsed()) return cmd_ring(n, format, output);
    if (verify_cmd->parsed()) return cmd_verify(n, with_oracle);
    if (scan_cmd->parsed()) return cmd_scan(from, to, jobs, output);
    if (local_cmd->parsed()) return cmd_local_sq(q, format, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
