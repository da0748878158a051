// Command-line front end: detect, perfect, probe, gen, bench.
// Exit codes: 0 no odd hole / perfect, 1 odd hole / imperfect, 2 input error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddhole/corpus.hpp"
#include "oddhole/io.hpp"
#include "oddhole/result.hpp"
#include "oddhole/structure_probes.hpp"

namespace {

using namespace oddhole;
using nlohmann::json;

constexpr int kExitClean = 0;
constexpr int kExitHole = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// "auto" picks graph6 when the first non-blank line is a single token that is
// not a number.
GraphFormat resolve_format(const std::string& name, const std::string& text) {
  if (name != "auto") return parse_format(name);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string first, second;
    if (!(words >> first)) continue;
    if (first[0] == '#') return GraphFormat::kEdgeList;
    const bool numeric = std::all_of(first.begin(), first.end(), [](char c) { return c >= '0' && c <= '9'; });
    return (!numeric && !(words >> second)) || first.starts_with(">>graph6<<") ? GraphFormat::kGraph6
                                                                             : GraphFormat::kEdgeList;
  }
  return GraphFormat::kEdgeList;
}

TypeSelection parse_types(const std::string& list) {
  if (list.empty()) return TypeSelection{}.set();
  TypeSelection t;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.size() != 1 || item[0] < '1' || item[0] > '6') throw InputError("bad --types entry '" + item + "'");
    t.set(static_cast<std::size_t>(item[0] - '1'));
  }
  return t;
}

std::vector<Vertex> parse_vertex_list(const std::string& list, const Graph& g) {
  std::vector<Vertex> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= g.order()) throw InputError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + item + "'");
    }
  }
  return out;
}

unsigned worker_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ODDHOLE_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) cap = std::min(cap, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      // ignored: fall back to the hardware count
    }
  }
  return cap;
}

std::string text_line(const ResultDocument& r, bool witness, const std::string& name) {
  std::string s = name.empty() ? "" : name + ": ";
  s += std::string(verdict_name(r.verdict));
  if (r.antihole) s += " (antihole)";
  if (witness && r.witness) {
    s += "\nwitness:";
    for (Vertex v : *r.witness) s += " " + std::to_string(v);
  }
  return s;
}

struct DetectOptions {
  std::string file;
  std::string format = "auto";
  std::string algorithm = "fast";
  std::string types;
  bool witness = false;
  bool as_json = false;
  bool stream = false;
};

int run_detect(const DetectOptions& o) {
  const Algorithm algo = parse_algorithm(o.algorithm);
  const TypeSelection types = parse_types(o.types);
  const std::string text = read_input(o.stream ? "-" : o.file);
  const GraphFormat fmt = resolve_format(o.format, text);
  if (!o.stream) {
    const auto doc = parse_graph(text, fmt);
    const auto r = detect_document(doc.graph, algo, types);
    std::cout << (o.as_json ? to_json(r).dump() : text_line(r, o.witness, "")) << "\n";
    return r.witness ? kExitHole : kExitClean;
  }
  const auto docs = parse_graphs(text, fmt);
  std::vector<ResultDocument> results(docs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < docs.size();) results[i] = detect_document(docs[i].graph, algo, types);
  };
  const unsigned n = std::min<unsigned>(worker_cap(), static_cast<unsigned>(std::max<std::size_t>(docs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  bool any = false;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    any |= results[i].witness.has_value();
    if (o.as_json) {
      json j = to_json(results[i]);
      j["index"] = i;
      if (!docs[i].name.empty()) j["name"] = docs[i].name;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << text_line(results[i], o.witness, docs[i].name.empty() ? std::to_string(i) : docs[i].name) << "\n";
    }
  }
  return any ? kExitHole : kExitClean;
}

int run_perfect(const DetectOptions& o) {
  const std::string text = read_input(o.file);
  const auto doc = parse_graph(text, resolve_format(o.format, text));
  const auto r = test_perfect(doc.graph, parse_algorithm(o.algorithm));
  std::cout << (o.as_json ? to_json(r).dump() : text_line(r, o.witness, "")) << "\n";
  return r.verdict == Verdict::kImperfect ? kExitHole : kExitClean;
}

json gaps_json(const probes::GapReport& r) {
  json out = json::array();
  for (const auto& p : r.gaps) out.push_back({{"path", p}, {"length", static_cast<int>(p.size()) - 1}});
  return out;
}

int run_probe(const std::string& file, const std::string& format, const std::string& hole_list,
              const std::string& set_list) {
  const std::string text = read_input(file);
  const Graph g = parse_graph(text, resolve_format(format, text)).graph;
  json out;
  std::vector<Vertex> hole;
  if (hole_list.empty()) {
    auto r = detect(g);
    out["stage"] = stage_name(r.stage);
    if (r.hole) hole = *r.hole;
  } else {
    hole = parse_vertex_list(hole_list, g);
    if (!is_hole(g, hole)) throw InputError("--hole is not a hole of the graph");
  }
  out["hole"] = hole.empty() ? json(nullptr) : json(hole);
  if (!hole.empty()) {
    const VertexSet majors = probes::c_major_vertices(g, hole);
    out["odd"] = hole.size() % 2 == 1;
    out["c_major"] = majors.to_vector();
    out["clean"] = majors.empty();
    json xg = json::object();
    const VertexSet on = VertexSet::of(g.order(), hole);
    for (Vertex x = 0; x < g.order(); ++x)
      if (!on.contains(x) && g.neighbors(x).intersects(on)) xg[std::to_string(x)] = gaps_json(probes::x_gaps(g, hole, x));
    out["x_gaps"] = xg;
    json heavy = json::array();
    for (auto [u, v] : probes::x_heavy_edges(g, hole, majors)) heavy.push_back({u, v});
    out["major_heavy_edges"] = heavy;
    if (!set_list.empty()) {
      const auto a = parse_vertex_list(set_list, g);
      const VertexSet aset = VertexSet::of(g.order(), a);
      if (!aset.is_subset_of(on)) throw InputError("--set must be a subset of the hole");
      out["a_gaps"] = gaps_json(probes::a_gaps(hole, aset));
      out["normal"] = probes::is_normal(hole, aset);
    }
  }
  std::cout << out.dump(2) << "\n";
  return kExitClean;
}

int run_gen(const std::string& spec, const std::string& format) {
  const GraphFormat fmt = parse_format(format);
  for (const auto& doc : generate_corpus(spec)) {
    if (fmt == GraphFormat::kGraph6)
      std::cout << encode_graph6(doc.graph) << "\n";
    else
      std::cout << "# " << doc.name << "\n" << encode_edge_list(doc.graph);
  }
  return kExitClean;
}

int run_bench(const std::vector<int>& ns, double p, const std::vector<std::string>& algos, int seeds,
              std::uint64_t seed0, const std::string& out_path) {
  std::vector<Algorithm> as;
  for (const auto& a : algos) as.push_back(parse_algorithm(a));
  const auto rows = bench(ns, p, as, seeds, seed0);
  const std::string csv = bench_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << csv;
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd hole detection and perfect graph testing"};
  app.require_subcommand(1);

  DetectOptions d;
  auto* detect_cmd = app.add_subcommand("detect", "Decide whether a graph has an odd hole");
  detect_cmd->add_option("file", d.file, "Input file (default stdin)");
  detect_cmd->add_option("--format", d.format, "graph6, edgelist or auto")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  detect_cmd->add_option("--algorithm", d.algorithm, "fast, simple or oracle")->check(CLI::IsMember({"fast", "simple", "oracle"}));
  detect_cmd->add_option("--types", d.types, "Comma list of type detectors to run (fast only), e.g. 1,2");
  detect_cmd->add_flag("--witness", d.witness, "Print the odd hole");
  detect_cmd->add_flag("--json", d.as_json, "Emit a JSON result document");
  detect_cmd->add_flag("--stdin-stream", d.stream, "Read many graphs from stdin, one result each");

  DetectOptions pf;
  auto* perfect_cmd = app.add_subcommand("perfect", "Test perfection via the graph and its complement");
  perfect_cmd->add_option("file", pf.file, "Input file (default stdin)");
  perfect_cmd->add_option("--format", pf.format)->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  perfect_cmd->add_option("--algorithm", pf.algorithm)->check(CLI::IsMember({"fast", "simple", "oracle"}));
  perfect_cmd->add_flag("--witness", pf.witness);
  perfect_cmd->add_flag("--json", pf.as_json);

  std::string probe_file, probe_format = "auto", probe_hole, probe_set;
  auto* probe_cmd = app.add_subcommand("probe", "Dump hole structure (majors, gaps, heavy edges) as JSON");
  probe_cmd->add_option("file", probe_file);
  probe_cmd->add_option("--format", probe_format)->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  probe_cmd->add_option("--hole", probe_hole, "Comma list of hole vertices in cyclic order (default: detect one)");
  probe_cmd->add_option("--set", probe_set, "Subset of the hole for gap/normality queries");

  std::string gen_spec, gen_format = "edgelist";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a corpus, e.g. 'gnp 10 0.3 seed=1 count=5'");
  gen_cmd->add_option("spec", gen_spec)->required();
  gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"graph6", "edgelist"}));

  std::vector<int> bench_n{10, 15, 20, 25, 30};
  double bench_p = 0.3;
  std::vector<std::string> bench_algos{"fast"};
  int bench_seeds = 3;
  std::uint64_t bench_seed0 = 1;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Time detection on G(n,p); CSV n,p,algorithm,seed,millis,verdict");
  bench_cmd->add_option("--n", bench_n)->delimiter(',');
  bench_cmd->add_option("--p", bench_p)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--algorithm", bench_algos)->delimiter(',');
  bench_cmd->add_option("--seeds", bench_seeds)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed0);
  bench_cmd->add_option("-o,--output", bench_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*detect_cmd) return run_detect(d);
    if (*perfect_cmd) return run_perfect(pf);
    if (*probe_cmd) return run_probe(probe_file, probe_format, probe_hole, probe_set);
    if (*gen_cmd) return run_gen(gen_spec, gen_format);
    if (*bench_cmd) return run_bench(bench_n, bench_p, bench_algos, bench_seeds, bench_seed0, bench_out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
