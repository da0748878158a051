#include "oddhole/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oddhole {

Graph cycle_graph(int k) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return Graph(k, es);
}

Graph path_graph(int k) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  return Graph(k, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, es);
}

Graph complete_multipartite(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  const auto n = static_cast<Vertex>(part_of.size());
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph random_bipartite(int a, int b, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(a + b, es);
}

Graph random_chordal(int n, double q, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(q);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  std::vector<Edge> es;
  auto adjacent = [&](Vertex u, Vertex v) {
    const auto& a = adj[static_cast<std::size_t>(u)];
    return std::find(a.begin(), a.end(), v) != a.end();
  };
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    std::vector<Vertex> clique{u};
    std::vector<Vertex> others = adj[static_cast<std::size_t>(u)];
    std::shuffle(others.begin(), others.end(), rng);
    for (Vertex w : others)
      if (keep(rng) && std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return adjacent(c, w); }))
        clique.push_back(w);
    // Occasionally start a new component.
    if (!keep(rng) && !keep(rng)) clique.clear();
    for (Vertex c : clique) {
      es.emplace_back(c, v);
      adj[static_cast<std::size_t>(c)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(c);
    }
  }
  return Graph(n, es);
}

Graph decorated_odd_cycle(int k, int majors, double q, std::mt19937_64& rng) {
  const int len = 2 * k + 1;
  if (k < 2) throw std::invalid_argument("decorated cycle needs k >= 2");
  std::vector<Edge> es;
  for (Vertex i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
  std::bernoulli_distribution coin(q);
  for (int m = 0; m < majors; ++m) {
    const Vertex x = len + m;
    const Vertex start = std::uniform_int_distribution<Vertex>(0, len - 1)(rng);
    // Stretch lengths: even, >= 2, summing to 2k, at least two of them.
    std::vector<int> parts;
    int rest = 2 * k;
    const bool want_long = 2 * k >= 6;
    if (want_long) {
      const int big = 2 * std::uniform_int_distribution<int>(2, k - 1)(rng);
      parts.push_back(big);
      rest -= big;
    }
    while (rest > 0) {
      const int piece = rest == 2 ? 2 : 2 * std::uniform_int_distribution<int>(1, rest / 2 - (parts.empty() ? 1 : 0))(rng);
      parts.push_back(piece);
      rest -= piece;
    }
    std::shuffle(parts.begin(), parts.end(), rng);
    Vertex at = (start + 1) % len;
    es.emplace_back(start, x);
    es.emplace_back(at, x);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      at = (at + parts[i]) % len;
      es.emplace_back(at, x);
    }
    for (Vertex y = len; y < x; ++y)
      if (coin(rng)) es.emplace_back(y, x);
  }
  return Graph(len + majors, es);
}

namespace {

struct Spec {
  std::string family;
  std::vector<std::string> args;
  std::map<std::string, std::string, std::less<>> opts;
};

Spec split_spec(std::string_view text) {
  Spec s;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    if (s.family.empty()) {
      s.family = word;
    } else if (auto eq = word.find('='); eq != std::string::npos) {
      s.opts[word.substr(0, eq)] = word.substr(eq + 1);
    } else {
      s.args.push_back(word);
    }
  }
  if (s.family.empty()) throw std::invalid_argument("empty corpus spec");
  return s;
}

template <class T>
T number(std::string_view text, std::string_view what) {
  T v{};
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size())
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

double probability(std::string_view text) {
  const double p = number<double>(text, "probability");
  if (p < 0 || p > 1) throw std::invalid_argument("probability out of range: " + std::string(text));
  return p;
}

int order(std::string_view text, int low = 0) {
  const int n = number<int>(text, "size");
  if (n < low || n > 4096) throw std::invalid_argument("size out of range: " + std::string(text));
  return n;
}

std::string fmt_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

}  // namespace

std::vector<GraphDocument> generate_corpus(std::string_view text) {
  const Spec s = split_spec(text);
  auto need = [&](std::size_t count) {
    if (s.args.size() != count)
      throw std::invalid_argument("'" + s.family + "' takes " + std::to_string(count) + " argument(s)");
  };
  for (const auto& [key, value] : s.opts)
    if (key != "seed" && key != "count" && key != "q" && key != "majors")
      throw std::invalid_argument("unknown option '" + key + "'");
  const auto seed = s.opts.contains("seed") ? number<std::uint64_t>(s.opts.at("seed"), "seed") : 1;
  const int count = s.opts.contains("count") ? order(s.opts.at("count"), 1) : 1;
  std::vector<GraphDocument> out;
  auto add = [&](Graph g, std::string name) { out.push_back({std::move(g), GraphFormat::kEdgeList, std::move(name)}); };
  auto each_seed = [&](auto make, const std::string& stem) {
    for (int i = 0; i < count; ++i) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
      add(make(rng), stem + " seed=" + std::to_string(seed + static_cast<std::uint64_t>(i)));
    }
  };

  if (s.family == "cycle") {
    need(1);
    add(cycle_graph(order(s.args[0], 3)), "cycle " + s.args[0]);
  } else if (s.family == "path") {
    need(1);
    add(path_graph(order(s.args[0])), "path " + s.args[0]);
  } else if (s.family == "complete") {
    need(1);
    add(complete_graph(order(s.args[0])), "complete " + s.args[0]);
  } else if (s.family == "antihole") {
    need(1);
    add(complement(cycle_graph(order(s.args[0], 3))), "antihole " + s.args[0]);
  } else if (s.family == "petersen") {
    need(0);
    add(petersen_graph(), "petersen");
  } else if (s.family == "multipartite") {
    need(1);
    std::vector<int> parts;
    std::string_view rest = s.args[0];
    while (!rest.empty()) {
      auto comma = rest.find(',');
      parts.push_back(order(rest.substr(0, comma), 1));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    add(complete_multipartite(parts), "multipartite " + s.args[0]);
  } else if (s.family == "gnp") {
    need(2);
    const int n = order(s.args[0]);
    const double p = probability(s.args[1]);
    each_seed([&](std::mt19937_64& rng) { return gnp(n, p, rng); }, "gnp " + s.args[0] + " " + fmt_p(p));
  } else if (s.family == "bipartite") {
    need(3);
    const int a = order(s.args[0]), b = order(s.args[1]);
    const double p = probability(s.args[2]);
    each_seed([&](std::mt19937_64& rng) { return random_bipartite(a, b, p, rng); },
              "bipartite " + s.args[0] + " " + s.args[1] + " " + fmt_p(p));
  } else if (s.family == "chordal") {
    need(1);
    const int n = order(s.args[0]);
    const double q = s.opts.contains("q") ? probability(s.opts.at("q")) : 0.5;
    each_seed([&](std::mt19937_64& rng) { return random_chordal(n, q, rng); }, "chordal " + s.args[0]);
  } else if (s.family == "decorated") {
    need(1);
    const int k = order(s.args[0], 2);
    const int majors = s.opts.contains("majors") ? order(s.opts.at("majors")) : 2;
    const double q = s.opts.contains("q") ? probability(s.opts.at("q")) : 0.5;
    each_seed([&](std::mt19937_64& rng) { return decorated_odd_cycle(k, majors, q, rng); },
              "decorated " + s.args[0] + " majors=" + std::to_string(majors));
  } else {
    throw std::invalid_argument("unknown family '" + s.family + "'");
  }
  return out;
}

std::vector<BenchRow> bench(std::span<const int> ns, double p, std::span<const Algorithm> algorithms, int seeds,
                            std::uint64_t seed0) {
  std::vector<BenchRow> rows;
  for (int n : ns)
    for (int i = 0; i < seeds; ++i) {
      const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
      std::mt19937_64 rng(seed);
      const Graph g = gnp(n, p, rng);
      for (Algorithm a : algorithms) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = run_detector(g, a);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rows.push_back({n, p, std::string(algorithm_name(a)), seed, ms,
                        std::string(verdict_name(r.found() ? Verdict::kOddHoleFound : Verdict::kNoOddHole))});
      }
    }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out = "n,p,algorithm,seed,millis,verdict\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.millis);
    out += std::to_string(r.n) + "," + fmt_p(r.p) + "," + r.algorithm + "," + std::to_string(r.seed) + "," + buf + "," +
           r.verdict + "\n";
  }
  return out;
}

}  // namespace oddhole
