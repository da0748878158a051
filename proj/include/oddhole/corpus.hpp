#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oddhole/io.hpp"
#include "oddhole/result.hpp"

namespace oddhole {

Graph cycle_graph(int k);
Graph path_graph(int k);
Graph complete_graph(int n);
Graph petersen_graph();
Graph complete_multipartite(std::span<const int> parts);
Graph gnp(int n, double p, std::mt19937_64& rng);
Graph random_bipartite(int a, int b, double p, std::mt19937_64& rng);
/// Each new vertex joins a random clique of the earlier ones, so the reversed
/// insertion order is a perfect elimination ordering.
Graph random_chordal(int n, double q, std::mt19937_64& rng);
/// Cycle 0..2k of length 2k+1 plus `majors` extra vertices. Each extra vertex
/// sees a random hole edge and further hole vertices that split the rest of
/// the hole into even stretches of length >= 2, one of them >= 4 when the hole
/// allows it. Extra vertices are joined to each other with probability q.
Graph decorated_odd_cycle(int k, int majors, double q, std::mt19937_64& rng);

/// Corpus spec: a family name, positional arguments, then key=value options.
///   cycle K | path K | complete N | petersen | antihole K
///   multipartite A,B,... | gnp N P | bipartite A B P | chordal N [q=Q]
///   decorated K [majors=M] [q=Q]
/// Random families take seed=S (default 1) and count=C (default 1); graph i
/// uses seed S+i. Throws std::invalid_argument on a bad spec.
std::vector<GraphDocument> generate_corpus(std::string_view spec);

struct BenchRow {
  int n = 0;
  double p = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  double millis = 0;
  std::string verdict;
};

/// Times run_detector on G(n, p) for every n, algorithm and seed in
/// [seed0, seed0 + seeds).
std::vector<BenchRow> bench(std::span<const int> ns, double p, std::span<const Algorithm> algorithms, int seeds,
                            std::uint64_t seed0 = 1);

/// Header "n,p,algorithm,seed,millis,verdict" then one line per row.
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace oddhole
