#include <gtest/gtest.h>

#include "lemmas.hpp"
#include "oddhole/clean_hole.hpp"
#include "oddhole/corpus.hpp"
#include "oddhole/detector_fast.hpp"
#include "oddhole/oracle.hpp"
#include "oddhole/structure_probes.hpp"
#include "support.hpp"

using namespace oddhole;
using namespace oddhole::fixtures;

namespace {

const std::vector<Vertex> kC7{0, 1, 2, 3, 4, 5, 6};

Graph cycle_plus(int k, std::initializer_list<Vertex> attach) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  for (Vertex v : attach) es.emplace_back(v, k);
  return Graph(k + 1, es);
}

std::vector<Vertex> cycle_order(int k) {
  std::vector<Vertex> h(static_cast<std::size_t>(k));
  std::iota(h.begin(), h.end(), 0);
  return h;
}

// Straight from the quantifier: no three consecutive hole vertices contain
// all of v's hole neighbours.
bool major_by_definition(const Graph& g, std::span<const Vertex> hole, Vertex v) {
  const int k = static_cast<int>(hole.size());
  for (int i = 0; i < k; ++i) {
    bool fits = true;
    for (int j = 0; j < k; ++j) {
      const int off = (j - i + k) % k;
      if (off > 2 && g.adjacent(v, hole[static_cast<std::size_t>(j)])) fits = false;
    }
    if (fits) return false;
  }
  return true;
}

std::vector<LemmaInstance> all_lemma_instances() {
  auto a = lemma_instances(1500, 1);
  auto b = major_pair_instances(300, 1);
  a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return a;
}

const std::vector<LemmaInstance>& instances() {
  static const auto insts = all_lemma_instances();
  return insts;
}

void expect_clean_suite(const Tally& t) {
  EXPECT_EQ(t.violations, 0) << t.first_violation;
  EXPECT_GE(t.exercised, 50) << "hypotheses satisfied by " << t.graphs << " instances";
}

}  // namespace

TEST(Probes, MajorExamples) {
  EXPECT_TRUE(probes::c_major_vertices(cycle_graph(7), kC7).empty());
  EXPECT_TRUE(probes::is_clean(cycle_graph(7), kC7));
  const Graph dom = cycle_plus(7, {0, 1, 2, 3, 4, 5, 6});
  EXPECT_EQ(probes::c_major_vertices(dom, kC7).to_vector(), std::vector<Vertex>{7});
  EXPECT_FALSE(probes::is_clean(dom, kC7));
  EXPECT_TRUE(probes::c_major_vertices(cycle_plus(7, {2, 3, 4}), kC7).empty());
  // Wrapping around the seam still counts as consecutive.
  EXPECT_TRUE(probes::c_major_vertices(cycle_plus(7, {6, 0, 1}), kC7).empty());
  EXPECT_EQ(probes::c_major_vertices(cycle_plus(7, {0, 3}), kC7).size(), 1);
}

TEST(Probes, MajorMatchesDefinition) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 5 + 2 * std::uniform_int_distribution<int>(0, 3)(rng);
    std::vector<Vertex> attach;
    for (Vertex i = 0; i < k; ++i)
      if (std::bernoulli_distribution(0.3)(rng)) attach.push_back(i);
    std::vector<Edge> es;
    for (Vertex i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    for (Vertex v : attach) es.emplace_back(v, k);
    const Graph g(k + 1, es);
    const auto hole = cycle_order(k);
    EXPECT_EQ(probes::c_major_vertices(g, hole).contains(k), major_by_definition(g, hole, k));
  }
}

TEST(Probes, AGapExamples) {
  auto gaps = probes::a_gaps(kC7, VertexSet::of(7, std::vector<Vertex>{0, 3}));
  auto lengths = gaps.lengths();
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<int>{3, 4}));
  EXPECT_FALSE(probes::is_normal(kC7, VertexSet::of(7, std::vector<Vertex>{0, 3})));
  EXPECT_EQ(probes::a_gaps(kC7, VertexSet::of(7, std::vector<Vertex>{0, 1})).lengths(), std::vector<int>{6});
  EXPECT_TRUE(probes::is_normal(kC7, VertexSet::of(7, std::vector<Vertex>{0, 1})));
  const auto c6 = cycle_order(6);
  EXPECT_EQ(probes::a_gaps(c6, VertexSet::of(6, std::vector<Vertex>{0, 2, 4})).lengths(), (std::vector<int>{2, 2, 2}));
  EXPECT_TRUE(probes::is_normal(c6, VertexSet::of(6, std::vector<Vertex>{0, 2, 4})));
  EXPECT_FALSE(probes::is_normal(kC7, VertexSet(7)));
  // Gap ends lie in A and interiors avoid it.
  for (const auto& p : gaps.gaps) {
    EXPECT_TRUE(p.front() == 0 || p.front() == 3);
    EXPECT_TRUE(p.back() == 0 || p.back() == 3);
    for (std::size_t i = 1; i + 1 < p.size(); ++i) EXPECT_TRUE(p[i] != 0 && p[i] != 3);
  }
}

TEST(Probes, XGapExamples) {
  auto lengths = probes::x_gaps(cycle_plus(7, {0, 3}), kC7, 7).lengths();
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<int>{3, 4}));
  EXPECT_EQ(probes::x_gaps(cycle_plus(7, {0, 1}), kC7, 7).lengths(), std::vector<int>{6});
  EXPECT_TRUE(probes::x_gaps(cycle_plus(7, {2}), kC7, 7).gaps.empty());
}

TEST(Probes, XGapLengthsSumToHoleWithoutAdjacentNeighbours) {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 5 + 2 * std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<Vertex> attach;
    for (Vertex i = 0; i < k; ++i)
      if (std::bernoulli_distribution(0.35)(rng)) attach.push_back(i);
    bool spaced = attach.size() >= 2;
    for (std::size_t i = 0; i < attach.size(); ++i) {
      const Vertex a = attach[i], b = attach[(i + 1) % attach.size()];
      spaced = spaced && (b - a + k) % k != 1;
    }
    if (!spaced) continue;
    std::vector<Edge> es;
    for (Vertex i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    for (Vertex v : attach) es.emplace_back(v, k);
    const auto lengths = probes::x_gaps(Graph(k + 1, es), cycle_order(k), k).lengths();
    EXPECT_EQ(std::accumulate(lengths.begin(), lengths.end(), 0), k);
    EXPECT_EQ(lengths.size(), attach.size());
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Probes, HeavyEdgeExamples) {
  const Graph c7 = cycle_graph(7);
  EXPECT_EQ(probes::x_heavy_edges(c7, kC7, VertexSet(7)).size(), 7u);
  const Graph dom = cycle_plus(7, {0, 1, 2, 3, 4, 5, 6});
  EXPECT_EQ(probes::x_heavy_edges(dom, kC7, VertexSet::of(8, std::vector<Vertex>{7})).size(), 7u);
  const Graph c9w = cycle_plus(9, {0, 1, 2, 3});
  auto heavy = probes::x_heavy_edges(c9w, cycle_order(9), VertexSet::of(10, std::vector<Vertex>{9}));
  for (auto& [u, v] : heavy)
    if (u > v) std::swap(u, v);
  std::sort(heavy.begin(), heavy.end());
  EXPECT_EQ(heavy, (std::vector<Edge>{{0, 1}, {0, 8}, {1, 2}, {2, 3}, {3, 4}}));
  // Edges touching a member of X do not count: with X = {0} only the edges
  // next to 0's neighbours qualify.
  EXPECT_EQ(probes::x_heavy_edges(c7, kC7, VertexSet::of(7, std::vector<Vertex>{0})).size(), 2u);
}

TEST(Probes, CompleteTo) {
  const Graph g(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {7, 0}, {7, 1}, {7, 3}, {8, 1}, {8, 3}, {8, 5}});
  EXPECT_EQ(probes::complete_to(g, kC7, VertexSet::of(9, std::vector<Vertex>{7, 8})).to_vector(), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(probes::complete_to(g, kC7, VertexSet(9)).size(), 7);
}

TEST(LemmaSuite, StableNeighbours) { expect_clean_suite(check_stable_neighbours(instances())); }
TEST(LemmaSuite, ManyNeighbours) { expect_clean_suite(check_many_neighbours(instances())); }
TEST(LemmaSuite, MajorJump) { expect_clean_suite(check_major_jump(instances())); }
TEST(LemmaSuite, HeavyEdge) { expect_clean_suite(check_heavy_edge(instances())); }
TEST(LemmaSuite, ShortPath) { expect_clean_suite(check_short_path(instances())); }

TEST(LemmaSuite, ProbeCatchesBrokenHypothesis) {
  // A pyramid: C7 plus a vertex seeing 0, 1 and 4. The vertex is major with
  // only three hole neighbours, which the many-neighbours check flags.
  LemmaInstance inst{cycle_plus(7, {0, 1, 4}), {kC7}, false};
  ASSERT_TRUE(oracle::find_pyramid(inst.g));
  const auto t = check_many_neighbours({inst});
  EXPECT_EQ(t.violations, 1);
}

TEST(CleanTest, Examples) {
  const auto c7 = test_clean(cycle_graph(7));
  ASSERT_TRUE(c7.found());
  EXPECT_EQ(canonical_cycle(*c7.hole), kC7);
  EXPECT_FALSE(test_clean(cycle_graph(6)).found());
  EXPECT_FALSE(test_heavy_cleanable(cycle_graph(6)).found());
  // Masked: deleting a vertex of C7 leaves no hole.
  VertexSet mask = VertexSet::full(7);
  mask.erase(3);
  EXPECT_FALSE(test_clean(cycle_graph(7), mask).found());
}

TEST(CleanTest, HeavyCleaningSet) {
  const Graph g = cycle_plus(7, {1, 2, 5});
  const std::array<Vertex, 4> c{0, 1, 2, 3};
  EXPECT_EQ(heavy_cleaning_set(g, c).to_vector(), std::vector<Vertex>{7});
}

TEST(CleanTest, FindsEveryCleanShortestOddHoleUpToSeven) {
  int clean_instances = 0, heavy_instances = 0;
  for (int n = 5; n <= 7; ++n)
    for (const Graph& g : graphs_on(n)) {
      const auto shortest = oracle::shortest_odd_holes(g);
      if (shortest.empty()) continue;
      const bool configs = oracle::find_pyramid(g) || oracle::find_jewel(g);
      const auto r = test_clean(g);
      if (r.found()) {
        EXPECT_TRUE(is_odd_hole(g, *r.hole));
      }
      if (configs) continue;
      bool any_clean = false, all_heavy = true;
      for (const auto& h : shortest) {
        any_clean = any_clean || probes::is_clean(g, h);
        all_heavy = all_heavy && !probes::x_heavy_edges(g, h, probes::c_major_vertices(g, h)).empty();
      }
      if (any_clean) {
        ++clean_instances;
        EXPECT_TRUE(r.found()) << encode_graph6(g);
      }
      if (all_heavy) {
        ++heavy_instances;
        const auto hc = test_heavy_cleanable(g);
        ASSERT_TRUE(hc.found()) << encode_graph6(g);
        EXPECT_TRUE(is_odd_hole(g, *hc.hole));
      }
    }
  EXPECT_GT(clean_instances, 10);
  EXPECT_GT(heavy_instances, 10);
}

TEST(Classify, Examples) {
  const auto c5 = classify_candidate(cycle_graph(5));
  ASSERT_FALSE(c5.is_candidate());
  EXPECT_TRUE(is_odd_hole(cycle_graph(5), *c5.hole));
  EXPECT_TRUE(classify_candidate(cycle_graph(6)).is_candidate());
  const auto pet = detect(petersen_graph());
  ASSERT_TRUE(pet.found());
  EXPECT_TRUE(is_odd_hole(petersen_graph(), *pet.hole));
  const auto jewel = classify_candidate(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 3}}));
  ASSERT_FALSE(jewel.is_candidate());
}

TEST(Classify, CandidatesHaveNoConfigurations) {
  int candidates = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + trial % 5;
    const Graph g = random_gnp(n, 0.2 + 0.1 * (trial % 5), 900 + static_cast<std::uint64_t>(trial));
    const auto c = classify_candidate(g);
    if (!c.is_candidate()) {
      EXPECT_TRUE(is_odd_hole(g, *c.hole));
      continue;
    }
    ++candidates;
    EXPECT_FALSE(oracle::find_pyramid(g)) << encode_graph6(g);
    EXPECT_FALSE(oracle::find_jewel(g)) << encode_graph6(g);
  }
  EXPECT_GT(candidates, 50);
}
