#include "oddhole/detector_fast.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oddhole/clean_hole.hpp"

namespace oddhole {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// v followed by a shortest path of the tree's mask from a neighbour of v to
// the tree's source. Only v itself may lie outside the mask.
Path route(const Graph& g, const ShortestPathTree& tree, Vertex v) {
  if (v == tree.source) return {v};
  Vertex best = -1;
  for (Vertex u : g.neighbor_list(v))
    if (tree.reaches(u) && (best == -1 || tree.dist[idx(u)] < tree.dist[idx(best)])) best = u;
  if (best == -1) return {};
  Path p = tree.path_to(best);
  p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

VertexSet distance_sum_set(const VertexSet& mask, const std::vector<int>& da, const std::vector<int>& db, int t,
                           Vertex skip1, Vertex skip2) {
  VertexSet out(mask);
  out.clear();
  mask.for_each([&](Vertex v) {
    if (v == skip1 || v == skip2) return;
    const auto i = idx(v);
    if (reachable(da[i]) && reachable(db[i]) && da[i] + db[i] == t) out.insert(v);
  });
  return out;
}

// Vertices outside `core` with a neighbour in `seeds`, minus `keep`.
VertexSet x3_set(const Graph& g, const VertexSet& seeds, const VertexSet& core, std::initializer_list<Vertex> keep) {
  VertexSet out = boundary(g, g.all_vertices(), seeds);
  out -= core;
  for (Vertex v : keep) out.erase(v);
  return out;
}

void append(HoleWitness& w, const Path& p, std::size_t skip_front) {
  w.insert(w.end(), p.begin() + static_cast<std::ptrdiff_t>(skip_front), p.end());
}

void append_reversed(HoleWitness& w, const Path& p, std::size_t skip_back) {
  w.insert(w.end(), p.rbegin() + static_cast<std::ptrdiff_t>(skip_back), p.rend());
}

DetectionResult verified(const Graph& g, HoleWitness w, Stage stage) {
  if (is_odd_hole(g, w)) return {std::move(w), stage};
  return {};
}

// Linkage over C1 x C4 split by route parity; `close` turns a linked pair into
// a candidate cycle.
template <class Close>
DetectionResult link_and_close(const Graph& g, const VertexSet& c1, const VertexSet& c4, Vertex hub1, Vertex hub4,
                               std::vector<Path>& routes, Stage stage, Close close) {
  for (std::size_t parity = 0; parity < 2; ++parity) {
    LinkageInstance inst;
    inst.hub_a = hub1;
    inst.hub_b = hub4;
    c1.for_each([&](Vertex v) {
      const Path& r = routes[idx(v)];
      if (!r.empty() && (r.size() - 1) % 2 == parity) inst.a.push_back(v);
    });
    if (inst.a.empty()) continue;
    c4.for_each([&](Vertex v) {
      const Path& r = routes[idx(v)];
      if (!r.empty() && (r.size() - 1) % 2 == parity) inst.b.push_back(v);
    });
    if (inst.b.empty()) continue;
    inst.routes = std::move(routes);
    for (auto [a, b] : linked_pairs(g, inst)) {
      auto r = verified(g, close(inst.routes[idx(a)], inst.routes[idx(b)]), stage);
      if (r.found()) return r;
    }
    routes = std::move(inst.routes);
  }
  return {};
}

// Induced paths d1-x-d2 with d1 < d2 (types 1 and 2 are symmetric in d1, d2).
template <class Fn>
void for_each_p3(const Graph& g, Fn fn) {
  for (Vertex x = 0; x < g.order(); ++x) {
    auto nx = g.neighbor_list(x);
    for (std::size_t i = 0; i < nx.size(); ++i)
      for (std::size_t j = i + 1; j < nx.size(); ++j)
        if (!g.adjacent(nx[i], nx[j]) && fn(nx[i], x, nx[j])) return;
  }
}

// The seven-tuple shape shared by types 3 to 6: c1-d1-c3-c4 induced, c2 = d1,
// x a neighbour of d1 outside the path, d2 a neighbour of x not in N[d1].
struct Tuple7 {
  Vertex c1, d1, c3, c4, x, d2;
};

template <class Fn>
void for_each_tuple7(const Graph& g, Fn fn) {
  for (Vertex d1 = 0; d1 < g.order(); ++d1)
    for (Vertex c3 : g.neighbor_list(d1))
      for (Vertex c1 : g.neighbor_list(d1)) {
        if (c1 == c3 || g.adjacent(c1, c3)) continue;
        for (Vertex c4 : g.neighbor_list(c3)) {
          if (c4 == d1 || g.adjacent(c4, d1) || g.adjacent(c4, c1)) continue;
          for (Vertex x : g.neighbor_list(d1)) {
            if (x == c1 || x == c3 || x == c4) continue;
            for (Vertex d2 : g.neighbor_list(x)) {
              if (d2 == d1 || d2 == c4 || g.adjacent(d2, d1)) continue;
              if (fn(Tuple7{c1, d1, c3, c4, x, d2})) return;
            }
          }
        }
      }
}

VertexSet common_but(const Graph& g, Vertex d1, Vertex d2, Vertex x) {
  VertexSet s = g.neighbors(d1) & g.neighbors(d2);
  s.erase(x);
  return s;
}

VertexSet tuple7_x2(const Graph& g, const Tuple7& t) {
  VertexSet s = g.neighbors(t.d1) | g.neighbors(t.c3);
  for (Vertex v : {t.c1, t.d1, t.c3, t.c4}) s.erase(v);
  return s;
}

// Short gap, c2 = d1 (types 3 and 5). `anchor` is the neighbour of d1 on the
// gap: c1 for type 3, c3 for type 5.
DetectionResult detect_short_d1(const Graph& g, bool anchor_is_c3, Stage stage) {
  const VertexSet all = g.all_vertices();
  DetectionResult out;
  for_each_tuple7(g, [&](const Tuple7& t) {
    const Vertex anchor = anchor_is_c3 ? t.c3 : t.c1;
    // The gap runs d1-anchor-...-d2 with x anticomplete to its interior.
    if (g.adjacent(t.x, anchor)) return false;
    if (anchor_is_c3 && g.adjacent(t.x, t.c4)) return false;
    const VertexSet x1 = common_but(g, t.d1, t.d2, t.x);
    const VertexSet x2 = tuple7_x2(g, t);
    VertexSet nx = g.closed_neighbors(t.x);
    nx.erase(anchor);
    nx.erase(t.d2);
    const VertexSet gp = all - (x1 | x2 | nx);
    if (!gp.contains(anchor) || !gp.contains(t.d2)) return false;
    const auto da = bfs_distances(g, gp, anchor);
    const int len = da[idx(t.d2)];
    // dist(anchor, d2) is the gap length minus one, and the gap is even.
    if (!reachable(len) || len < 3 || len % 2 == 0) return false;
    const auto db = bfs_distances(g, gp, t.d2);
    const VertexSet y = distance_sum_set(gp, da, db, len, anchor, t.d2);
    const VertexSet x3 = x3_set(g, y, y, {t.x, anchor, t.d2});
    VertexSet gpp = all - (x1 | x2 | x3);
    gpp.erase(t.x);
    if (!gpp.contains(t.c1) || !gpp.contains(t.c4)) return false;
    const auto p1 = shortest_path_tree(g, gpp, t.c1);
    const auto p4 = shortest_path_tree(g, gpp, t.c4);
    for (Vertex d3 = gpp.first(); d3 != -1; d3 = gpp.next(d3 + 1)) {
      if (d3 == t.d1 || d3 == t.c3 || d3 == t.c1 || d3 == t.c4) continue;
      if (!p1.reaches(d3) || p1.dist[idx(d3)] != p4.dist[idx(d3)]) continue;
      HoleWitness w = p1.path_to(d3);
      append_reversed(w, p4.path_to(d3), 1);
      w.push_back(t.c3);
      w.push_back(t.d1);
      out = verified(g, std::move(w), stage);
      if (out.found()) return true;
    }
    return false;
  });
  return out;
}

// Long gap split at its middle vertex d3; shared by types 2, 4 and 6.
struct LongGap {
  VertexSet y1, y2, gpp;
  Path half1, half2;  // d1..d3 and d3..d2
};

std::optional<LongGap> long_gap(const Graph& g, const VertexSet& x12, const VertexSet& gp, Vertex x, Vertex d1,
                                Vertex d2, Vertex d3, const std::vector<int>& dist1,
                                const std::vector<int>& dist2) {
  const int t = dist1[idx(d3)];
  if (!reachable(t) || t < 2 || dist2[idx(d3)] != t) return std::nullopt;
  const auto dist3 = bfs_distances(g, gp, d3);
  LongGap lg{distance_sum_set(gp, dist1, dist3, t, d1, d2), distance_sum_set(gp, dist2, dist3, t, d1, d2),
             g.empty_set(), {}, {}};
  const VertexSet y = lg.y1 | lg.y2;
  const VertexSet x3 = x3_set(g, y, y, {x, d1, d2});
  lg.gpp = g.all_vertices() - (x12 | x3);
  lg.gpp.erase(x);
  VertexSet m1 = lg.y1, m2 = lg.y2;
  m1.insert(d1);
  m2.insert(d2);
  auto h1 = shortest_path(g, m1, d1, d3);
  auto h2 = shortest_path(g, m2, d3, d2);
  if (!h1 || !h2) return std::nullopt;
  lg.half1 = std::move(*h1);
  lg.half2 = std::move(*h2);
  return lg;
}

// Long gap, c2 = d1 (types 4 and 6): a single route closes the hole, from c4
// to d2 for type 4 and from c1 to d2 for type 6.
DetectionResult detect_long_d1(const Graph& g, bool c3_inside, Stage stage) {
  const VertexSet all = g.all_vertices();
  DetectionResult out;
  for_each_tuple7(g, [&](const Tuple7& t) {
    if (c3_inside && (g.adjacent(t.x, t.c3) || g.adjacent(t.x, t.c4))) return false;
    if (!c3_inside && g.adjacent(t.x, t.c1)) return false;
    const VertexSet x12 = common_but(g, t.d1, t.d2, t.x) | tuple7_x2(g, t);
    VertexSet nx = g.closed_neighbors(t.x);
    nx.erase(t.d1);
    nx.erase(t.d2);
    const VertexSet gp = all - (x12 | nx);
    if (!gp.contains(t.d1) || !gp.contains(t.d2)) return false;
    const auto dist1 = bfs_distances(g, gp, t.d1);
    const auto dist2 = bfs_distances(g, gp, t.d2);
    const Vertex start = c3_inside ? t.c1 : t.c4;
    for (Vertex d3 = gp.first(); d3 != -1; d3 = gp.next(d3 + 1)) {
      if (d3 == t.d1 || d3 == t.d2) continue;
      auto lg = long_gap(g, x12, gp, t.x, t.d1, t.d2, d3, dist1, dist2);
      if (!lg) continue;
      const Path r = route(g, shortest_path_tree(g, lg->gpp, t.d2), start);
      if (r.size() < 2) continue;
      HoleWitness w = lg->half1;
      append(w, lg->half2, 1);
      append_reversed(w, r, 1);
      if (!c3_inside) w.push_back(t.c3);
      out = verified(g, std::move(w), stage);
      if (out.found()) return true;
    }
    return false;
  });
  return out;
}

}  // namespace

std::vector<std::pair<Vertex, Vertex>> linked_pairs(const Graph& g, const LinkageInstance& inst) {
  const bool one_hub = inst.hub_a == inst.hub_b;
  auto body = [&](Vertex v) {
    VertexSet s(g.order());
    for (Vertex w : inst.routes[idx(v)]) s.insert(w);
    if (one_hub) s.erase(inst.hub_a);
    return s;
  };
  std::vector<std::pair<Vertex, VertexSet>> bs;
  for (Vertex b : inst.b)
    if (!inst.routes[idx(b)].empty()) bs.emplace_back(b, body(b));
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a : inst.a) {
    if (inst.routes[idx(a)].empty()) continue;
    const VertexSet sa = body(a);
    VertexSet reach = sa;
    sa.for_each([&](Vertex v) { reach |= g.neighbors(v); });
    for (const auto& [b, sb] : bs)
      if (!reach.intersects(sb)) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Vertex, Vertex>> odd_linkage(const Graph& g, const LinkageInstance& inst) {
  const int n = g.order();
  auto fail = [](const std::string& why) { throw std::invalid_argument("malformed linkage instance: " + why); };
  if (inst.hub_a < 0 || inst.hub_a >= n || inst.hub_b < 0 || inst.hub_b >= n) fail("hub out of range");
  if (inst.routes.size() < static_cast<std::size_t>(n)) fail("routes not indexed by vertex");
  VertexSet members(n);
  for (const auto* side : {&inst.a, &inst.b})
    for (Vertex v : *side) {
      if (v < 0 || v >= n) fail("member out of range");
      if (members.contains(v)) fail("A and B overlap");
      members.insert(v);
    }
  for (Vertex h : {inst.hub_a, inst.hub_b}) {
    if (members.contains(h)) fail("hub is a member");
    if (g.neighbors(h).intersects(members)) fail("hub adjacent to a member");
  }
  auto check = [&](Vertex v, Vertex hub) {
    const Path& r = inst.routes[idx(v)];
    if (r.size() < 2 || r.front() != v || r.back() != hub) fail("route of " + std::to_string(v) + " has wrong ends");
    if (!is_induced_path(g, r)) fail("route of " + std::to_string(v) + " is not an induced path");
    for (std::size_t i = 1; i < r.size(); ++i)
      if (members.contains(r[i])) fail("route of " + std::to_string(v) + " meets another member");
  };
  for (Vertex a : inst.a) check(a, inst.hub_a);
  for (Vertex b : inst.b) check(b, inst.hub_b);
  auto pairs = linked_pairs(g, inst);
  if (pairs.empty()) return std::nullopt;
  return pairs.front();
}

DetectionResult detect_type1(const Graph& g) {
  const VertexSet all = g.all_vertices();
  DetectionResult out;
  for (Vertex c2 = 0; c2 < g.order() && !out.found(); ++c2)
    for (Vertex c3 : g.neighbor_list(c2)) {
      if (c3 < c2) continue;
      VertexSet c1s = g.neighbors(c2) - g.closed_neighbors(c3);
      VertexSet c4s = g.neighbors(c3) - g.closed_neighbors(c2);
      const VertexSet near = g.neighbors(c2) | g.neighbors(c3);
      for_each_p3(g, [&](Vertex d1, Vertex x, Vertex d2) {
        if (x == c2 || x == c3 || d1 == c2 || d1 == c3 || d2 == c2 || d2 == c3) return false;
        VertexSet x2 = near;
        for (Vertex v : {x, c2, c3, d1, d2}) x2.erase(v);
        const VertexSet x12 = common_but(g, d1, d2, x) | x2;
        VertexSet nx = g.closed_neighbors(x);
        nx.erase(d1);
        nx.erase(d2);
        const VertexSet gp = all - (x12 | nx);
        const auto dist1 = bfs_distances(g, gp, d1);
        const int len = dist1[idx(d2)];
        // The gap is an even path of length at least four.
        if (!reachable(len) || len < 4 || len % 2 == 1) return false;
        const auto dist2 = bfs_distances(g, gp, d2);
        const VertexSet y = distance_sum_set(gp, dist1, dist2, len, d1, d2);
        VertexSet gpp = all - (x12 | x3_set(g, y, y, {x, d1, d2}));
        gpp.erase(x);
        VertexSet a = c1s, b = c4s;
        a.erase(x);
        b.erase(x);
        if (a.empty() || b.empty()) return false;
        std::vector<Path> routes(static_cast<std::size_t>(g.order()));
        for (Vertex d3 = gpp.first(); d3 != -1; d3 = gpp.next(d3 + 1)) {
          if (d3 == c2 || d3 == c3) continue;
          const auto tree = shortest_path_tree(g, gpp, d3);
          (a | b).for_each([&](Vertex v) { routes[idx(v)] = route(g, tree, v); });
          out = link_and_close(g, a, b, d3, d3, routes, Stage::kType1, [&](const Path& ra, const Path& rb) {
            HoleWitness w{c2};
            append(w, ra, 0);
            append_reversed(w, rb, 1);
            w.push_back(c3);
            return w;
          });
          if (out.found()) return true;
        }
        return false;
      });
      if (out.found()) break;
    }
  return out;
}

DetectionResult detect_type2(const Graph& g) {
  const VertexSet all = g.all_vertices();
  DetectionResult out;
  for (Vertex c2 = 0; c2 < g.order() && !out.found(); ++c2)
    for (Vertex c3 : g.neighbor_list(c2)) {
      const VertexSet c1s = g.neighbors(c2) - g.closed_neighbors(c3);
      const VertexSet c4s = g.neighbors(c3) - g.closed_neighbors(c2);
      const VertexSet near = g.neighbors(c2) | g.neighbors(c3);
      // d1 < d2 halves the work; both orientations of c2c3 are tried instead.
      for_each_p3(g, [&](Vertex d1, Vertex x, Vertex d2) {
        if (x == c2 || x == c3 || d1 == c2 || d1 == c3 || d2 == c2 || d2 == c3) return false;
        VertexSet x2 = near;
        for (Vertex v : {x, c2, c3, d1, d2}) x2.erase(v);
        const VertexSet x12 = common_but(g, d1, d2, x) | x2;
        VertexSet nx = g.closed_neighbors(x);
        nx.erase(d1);
        nx.erase(d2);
        const VertexSet gp = all - (x12 | nx);
        const auto dist1 = bfs_distances(g, gp, d1);
        const auto dist2 = bfs_distances(g, gp, d2);
        std::vector<Path> routes(static_cast<std::size_t>(g.order()));
        for (Vertex d3 = gp.first(); d3 != -1; d3 = gp.next(d3 + 1)) {
          if (d3 == d1 || d3 == d2 || d3 == c2 || d3 == c3) continue;
          VertexSet a = c1s - g.closed_neighbors(d3), b = c4s - g.closed_neighbors(d3);
          a.erase(x);
          b.erase(x);
          if (a.empty() || b.empty()) continue;
          auto lg = long_gap(g, x12, gp, x, d1, d2, d3, dist1, dist2);
          if (!lg) continue;
          const auto t1 = shortest_path_tree(g, lg->gpp, d1);
          const auto t2 = shortest_path_tree(g, lg->gpp, d2);
          a.for_each([&](Vertex v) { routes[idx(v)] = route(g, t1, v); });
          b.for_each([&](Vertex v) { routes[idx(v)] = route(g, t2, v); });
          out = link_and_close(g, a, b, d1, d2, routes, Stage::kType2, [&](const Path& ra, const Path& rb) {
            HoleWitness w{c2};
            append(w, ra, 0);
            append(w, lg->half1, 1);
            append(w, lg->half2, 1);
            append_reversed(w, rb, 1);
            w.push_back(c3);
            return w;
          });
          if (out.found()) return true;
        }
        return false;
      });
      if (out.found()) break;
    }
  return out;
}

DetectionResult detect_type3(const Graph& g) { return detect_short_d1(g, false, Stage::kType3); }
DetectionResult detect_type4(const Graph& g) { return detect_long_d1(g, false, Stage::kType4); }
DetectionResult detect_type5(const Graph& g) { return detect_short_d1(g, true, Stage::kType5); }
DetectionResult detect_type6(const Graph& g) { return detect_long_d1(g, true, Stage::kType6); }

DetectionResult detect_fast(const Graph& g, TypeSelection types) {
  using Detector = DetectionResult (*)(const Graph&);
  static constexpr Detector kDetectors[] = {detect_type1, detect_type2, detect_type3,
                                            detect_type4, detect_type5, detect_type6};
  if (g.order() < 5) return {};
  for (std::size_t i = 0; i < 6; ++i)
    if (types.test(i))
      if (auto r = kDetectors[i](g); r.found()) return r;
  return {};
}

DetectionResult detect(const Graph& g, TypeSelection types) {
  if (g.order() < 5) return {};
  // Cheap first pass: a clean shortest odd hole is found directly.
  if (auto r = test_clean(g); r.found()) return {std::move(r.hole), Stage::kCleanPrepass};
  auto c = classify_candidate(g);
  if (!c.is_candidate()) {
    const Stage s = c.stage == CandidateStage::kJewel     ? Stage::kJewel
                    : c.stage == CandidateStage::kPyramid ? Stage::kPyramid
                                                          : Stage::kHeavyCleanable;
    return {std::move(c.hole), s};
  }
  return detect_fast(g, types);
}

}  // namespace oddhole
