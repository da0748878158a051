#include "oddhole/oracle.hpp"

#include <algorithm>

namespace oddhole::oracle {

namespace {

// Depth-first growth of induced paths p[0] p[1] ... from p[0], the smallest
// vertex of any cycle it may close. `interior_hits[v]` counts the interior
// path vertices adjacent to v; extensions must have none.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit)
      : g_(g), visit_(visit), interior_hits_(static_cast<std::size_t>(g.order()), 0), on_path_(g.order()) {}

  void run() {
    for (Vertex start = 0; start < g_.order() && !stopped_; ++start) {
      path_.assign(1, start);
      on_path_.insert(start);
      grow();
      on_path_.erase(start);
    }
  }

 private:
  void grow() {
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    for (Vertex w : g_.neighbor_list(last)) {
      if (stopped_) return;
      if (w <= start || on_path_.contains(w) || interior_hits_[static_cast<std::size_t>(w)] > 0) continue;
      if (path_.size() >= 2 && g_.adjacent(w, start)) {
        // Closing vertex. Each cycle is reported once: second vertex < last.
        if (path_.size() >= 3 && path_[1] < w) {
          path_.push_back(w);
          stopped_ = visit_(path_);
          path_.pop_back();
        }
        continue;
      }
      if (path_.size() >= 2) bump(last, +1);
      path_.push_back(w);
      on_path_.insert(w);
      grow();
      on_path_.erase(w);
      path_.pop_back();
      if (path_.size() >= 2) bump(last, -1);
    }
  }

  void bump(Vertex v, int delta) {
    for (Vertex u : g_.neighbor_list(v)) interior_hits_[static_cast<std::size_t>(u)] += delta;
  }

  const Graph& g_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::vector<int> interior_hits_;
  VertexSet on_path_;
  Path path_;
  bool stopped_ = false;
};

}  // namespace

void for_each_hole(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit) {
  HoleSearch(g, visit).run();
}

std::optional<HoleWitness> find_odd_hole(const Graph& g) {
  std::optional<HoleWitness> found;
  for_each_hole(g, [&](std::span<const Vertex> c) {
    if (c.size() % 2 == 0) return false;
    found = HoleWitness(c.begin(), c.end());
    return true;
  });
  return found;
}

std::optional<int> shortest_odd_hole_length(const Graph& g) {
  std::optional<int> best;
  for_each_hole(g, [&](std::span<const Vertex> c) {
    if (c.size() % 2 == 1 && (!best || static_cast<int>(c.size()) < *best)) best = static_cast<int>(c.size());
    return best == 5;
  });
  return best;
}

std::vector<HoleWitness> shortest_odd_holes(const Graph& g) {
  std::vector<HoleWitness> out;
  std::size_t best = 0;
  for_each_hole(g, [&](std::span<const Vertex> c) {
    if (c.size() % 2 == 0) return false;
    if (best == 0 || c.size() < best) {
      best = c.size();
      out.clear();
    }
    if (c.size() == best) out.emplace_back(c.begin(), c.end());
    return false;
  });
  return out;
}

namespace {

// All induced paths that start at `apex`, by end vertex.
std::vector<std::vector<Path>> induced_paths_from(const Graph& g, Vertex apex) {
  std::vector<std::vector<Path>> by_end(static_cast<std::size_t>(g.order()));
  Path path{apex};
  VertexSet on_path(g.order(), {apex});
  std::function<void()> grow = [&]() {
    const Vertex last = path.back();
    for (Vertex w : g.neighbor_list(last)) {
      if (on_path.contains(w)) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(path[i], w);
      if (chord) continue;
      path.push_back(w);
      on_path.insert(w);
      by_end[static_cast<std::size_t>(w)].push_back(path);
      grow();
      on_path.erase(w);
      path.pop_back();
    }
  };
  grow();
  return by_end;
}

// Can path p (to base bp) and path q (to base bq) share a pyramid? Both
// start at the apex.
bool paths_fit(const Graph& g, const Path& p, const Path& q) {
  const Vertex bp = p.back(), bq = q.back();
  for (std::size_t i = 1; i < p.size(); ++i)
    for (std::size_t j = 1; j < q.size(); ++j) {
      if (p[i] == q[j]) return false;
      if (g.adjacent(p[i], q[j]) && !(p[i] == bp && q[j] == bq)) return false;
    }
  return true;
}

}  // namespace

std::optional<PyramidWitness> find_pyramid(const Graph& g) {
  const int n = g.order();
  for (Vertex apex = 0; apex < n; ++apex) {
    const auto paths = induced_paths_from(g, apex);
    for (Vertex b1 = 0; b1 < n; ++b1)
      for (Vertex b2 = b1 + 1; b2 < n; ++b2) {
        if (!g.adjacent(b1, b2)) continue;
        for (Vertex b3 = b2 + 1; b3 < n; ++b3) {
          if (!g.adjacent(b1, b3) || !g.adjacent(b2, b3)) continue;
          for (const Path& p1 : paths[static_cast<std::size_t>(b1)])
            for (const Path& p2 : paths[static_cast<std::size_t>(b2)]) {
              if (!paths_fit(g, p1, p2)) continue;
              for (const Path& p3 : paths[static_cast<std::size_t>(b3)]) {
                const int long_paths = (p1.size() >= 3) + (p2.size() >= 3) + (p3.size() >= 3);
                if (long_paths < 2 || !paths_fit(g, p1, p3) || !paths_fit(g, p2, p3)) continue;
                return PyramidWitness{apex, {p1, p2, p3}};
              }
            }
        }
      }
  }
  return std::nullopt;
}

std::optional<JewelWitness> find_jewel(const Graph& g) {
  const int n = g.order();
  for (Vertex v1 = 0; v1 < n; ++v1)
    for (Vertex v2 = 0; v2 < n; ++v2)
      for (Vertex v3 = 0; v3 < n; ++v3)
        for (Vertex v4 = 0; v4 < n; ++v4)
          for (Vertex v5 = 0; v5 < n; ++v5) {
            const std::array<Vertex, 5> v{v1, v2, v3, v4, v5};
            bool distinct = true;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j) distinct = distinct && v[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(j)];
            if (!distinct) continue;
            if (!g.adjacent(v1, v2) || !g.adjacent(v2, v3) || !g.adjacent(v3, v4) || !g.adjacent(v4, v5) ||
                !g.adjacent(v5, v1))
              continue;
            if (g.adjacent(v1, v3) || g.adjacent(v2, v4) || g.adjacent(v1, v4)) continue;
            // Depth-first search for any v1-v4 path with an admissible interior.
            auto admissible = [&](Vertex u) {
              return u != v2 && u != v3 && u != v5 && !g.adjacent(u, v2) && !g.adjacent(u, v3) && !g.adjacent(u, v5);
            };
            Path path{v1};
            VertexSet visited(n, {v1});
            std::function<bool()> dfs = [&]() {
              for (Vertex w : g.neighbor_list(path.back())) {
                if (w == v4 && path.size() >= 2) {
                  path.push_back(w);
                  return true;
                }
                if (visited.contains(w) || w == v4 || !admissible(w)) continue;
                visited.insert(w);
                path.push_back(w);
                if (dfs()) return true;
                path.pop_back();
              }
              return false;
            };
            if (dfs()) return JewelWitness{v, path};
          }
  return std::nullopt;
}

}  // namespace oddhole::oracle
