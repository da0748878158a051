#include "oddhole/configurations.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddhole {

namespace {

bool is_walk_path(const Graph& g, std::span<const Vertex> p) {
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vertex v = p[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(p[i - 1], v)) return false;
  }
  return true;
}

bool induced(const Graph& g, std::span<const Vertex> p) { return is_walk_path(g, p) && is_induced_path(g, p); }

}  // namespace

bool verify_pyramid(const Graph& g, const PyramidWitness& w) {
  const int n = g.order();
  if (w.apex < 0 || w.apex >= n) return false;
  int long_paths = 0;
  std::array<VertexSet, 3> rest;  // path minus apex
  for (int i = 0; i < 3; ++i) {
    const Path& p = w.paths[static_cast<std::size_t>(i)];
    if (p.size() < 2 || p.front() != w.apex || !induced(g, p)) return false;
    if (p.size() >= 3) ++long_paths;
    rest[static_cast<std::size_t>(i)] = VertexSet::of(n, std::span(p).subspan(1));
  }
  if (long_paths < 2) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Vertex bi = w.base(i), bj = w.base(j);
      if (!g.adjacent(bi, bj)) return false;
      const auto& ri = rest[static_cast<std::size_t>(i)];
      const auto& rj = rest[static_cast<std::size_t>(j)];
      if (ri.intersects(rj)) return false;
      bool only_base_edge = true;
      ri.for_each([&](Vertex u) {
        VertexSet hit = g.neighbors(u) & rj;
        if (u == bi) hit.erase(bj);
        if (!hit.empty()) only_base_edge = false;
      });
      if (!only_base_edge) return false;
    }
  return true;
}

bool verify_jewel(const Graph& g, const JewelWitness& w) {
  const int n = g.order();
  for (Vertex v : w.v)
    if (v < 0 || v >= n) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (w.v[static_cast<std::size_t>(i)] == w.v[static_cast<std::size_t>(j)]) return false;
  const auto& v = w.v;
  if (!g.adjacent(v[0], v[1]) || !g.adjacent(v[1], v[2]) || !g.adjacent(v[2], v[3]) || !g.adjacent(v[3], v[4]) ||
      !g.adjacent(v[4], v[0]))
    return false;
  if (g.adjacent(v[0], v[2]) || g.adjacent(v[1], v[3]) || g.adjacent(v[0], v[3])) return false;
  const Path& p = w.path;
  if (p.size() < 2 || p.front() != v[0] || p.back() != v[3] || !is_walk_path(g, p)) return false;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const Vertex u = p[i];
    for (Vertex watcher : {v[1], v[2], v[4]})
      if (u == watcher || g.adjacent(u, watcher)) return false;
  }
  return true;
}

std::optional<JewelWitness> find_jewel(const Graph& g) { return find_jewel(g, g.all_vertices()); }

std::optional<JewelWitness> find_jewel(const Graph& g, const VertexMask& mask) {
  const int n = g.order();
  if (mask.size() < 5) return std::nullopt;
  for (Vertex v1 = 0; v1 < n; ++v1) {
    if (!mask.contains(v1)) continue;
    for (Vertex v2 : g.neighbor_list(v1)) {
      if (!mask.contains(v2)) continue;
      for (Vertex v3 : g.neighbor_list(v2)) {
        if (v3 == v1 || !mask.contains(v3) || g.adjacent(v1, v3)) continue;
        for (Vertex v4 : g.neighbor_list(v3)) {
          if (v4 == v1 || v4 == v2 || !mask.contains(v4) || g.adjacent(v2, v4) || g.adjacent(v1, v4)) continue;
          VertexSet fifth = g.neighbors(v1) & g.neighbors(v4) & mask;
          fifth.erase(v2);
          fifth.erase(v3);
          for (Vertex v5 = fifth.first(); v5 != -1; v5 = fifth.next(v5 + 1)) {
            VertexMask allowed = mask;
            allowed -= g.closed_neighbors(v2);
            allowed -= g.closed_neighbors(v3);
            allowed -= g.closed_neighbors(v5);
            allowed.insert(v1);
            allowed.insert(v4);
            auto p = shortest_path(g, allowed, v1, v4);
            if (!p) continue;
            JewelWitness w{{v1, v2, v3, v4, v5}, std::move(*p)};
            if (verify_jewel(g, w)) return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Search state for one (base, apex) guess. Path i is apex - s[i] .. m[i] .. b[i].
struct PyramidGuess {
  const Graph& g;
  const VertexMask& mask;
  Vertex apex;
  std::array<Vertex, 3> b{};
  std::array<Vertex, 3> s{};
  std::array<Vertex, 3> m{};

  // Vertices of path j (excluding the apex) that are already fixed.
  std::array<VertexSet, 3> known;

  // u on path i, w on path j (i != j): may they coexist?
  bool compatible(int i, Vertex u, int j, Vertex w) const {
    if (u == w) return false;
    if (!g.adjacent(u, w)) return true;
    return u == b[static_cast<std::size_t>(i)] && w == b[static_cast<std::size_t>(j)];
  }

  // Vertices that path i may not use because of what is fixed on path j.
  VertexSet blocked_by(int i, int j) const {
    const auto& kj = known[static_cast<std::size_t>(j)];
    const Vertex bj = b[static_cast<std::size_t>(j)];
    VertexSet out(g.order());
    kj.for_each([&](Vertex u) {
      out |= g.neighbors(u);
      out.insert(u);
    });
    if (kj.contains(bj)) {
      // b_i's only allowed contact with path j is the base edge.
      bool other_contact = false;
      kj.for_each([&](Vertex u) {
        if (u != bj && (u == b[static_cast<std::size_t>(i)] || g.adjacent(u, b[static_cast<std::size_t>(i)])))
          other_contact = true;
      });
      if (!other_contact) out.erase(b[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  std::optional<Path> half(Vertex from, Vertex to, VertexMask allowed) const {
    if (from == to) return Path{from};
    allowed.insert(from);
    allowed.insert(to);
    return shortest_path(g, allowed, from, to);
  }

  std::optional<PyramidWitness> assemble() {
    const int n = g.order();
    for (int i = 0; i < 3; ++i) {
      known[static_cast<std::size_t>(i)] = VertexSet(n, {s[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)],
                                                         b[static_cast<std::size_t>(i)]});
    }
    VertexSet apex_zone = g.closed_neighbors(apex);
    std::array<Path, 3> first_half, second_half;
    for (int i = 0; i < 3; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      VertexMask allowed = mask - apex_zone;
      for (int j = 0; j < 3; ++j)
        if (j != i) allowed -= blocked_by(i, j);
      if (m[ui] != b[ui]) allowed -= g.closed_neighbors(b[ui]);
      auto p = half(s[ui], m[ui], allowed);
      if (!p) return std::nullopt;
      first_half[ui] = std::move(*p);
    }
    for (int i = 0; i < 3; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      known[ui] = VertexSet::of(n, first_half[ui]);
      known[ui].insert(b[ui]);
    }
    for (int i = 0; i < 3; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      VertexMask allowed = mask - apex_zone;
      for (int j = 0; j < 3; ++j)
        if (j != i) allowed -= blocked_by(i, j);
      for (std::size_t k = 0; k + 1 < first_half[ui].size(); ++k) allowed -= g.closed_neighbors(first_half[ui][k]);
      auto p = half(m[ui], b[ui], allowed);
      if (!p) return std::nullopt;
      second_half[ui] = std::move(*p);
      known[ui] |= VertexSet::of(n, second_half[ui]);
    }
    PyramidWitness w;
    w.apex = apex;
    for (std::size_t i = 0; i < 3; ++i) {
      Path& p = w.paths[i];
      p.push_back(apex);
      p.insert(p.end(), first_half[i].begin(), first_half[i].end());
      p.insert(p.end(), second_half[i].begin() + 1, second_half[i].end());
    }
    if (verify_pyramid(g, w)) return w;
    return std::nullopt;
  }
};

}  // namespace

std::optional<PyramidWitness> find_pyramid(const Graph& g) { return find_pyramid(g, g.all_vertices()); }

std::optional<PyramidWitness> find_pyramid(const Graph& g, const VertexMask& mask) {
  const int n = g.order();
  if (mask.size() < 5) return std::nullopt;
  for (Vertex b1 = 0; b1 < n; ++b1) {
    if (!mask.contains(b1)) continue;
    for (Vertex b2 : g.neighbor_list(b1)) {
      if (!mask.contains(b2)) continue;
      VertexSet thirds = g.neighbors(b1) & g.neighbors(b2) & mask;
      for (Vertex b3 = thirds.first(); b3 != -1; b3 = thirds.next(b3 + 1)) {
        const std::array<Vertex, 3> base{b1, b2, b3};
        VertexSet base_set(n, {b1, b2, b3});
        for (Vertex apex = 0; apex < n; ++apex) {
          if (!mask.contains(apex) || base_set.contains(apex)) continue;
          if ((g.neighbors(apex) & base_set).size() > 1) continue;
          PyramidGuess guess{g, mask, apex, {}, {}, {}, {}};
          guess.b = base;

          // Candidates for the apex neighbour on each path.
          std::array<std::vector<Vertex>, 3> s_options;
          for (int i = 0; i < 3; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (g.adjacent(apex, base[ui])) {
              s_options[ui] = {base[ui]};
              continue;
            }
            VertexSet opts = g.neighbors(apex) & mask;
            opts -= base_set;
            for (int j = 0; j < 3; ++j)
              if (j != i) opts -= g.neighbors(base[static_cast<std::size_t>(j)]);
            s_options[ui] = opts.to_vector();
          }
          for (Vertex s1 : s_options[0])
            for (Vertex s2 : s_options[1]) {
              if (s2 == s1 || g.adjacent(s1, s2)) continue;
              for (Vertex s3 : s_options[2]) {
                if (s3 == s1 || s3 == s2 || g.adjacent(s1, s3) || g.adjacent(s2, s3)) continue;
                guess.s = {s1, s2, s3};

                // Candidate midpoints for each path given the apex-neighbours.
                std::array<std::vector<Vertex>, 3> m_options;
                for (int i = 0; i < 3; ++i) {
                  const auto ui = static_cast<std::size_t>(i);
                  const Vertex si = guess.s[ui], bi = base[ui];
                  if (si == bi || g.adjacent(si, bi)) {
                    m_options[ui] = si == bi ? std::vector<Vertex>{bi} : std::vector<Vertex>{si, bi};
                    continue;
                  }
                  m_options[ui] = {si};
                  for (Vertex v = 0; v < n; ++v) {
                    if (!mask.contains(v) || v == apex || v == si || v == bi || g.adjacent(apex, v)) continue;
                    bool ok = true;
                    for (int j = 0; j < 3 && ok; ++j) {
                      if (j == i) continue;
                      const auto uj = static_cast<std::size_t>(j);
                      ok = guess.compatible(i, v, j, guess.s[uj]) && guess.compatible(i, v, j, base[uj]);
                    }
                    if (ok) m_options[ui].push_back(v);
                  }
                  m_options[ui].push_back(bi);
                }
                for (Vertex m1 : m_options[0])
                  for (Vertex m2 : m_options[1]) {
                    if (!guess.compatible(0, m1, 1, m2)) continue;
                    for (Vertex m3 : m_options[2]) {
                      if (!guess.compatible(0, m1, 2, m3) || !guess.compatible(1, m2, 2, m3)) continue;
                      guess.m = {m1, m2, m3};
                      if (auto w = guess.assemble()) return w;
                    }
                  }
              }
            }
        }
      }
    }
  }
  return std::nullopt;
}

HoleWitness odd_hole_from_pyramid(const Graph& g, const PyramidWitness& w) {
  if (!verify_pyramid(g, w)) throw std::invalid_argument("not a pyramid");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto& pi = w.paths[i];
      const auto& pj = w.paths[j];
      if ((pi.size() - pj.size()) % 2 != 0) continue;
      HoleWitness hole(pi.begin(), pi.end());
      for (auto it = pj.rbegin(); it + 1 != pj.rend(); ++it) hole.push_back(*it);
      if (!is_odd_hole(g, hole)) throw std::logic_error("pyramid paths did not close an odd hole");
      return hole;
    }
  throw std::logic_error("pyramid without two paths of equal parity");
}

HoleWitness odd_hole_from_jewel(const Graph& g, const JewelWitness& w) {
  if (!verify_jewel(g, w)) throw std::invalid_argument("not a jewel");
  // A chordal path is shortcut to a shortest one inside its own vertex set;
  // the shortcut keeps every jewel condition.
  const Path p = *shortest_path(g, VertexSet::of(g.order(), w.path), w.v[0], w.v[3]);
  const std::size_t length = p.size() - 1;
  HoleWitness hole(p.begin(), p.end());
  if (length % 2 == 0) {
    hole.push_back(w.v[2]);
    hole.push_back(w.v[1]);
  } else {
    hole.push_back(w.v[4]);
  }
  if (!is_odd_hole(g, hole)) throw std::logic_error("jewel did not close an odd hole");
  return hole;
}

}  // namespace oddhole
