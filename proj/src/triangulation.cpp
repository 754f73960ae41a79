#include "triangulation.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "error.hpp"
#include "planarity.hpp"

namespace mwpsp {

Triangulation Triangulation::build(VertexId n, std::vector<Face> faces, Validation validation) {
  if (n < 4) throw Error(Errc::too_small, "a triangulation needs at least 4 vertices");
  if (faces.empty()) throw Error(Errc::invalid_argument, "face list is empty");
  for (const Face& f : faces) {
    if (f[2] > n) {
      throw Error(Errc::vertex_out_of_range,
                  "face " + to_string(f) + " uses a vertex outside 1.." + std::to_string(n));
    }
  }
  std::sort(faces.begin(), faces.end());
  if (auto dup = std::adjacent_find(faces.begin(), faces.end()); dup != faces.end()) {
    throw Error(Errc::duplicate_face, "face " + to_string(*dup) + " listed twice");
  }
  const std::size_t want_faces = 2 * static_cast<std::size_t>(n) - 4;
  if (faces.size() != want_faces) {
    throw Error(Errc::euler_violation, std::to_string(faces.size()) + " faces, expected " +
                                           std::to_string(want_faces));
  }

  Triangulation t;
  t.n_ = n;
  t.faces_ = std::move(faces);

  std::vector<std::pair<Edge, std::uint32_t>> incidences;
  incidences.reserve(3 * t.faces_.size());
  for (std::uint32_t i = 0; i < t.faces_.size(); ++i) {
    for (const Edge& e : t.faces_[i].edges()) incidences.emplace_back(e, i);
  }
  std::sort(incidences.begin(), incidences.end());
  for (std::size_t i = 0; i < incidences.size();) {
    std::size_t j = i;
    while (j < incidences.size() && incidences[j].first == incidences[i].first) ++j;
    if (j - i != 2) {
      throw Error(Errc::non_manifold, "edge " + to_string(incidences[i].first) + " lies on " +
                                          std::to_string(j - i) + " faces");
    }
    t.edges_.push_back(incidences[i].first);
    t.edge_faces_.push_back({incidences[i].second, incidences[i + 1].second});
    i = j;
  }
  const std::size_t want_edges = 3 * static_cast<std::size_t>(n) - 6;
  if (t.edges_.size() != want_edges) {
    throw Error(Errc::euler_violation, std::to_string(t.edges_.size()) + " edges, expected " +
                                           std::to_string(want_edges));
  }

  t.degree_.assign(n + 1, 0);
  for (const Edge& e : t.edges_) {
    ++t.degree_[e.lo()];
    ++t.degree_[e.hi()];
  }

  // Around each vertex the opposite edges of its faces must close into one cycle.
  std::vector<std::vector<std::pair<VertexId, VertexId>>> around(n + 1);
  for (const Face& f : t.faces_) {
    around[f[0]].emplace_back(f[1], f[2]);
    around[f[1]].emplace_back(f[0], f[2]);
    around[f[2]].emplace_back(f[0], f[1]);
  }
  for (VertexId v = 1; v <= n; ++v) {
    const auto& pairs = around[v];
    if (pairs.empty()) {
      throw Error(Errc::non_manifold, "vertex " + std::to_string(v) + " lies on no face");
    }
    VertexId start = pairs.front().first;
    VertexId prev = start;
    VertexId cur = pairs.front().second;
    std::size_t steps = 1;
    while (cur != start && steps <= pairs.size()) {
      VertexId next = 0;
      for (const auto& [x, y] : pairs) {
        if (x == cur && y != prev) next = y;
        if (y == cur && x != prev) next = x;
        if (next) break;
      }
      prev = cur;
      cur = next;
      ++steps;
    }
    if (cur != start || steps != pairs.size()) {
      throw Error(Errc::non_manifold, "faces around vertex " + std::to_string(v) +
                                          " do not form a single cycle");
    }
  }

  if (!is_connected(n, t.edges_)) throw Error(Errc::disconnected, "graph is not connected");
  if (validation == Validation::full && !is_planar(n, t.edges_)) {
    throw Error(Errc::not_planar, "edge set fails the planarity test");
  }
  return t;
}

Triangulation Triangulation::from_edges(VertexId n, std::span<const Edge> edges) {
  if (n < 4) throw Error(Errc::too_small, "a triangulation needs at least 4 vertices");
  const std::size_t want_edges = 3 * static_cast<std::size_t>(n) - 6;
  if (edges.size() != want_edges) {
    throw Error(Errc::euler_violation, std::to_string(edges.size()) + " edges, expected " +
                                           std::to_string(want_edges));
  }
  if (!is_connected(n, edges)) throw Error(Errc::disconnected, "graph is not connected");
  if (!is_planar(n, edges)) throw Error(Errc::not_planar, "edge set fails the planarity test");

  std::vector<std::vector<VertexId>> adj(n + 1);
  std::vector<std::vector<char>> matrix(n + 1, std::vector<char>(n + 1, 0));
  for (const Edge& e : edges) {
    adj[e.lo()].push_back(e.hi());
    adj[e.hi()].push_back(e.lo());
    matrix[e.lo()][e.hi()] = matrix[e.hi()][e.lo()] = 1;
  }

  auto connected_without = [&](VertexId a, VertexId b, VertexId c) {
    std::vector<char> seen(n + 1, 0);
    seen[a] = seen[b] = seen[c] = 1;
    VertexId root = 1;
    while (seen[root]) ++root;
    std::vector<VertexId> stack{root};
    seen[root] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n - 3;
  };

  std::vector<Face> faces;
  for (const Edge& e : edges) {
    for (VertexId c = e.hi() + 1; c <= n; ++c) {
      if (matrix[e.lo()][c] && matrix[e.hi()][c] && connected_without(e.lo(), e.hi(), c)) {
        faces.emplace_back(e.lo(), e.hi(), c);
      }
    }
  }
  return build(n, std::move(faces), Validation::full);
}

void Triangulation::check_vertex(VertexId v) const {
  if (v < 1 || v > n_) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

std::size_t Triangulation::edge_position(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw Error(Errc::edge_not_present, "edge " + to_string(e) + " is not in the graph");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Triangulation::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Triangulation::has_face(const Face& f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::optional<std::size_t> Triangulation::face_index(const Face& f) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  if (it == faces_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - faces_.begin());
}

std::array<std::size_t, 2> Triangulation::face_indices_of_edge(const Edge& e) const {
  const auto& pair = edge_faces_[edge_position(e)];
  return {pair[0], pair[1]};
}

std::pair<Face, Face> Triangulation::faces_of_edge(const Edge& e) const {
  auto [i, j] = face_indices_of_edge(e);
  return {faces_[i], faces_[j]};
}

std::pair<VertexId, VertexId> Triangulation::opposite_vertices(const Edge& e) const {
  auto [f, g] = faces_of_edge(e);
  VertexId c = f.opposite(e);
  VertexId d = g.opposite(e);
  return {std::min(c, d), std::max(c, d)};
}

std::size_t Triangulation::degree(VertexId v) const {
  check_vertex(v);
  return degree_[v];
}

std::vector<VertexId> Triangulation::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  out.reserve(degree_[v]);
  for (const Edge& e : edges_) {
    if (e.contains(v)) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Triangulation::link(VertexId v) const {
  check_vertex(v);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Face& f : faces_) {
    if (!f.contains(v)) continue;
    VertexId x = 0, y = 0;
    for (VertexId c : f.corners()) {
      if (c == v) continue;
      (x == 0 ? x : y) = c;
    }
    pairs.emplace_back(x, y);
  }
  auto cycle_neighbors = [&](VertexId w) {
    std::array<VertexId, 2> out{0, 0};
    std::size_t k = 0;
    for (const auto& [x, y] : pairs) {
      if (x == w) out[k++] = y;
      if (y == w) out[k++] = x;
      if (k == 2) break;
    }
    return out;
  };

  VertexId start = std::numeric_limits<VertexId>::max();
  for (const auto& [x, y] : pairs) start = std::min({start, x, y});
  std::vector<VertexId> cycle{start};
  auto first = cycle_neighbors(start);
  VertexId prev = start;
  VertexId cur = std::min(first[0], first[1]);
  while (cur != start) {
    cycle.push_back(cur);
    auto next = cycle_neighbors(cur);
    VertexId step = next[0] == prev ? next[1] : next[0];
    prev = cur;
    cur = step;
  }
  return cycle;
}

DualGraph dual_graph(const Triangulation& g) {
  DualGraph dual;
  dual.neighbors.resize(g.face_count());
  for (std::size_t i = 0; i < g.face_count(); ++i) {
    std::size_t k = 0;
    for (const Edge& e : g.faces()[i].edges()) {
      auto [x, y] = g.face_indices_of_edge(e);
      dual.neighbors[i][k++] = x == i ? y : x;
    }
    std::sort(dual.neighbors[i].begin(), dual.neighbors[i].end());
  }
  return dual;
}

DualPath dual_shortest_path(const Triangulation& g, const Face& src, const Face& dst,
                            std::optional<VertexId> avoid) {
  auto from = g.face_index(src);
  auto to = g.face_index(dst);
  if (!from) throw Error(Errc::face_not_present, "face " + to_string(src) + " is not in the graph");
  if (!to) throw Error(Errc::face_not_present, "face " + to_string(dst) + " is not in the graph");

  const DualGraph dual = dual_graph(g);
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(g.face_count(), kUnseen);
  parent[*from] = *from;
  std::deque<std::size_t> queue{*from};
  while (!queue.empty() && parent[*to] == kUnseen) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (cur != *from && avoid && g.faces()[cur].contains(*avoid)) continue;
    for (std::size_t next : dual.neighbors[cur]) {
      if (parent[next] != kUnseen) continue;
      parent[next] = cur;
      queue.push_back(next);
    }
  }
  if (parent[*to] == kUnseen) {
    throw Error(Errc::no_path, "no face path from " + to_string(src) + " to " + to_string(dst) +
                                   " avoiding vertex " + std::to_string(avoid.value_or(0)));
  }
  DualPath path;
  for (std::size_t cur = *to;; cur = parent[cur]) {
    path.faces.push_back(g.faces()[cur]);
    if (cur == *from) break;
  }
  std::reverse(path.faces.begin(), path.faces.end());
  return path;
}

Weight weight(const Triangulation& g, const WeightedInstance& instance) {
  if (g.vertex_count() != instance.vertex_count()) {
    throw Error(Errc::size_mismatch, "triangulation has " + std::to_string(g.vertex_count()) +
                                         " vertices, instance has " +
                                         std::to_string(instance.vertex_count()));
  }
  return instance.total(g.edges());
}

std::string canonical_key(const Triangulation& g) {
  std::string key;
  for (const Edge& e : g.edges()) {
    if (!key.empty()) key += ',';
    key += to_string(e);
  }
  return key;
}

Triangulation stacked_triangulation(VertexId n) {
  if (n < 4) throw Error(Errc::too_small, "stacked triangulation needs n >= 4");
  std::vector<Face> faces{Face(1, 2, 3), Face(1, 2, 4), Face(1, 3, 4), Face(2, 3, 4)};
  for (VertexId k = 5; k <= n; ++k) {
    auto host = std::find(faces.begin(), faces.end(), Face(1, 2, k - 1));
    faces.erase(host);
    faces.emplace_back(1, 2, k);
    faces.emplace_back(1, k - 1, k);
    faces.emplace_back(2, k - 1, k);
  }
  return Triangulation::build(n, std::move(faces));
}

}  // namespace mwpsp
