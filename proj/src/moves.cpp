#include "moves.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <unordered_map>

#include "compact.hpp"
#include "error.hpp"

namespace mwpsp {
namespace {

void require_movable(const Triangulation& g) {
  if (g.vertex_count() < 5) {
    throw Error(Errc::too_small, "moves need at least 5 vertices");
  }
}

Triangulation rewire(const Triangulation& g, std::initializer_list<Face> removed,
                     std::initializer_list<Face> added, Validation validation) {
  std::set<Face> faces(g.faces().begin(), g.faces().end());
  for (const Face& f : removed) faces.erase(f);
  for (const Face& f : added) faces.insert(f);
  return Triangulation::build(g.vertex_count(), std::vector<Face>(faces.begin(), faces.end()),
                              validation);
}

void check_relocation(const Triangulation& g, VertexId u, const Face& f) {
  require_movable(g);
  if (g.degree(u) != 3) {
    throw Error(Errc::degree_not_3, "vertex " + std::to_string(u) + " has degree " +
                                        std::to_string(g.degree(u)));
  }
  if (!g.has_face(f)) throw Error(Errc::face_not_present, "face " + to_string(f) + " is not in the graph");
}

}  // namespace

FlipResult edge_substitute(const Triangulation& g, const Edge& e, Validation validation) {
  require_movable(g);
  if (!g.has_edge(e)) throw Error(Errc::edge_not_present, "edge " + to_string(e) + " is not in the graph");
  const VertexId a = e.lo(), b = e.hi();
  auto [c, d] = g.opposite_vertices(e);
  if (!g.has_edge(c, d)) {
    return {rewire(g, {Face(a, b, c), Face(a, b, d)}, {Face(a, c, d), Face(b, c, d)}, validation),
            Edge(c, d)};
  }
  // The diagonal {c,d} already exists: rewire around it. Faces listed in both
  // the removed and the added set (one of a,b coinciding with e*,f*) survive.
  auto [ex, fx] = g.opposite_vertices(Edge(c, d));
  if (g.has_edge(ex, fx)) {
    throw Error(Errc::internal_contradiction,
                "replacement edge " + to_string(Edge(ex, fx)) + " already present");
  }
  return {rewire(g, {Face(a, b, c), Face(a, b, d), Face(c, d, ex), Face(c, d, fx)},
                 {Face(a, c, d), Face(b, c, d), Face(c, ex, fx), Face(d, ex, fx)}, validation),
          Edge(ex, fx)};
}

Edge substitution_target(const Triangulation& g, const Edge& e) {
  require_movable(g);
  auto [c, d] = g.opposite_vertices(e);
  if (!g.has_edge(c, d)) return Edge(c, d);
  auto [ex, fx] = g.opposite_vertices(Edge(c, d));
  return Edge(ex, fx);
}

Triangulation vertex_relocate(const Triangulation& g, VertexId u, const Face& f,
                              Validation validation) {
  check_relocation(g, u, f);
  if (f.contains(u)) return g;
  const auto nb = g.neighbors(u);
  const VertexId a = nb[0], b = nb[1], c = nb[2];
  const VertexId p = f[0], q = f[1], r = f[2];
  return rewire(g, {Face(a, b, u), Face(b, c, u), Face(a, c, u), f},
                {Face(a, b, c), Face(p, q, u), Face(q, r, u), Face(p, r, u)}, validation);
}

DualPath relocation_path(const Triangulation& g, VertexId u, const Face& f) {
  check_relocation(g, u, f);
  if (f.contains(u)) return DualPath{{f}};

  const DualGraph dual = dual_graph(g);
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  const std::size_t src = *g.face_index(f);
  std::vector<std::size_t> parent(g.face_count(), kUnseen);
  parent[src] = src;
  std::vector<std::size_t> level{src};
  std::optional<std::size_t> target;
  while (!level.empty() && !target) {
    std::vector<std::size_t> next_level;
    for (std::size_t cur : level) {
      for (std::size_t next : dual.neighbors[cur]) {
        if (parent[next] != kUnseen) continue;
        parent[next] = cur;
        if (g.faces()[next].contains(u)) {
          if (!target || next < *target) target = next;
        } else {
          next_level.push_back(next);
        }
      }
    }
    level = std::move(next_level);
  }
  if (!target) {
    throw Error(Errc::no_path, "no face path from " + to_string(f) + " to vertex " + std::to_string(u));
  }
  DualPath path;
  for (std::size_t cur = *target;; cur = parent[cur]) {
    path.faces.push_back(g.faces()[cur]);
    if (cur == src) break;
  }
  std::reverse(path.faces.begin(), path.faces.end());
  return path;
}

MoveSequence relocation_as_flips(const Triangulation& g, VertexId u, const Face& f) {
  check_relocation(g, u, f);
  MoveSequence moves;
  if (f.contains(u)) return moves;

  const std::vector<VertexId> goal(f.corners().begin(), f.corners().end());
  Triangulation cur = g;
  while (cur.neighbors(u) != goal) {
    const DualPath path = relocation_path(cur, u, f);
    const Face& last = path.faces.back();
    const Face& before = path.faces[path.faces.size() - 2];
    VertexId ab[2];
    std::size_t k = 0;
    for (VertexId v : last.corners()) {
      if (v != u) ab[k++] = v;
    }
    const Edge shared(ab[0], ab[1]);
    const VertexId d = before.opposite(shared);
    VertexId c = 0;
    for (VertexId v : cur.neighbors(u)) {
      if (!shared.contains(v)) c = v;
    }

    FlipResult first = edge_substitute(cur, shared, Validation::structural);
    if (first.added != Edge(u, d)) {
      throw Error(Errc::internal_contradiction, "relocation step did not connect u to d");
    }
    FlipResult second = edge_substitute(first.graph, Edge(c, u), Validation::structural);
    if (second.added != shared) {
      throw Error(Errc::internal_contradiction, "relocation step did not restore {a,b}");
    }
    moves.push_back(Move::flip(shared));
    moves.push_back(Move::flip(Edge(c, u)));
    cur = std::move(second.graph);
  }
  return moves;
}

Triangulation apply_move(const Triangulation& g, const Move& move, Validation validation) {
  if (move.kind == Move::Kind::edge_substitution) {
    return edge_substitute(g, move.edge, validation).graph;
  }
  return vertex_relocate(g, move.vertex, move.target, validation);
}

Triangulation apply_sequence(const Triangulation& g, const MoveSequence& moves) {
  Triangulation cur = g;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      cur = apply_move(cur, moves[i]);
    } catch (const Error& err) {
      throw err.at_move(i);
    }
  }
  return cur;
}

MoveSequence invert_sequence(const Triangulation& g, const MoveSequence& moves) {
  MoveSequence inverse;
  inverse.reserve(moves.size());
  Triangulation cur = g;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& m = moves[i];
    try {
      if (m.kind == Move::Kind::edge_substitution) {
        FlipResult r = edge_substitute(cur, m.edge);
        inverse.push_back(Move::flip(r.added));
        cur = std::move(r.graph);
      } else {
        Triangulation next = vertex_relocate(cur, m.vertex, m.target);
        if (m.target.contains(m.vertex)) {
          inverse.push_back(m);
        } else {
          auto nb = cur.neighbors(m.vertex);
          inverse.push_back(Move::relocate(m.vertex, Face(nb[0], nb[1], nb[2])));
        }
        cur = std::move(next);
      }
    } catch (const Error& err) {
      throw err.at_move(i);
    }
  }
  std::reverse(inverse.begin(), inverse.end());
  return inverse;
}

namespace {

struct Visit {
  std::uint64_t parent;
  Edge removed;
  Edge added;
  std::uint32_t depth;
};

using VisitMap = std::unordered_map<std::uint64_t, Visit>;

// Level-synchronous bidirectional search over the labeled flip graph. The
// first meeting found while completing a level is on a shortest path.
MoveSequence bidirectional_search(const Triangulation& g, const Triangulation& h) {
  using detail::CompactTriangulation;
  const CompactTriangulation start(g);
  const CompactTriangulation goal(h);

  VisitMap seen[2];
  std::vector<CompactTriangulation> frontier[2] = {{start}, {goal}};
  seen[0].emplace(start.edge_mask(), Visit{start.edge_mask(), Edge{}, Edge{}, 0});
  seen[1].emplace(goal.edge_mask(), Visit{goal.edge_mask(), Edge{}, Edge{}, 0});

  std::optional<std::uint64_t> meet;
  while (!meet && !frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<CompactTriangulation> next;
    for (const CompactTriangulation& state : frontier[side]) {
      const std::uint32_t depth = seen[side].at(state.edge_mask()).depth;
      std::uint64_t remaining = state.edge_mask();
      while (remaining != 0) {
        const auto rank = static_cast<unsigned>(std::countr_zero(remaining));
        remaining &= remaining - 1;
        const Edge removed = state.edge_at(rank);
        CompactTriangulation child = state;
        const Edge added = child.flip(removed.lo(), removed.hi());
        const std::uint64_t key = child.edge_mask();
        if (!seen[side].emplace(key, Visit{state.edge_mask(), removed, added, depth + 1}).second) {
          continue;
        }
        if (!meet && seen[1 - side].count(key)) meet = key;
        next.push_back(child);
      }
      if (meet) break;
    }
    frontier[side] = std::move(next);
  }
  if (!meet) {
    throw Error(Errc::search_exhausted, "flip graph search found no connection");
  }

  MoveSequence moves;
  for (std::uint64_t key = *meet; key != start.edge_mask();) {
    const Visit& v = seen[0].at(key);
    moves.push_back(Move::flip(v.removed));
    key = v.parent;
  }
  std::reverse(moves.begin(), moves.end());
  for (std::uint64_t key = *meet; key != goal.edge_mask();) {
    const Visit& v = seen[1].at(key);
    moves.push_back(Move::flip(v.added));
    key = v.parent;
  }
  return moves;
}

class Canonicalizer {
 public:
  Canonicalizer(const Triangulation& g, std::size_t max_flips)
      : cur_(g), n_(g.vertex_count()), limit_(max_flips) {
    if (limit_ == 0) limit_ = 2 * static_cast<std::size_t>(n_) * n_ * n_ + 64;
  }

  MoveSequence run() {
    make_dominant();
    sort_link();
    fan_from_two();
    if (cur_.edges() != canonical_triangulation(n_).edges()) {
      throw Error(Errc::internal_contradiction, "canonicalization ended off the canonical form");
    }
    return std::move(moves_);
  }

 private:
  Edge flip(const Edge& e) {
    if (moves_.size() >= limit_) {
      throw Error(Errc::search_exhausted,
                  "canonicalization exceeded " + std::to_string(limit_) + " flips");
    }
    FlipResult r = edge_substitute(cur_, e, Validation::structural);
    moves_.push_back(Move::flip(e));
    cur_ = std::move(r.graph);
    return r.added;
  }

  std::vector<char> neighbor_flags(VertexId v) const {
    std::vector<char> flags(n_ + 1, 0);
    for (VertexId w : cur_.neighbors(v)) flags[w] = 1;
    return flags;
  }

  static bool consecutive(const std::vector<VertexId>& cycle, VertexId x, VertexId y) {
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId p = cycle[i], q = cycle[(i + 1) % len];
      if ((p == x && q == y) || (p == y && q == x)) return true;
    }
    return false;
  }

  // Raise the degree of vertex 1 until it is adjacent to every vertex. A link
  // edge whose outer apex is not yet a neighbor is flipped directly;
  // otherwise a chord of the link cycle with a non-neighbor apex is flipped,
  // which removes one chord. Either step exists while some vertex is not a
  // neighbor of 1, so the loop ends after at most (n^2) flips.
  void make_dominant() {
    while (cur_.degree(1) < n_ - 1) {
      const auto link = cur_.link(1);
      const auto near = neighbor_flags(1);
      std::optional<Edge> choice;
      for (const Edge& e : cur_.edges()) {
        if (e.contains(1) || !near[e.lo()] || !near[e.hi()]) continue;
        if (!consecutive(link, e.lo(), e.hi())) continue;
        auto [c, d] = cur_.opposite_vertices(e);
        const VertexId apex = c == 1 ? d : c;
        if (!near[apex]) {
          choice = e;
          break;
        }
      }
      if (!choice) {
        for (const Edge& e : cur_.edges()) {
          if (e.contains(1) || !near[e.lo()] || !near[e.hi()]) continue;
          if (consecutive(link, e.lo(), e.hi())) continue;
          auto [c, d] = cur_.opposite_vertices(e);
          if (!near[c] || !near[d]) {
            choice = e;
            break;
          }
        }
      }
      if (!choice) {
        throw Error(Errc::internal_contradiction, "no degree-raising flip for vertex 1");
      }
      flip(*choice);
    }
  }

  // With vertex 1 dominant, the rest is a triangulated polygon whose boundary
  // is the link of 1. Adjacent boundary vertices y,z (between x and w) swap
  // by clearing all chords at y, which leaves the ear x,y,z, and then
  // flipping {x,y}: the second-case rewiring moves z between x and y.
  void sort_link() {
    std::vector<VertexId> cycle = cur_.link(1);  // starts at 2
    const std::size_t len = cycle.size();
    for (std::size_t pass = 0; pass + 1 < len; ++pass) {
      bool swapped = false;
      for (std::size_t i = 1; i + 1 < len; ++i) {
        if (cycle[i] < cycle[i + 1]) continue;
        const VertexId x = cycle[i - 1], y = cycle[i], z = cycle[i + 1];
        const VertexId w = cycle[(i + 2) % len];
        clear_chords(y, x, z);
        const Edge added = flip(Edge(x, y));
        if (added != Edge(y, w)) {
          throw Error(Errc::internal_contradiction, "boundary swap added an unexpected edge");
        }
        std::swap(cycle[i], cycle[i + 1]);
        swapped = true;
      }
      if (!swapped) break;
    }
    if (cur_.link(1) != cycle) {
      throw Error(Errc::internal_contradiction, "link of vertex 1 out of step with the sort");
    }
  }

  void clear_chords(VertexId y, VertexId x, VertexId z) {
    for (;;) {
      std::optional<VertexId> chord_end;
      for (VertexId t : cur_.neighbors(y)) {
        if (t != 1 && t != x && t != z) {
          chord_end = t;
          break;
        }
      }
      if (!chord_end) return;
      const Edge added = flip(Edge(y, *chord_end));
      if (added.contains(y)) {
        throw Error(Errc::internal_contradiction, "chord flip at a boundary vertex kept the vertex");
      }
    }
  }

  void fan_from_two() {
    while (cur_.degree(2) < n_ - 1) {
      std::optional<Edge> choice;
      for (const Edge& e : cur_.edges()) {
        if (e.contains(1) || e.contains(2)) continue;
        if (e.hi() - e.lo() == 1) continue;  // boundary edge of the sorted link
        auto [c, d] = cur_.opposite_vertices(e);
        if (c == 2 || d == 2) {
          choice = e;
          break;
        }
      }
      if (!choice) throw Error(Errc::internal_contradiction, "no fan-raising flip for vertex 2");
      flip(*choice);
    }
  }

  Triangulation cur_;
  VertexId n_;
  std::size_t limit_;
  MoveSequence moves_;
};

}  // namespace

Triangulation canonical_triangulation(VertexId n) {
  if (n < 4) throw Error(Errc::too_small, "canonical triangulation needs n >= 4");
  std::vector<Face> faces{Face(1, 2, n)};
  for (VertexId k = 2; k < n; ++k) faces.emplace_back(1, k, k + 1);
  for (VertexId k = 3; k < n; ++k) faces.emplace_back(2, k, k + 1);
  return Triangulation::build(n, std::move(faces));
}

MoveSequence canonicalize(const Triangulation& g, std::size_t max_flips) {
  require_movable(g);
  return Canonicalizer(g, max_flips).run();
}

MoveSequence transform(const Triangulation& g, const Triangulation& h,
                       const TransformOptions& options) {
  if (g.vertex_count() != h.vertex_count()) {
    throw Error(Errc::size_mismatch, "triangulations differ in vertex count");
  }
  if (g.edges() == h.edges()) return {};
  const VertexId exact_limit =
      std::min(options.exact_max_vertices, detail::CompactTriangulation::kMaxVertices);
  if (g.vertex_count() <= exact_limit) return bidirectional_search(g, h);

  MoveSequence forward = canonicalize(g, options.max_flips);
  const MoveSequence backward = canonicalize(h, options.max_flips);
  const MoveSequence back_inverse = invert_sequence(h, backward);
  forward.insert(forward.end(), back_inverse.begin(), back_inverse.end());
  return forward;
}

}  // namespace mwpsp
