#include "serialize.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace mwpsp {
namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail_at(Errc code, std::size_t line, const std::string& message) {
  throw Error(code, "line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail_at(Errc::parse_error, line, "expected an unsigned integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Calls `on_line(line_number, tokens)` for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::string_view text, Fn&& on_line) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') on_line(line_no, split_ws(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

template <class Fn>
auto reading(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed ") + what + ": " + e.what());
  }
}

VertexId id(const Json& j) {
  if (!j.is_number_unsigned()) throw Error(Errc::parse_error, "vertex ids are positive integers");
  return j.get<VertexId>();
}

Json triangulation_json(const Triangulation& g) {
  Json faces = Json::array();
  for (const Face& f : g.faces()) faces.push_back({f[0], f[1], f[2]});
  return Json{{"n", g.vertex_count()}, {"faces", std::move(faces)}};
}

Triangulation triangulation_of(const Json& j) {
  const auto n = id(j.at("n"));
  std::vector<Face> faces;
  for (const Json& f : j.at("faces")) {
    if (!f.is_array() || f.size() != 3) throw Error(Errc::parse_error, "a face needs three corners");
    faces.emplace_back(id(f[0]), id(f[1]), id(f[2]));
  }
  return Triangulation::build(n, std::move(faces));
}

Json sequence_json(const MoveSequence& moves) {
  Json out = Json::array();
  for (const Move& m : moves) {
    if (m.kind == Move::Kind::edge_substitution) {
      out.push_back({{"op", "flip"}, {"edge", {m.edge.lo(), m.edge.hi()}}});
    } else {
      out.push_back({{"op", "relocate"},
                     {"vertex", m.vertex},
                     {"face", {m.target[0], m.target[1], m.target[2]}}});
    }
  }
  return out;
}

MoveSequence sequence_of(const Json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "a move sequence is a JSON array");
  MoveSequence moves;
  for (const Json& m : j) {
    const auto op = m.at("op").get<std::string>();
    if (op == "flip") {
      const Json& e = m.at("edge");
      if (!e.is_array() || e.size() != 2) throw Error(Errc::parse_error, "flip edge needs two ids");
      moves.push_back(Move::flip(Edge(id(e[0]), id(e[1]))));
    } else if (op == "relocate") {
      const Json& f = m.at("face");
      if (!f.is_array() || f.size() != 3) throw Error(Errc::parse_error, "relocate face needs three ids");
      moves.push_back(Move::relocate(id(m.at("vertex")), Face(id(f[0]), id(f[1]), id(f[2]))));
    } else {
      throw Error(Errc::parse_error, "unknown move op '" + op + "'");
    }
  }
  return moves;
}

}  // namespace

WeightedInstance parse_instance(std::string_view text) {
  std::optional<VertexId> n;
  std::vector<WeightedInstance::Entry> entries;
  std::vector<std::size_t> entry_lines;
  for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (!n) {
      if (tok.size() != 2 || tok[0] != "n") fail_at(Errc::parse_error, line, "expected 'n <N>'");
      const std::uint64_t value = parse_count(tok[1], line);
      if (value < 1 || value > 1'000'000) fail_at(Errc::parse_error, line, "vertex count out of range");
      n = static_cast<VertexId>(value);
      return;
    }
    if (tok.size() != 3) fail_at(Errc::parse_error, line, "expected 'u v w'");
    const std::uint64_t u = parse_count(tok[0], line);
    const std::uint64_t v = parse_count(tok[1], line);
    if (u >= v) fail_at(Errc::parse_error, line, "pairs must be written with u < v");
    if (u < 1 || v > *n) {
      fail_at(Errc::index_out_of_range, line, "vertex outside 1.." + std::to_string(*n));
    }
    Weight w;
    try {
      w = Weight::parse(tok[2]);
    } catch (const Error& e) {
      fail_at(Errc::parse_error, line, e.what());
    }
    const Edge e(static_cast<VertexId>(u), static_cast<VertexId>(v));
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].first == e) {
        fail_at(Errc::duplicate_edge, line,
                "pair " + to_string(e) + " already given on line " + std::to_string(entry_lines[i]));
      }
    }
    entries.emplace_back(e, w);
    entry_lines.push_back(line);
  });
  if (!n) throw Error(Errc::parse_error, "missing 'n <N>' header");
  return WeightedInstance(*n, entries);
}

std::string format_instance(const WeightedInstance& instance) {
  std::string out = "n " + std::to_string(instance.vertex_count()) + "\n";
  for (const auto& [e, w] : instance.positive_entries()) {
    out += std::to_string(e.lo()) + " " + std::to_string(e.hi()) + " " + w.to_string() + "\n";
  }
  return out;
}

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (tok.size() != 2) fail_at(Errc::parse_error, line, "expected 'u v'");
    const std::uint64_t u = parse_count(tok[0], line);
    const std::uint64_t v = parse_count(tok[1], line);
    if (u == 0 || v == 0 || u == v) fail_at(Errc::parse_error, line, "expected two distinct 1-based ids");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  });
  return edges;
}

std::string triangulation_to_json(const Triangulation& g) { return triangulation_json(g).dump(); }

Triangulation triangulation_from_json(std::string_view text) {
  const Json j = parse_json(text);
  return reading("triangulation", [&] { return triangulation_of(j); });
}

std::string sequence_to_json(const MoveSequence& moves) { return sequence_json(moves).dump(); }

MoveSequence sequence_from_json(std::string_view text) {
  const Json j = parse_json(text);
  return reading("move sequence", [&] { return sequence_of(j); });
}

std::string report_to_json(const SolveReport& report) {
  Json graphs = Json::array();
  for (const Triangulation& g : report.best_graphs) graphs.push_back(triangulation_json(g));
  Json j;
  j["method"] = report.method;
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  j["best_weight"] = report.best_weight.to_string();
  j["optima_count"] = report.optima_count;
  j["capped"] = report.capped;
  j["explored"] = report.explored;
  j["best_graphs"] = std::move(graphs);
  j["trace"] = report.trace ? sequence_json(*report.trace) : Json(nullptr);
  return j.dump(2);
}

SolveReport report_from_json(std::string_view text) {
  const Json j = parse_json(text);
  return reading("solve report", [&] {
    SolveReport r;
    r.method = j.at("method").get<std::string>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.best_weight = Weight::parse(j.at("best_weight").get<std::string>());
    r.optima_count = j.at("optima_count").get<std::uint64_t>();
    r.capped = j.at("capped").get<bool>();
    r.explored = j.at("explored").get<std::uint64_t>();
    for (const Json& g : j.at("best_graphs")) r.best_graphs.push_back(triangulation_of(g));
    if (!j.at("trace").is_null()) r.trace = sequence_of(j.at("trace"));
    return r;
  });
}

std::string tree_to_json(const SpanningTree& tree, const WeightedInstance& instance) {
  Json edges = Json::array();
  for (const Edge& e : tree.edges()) edges.push_back({e.lo(), e.hi()});
  Json j;
  j["n"] = tree.vertex_count();
  j["edges"] = std::move(edges);
  j["weight"] = instance.total(tree.edges()).to_string();
  return j.dump();
}

std::vector<std::array<VertexId, 3>> oriented_faces(const Triangulation& g) {
  const auto& faces = g.faces();
  std::vector<std::array<VertexId, 3>> cycle(faces.size());
  std::vector<char> done(faces.size(), 0);
  const DualGraph dual = dual_graph(g);

  auto runs = [](const std::array<VertexId, 3>& c, VertexId x, VertexId y) {
    for (int i = 0; i < 3; ++i) {
      if (c[i] == x && c[(i + 1) % 3] == y) return true;
    }
    return false;
  };

  cycle[0] = faces[0].corners();
  done[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t next : dual.neighbors[cur]) {
      // The shared edge must run the other way round in the neighbor.
      const Face& nf = faces[next];
      VertexId x = 0, y = 0;
      for (int i = 0; i < 3; ++i) {
        const VertexId p = cycle[cur][i], q = cycle[cur][(i + 1) % 3];
        if (nf.contains(p) && nf.contains(q)) {
          x = p;
          y = q;
        }
      }
      const std::array<VertexId, 3> want{y, x, nf.opposite(Edge(x, y))};
      if (done[next]) {
        if (!runs(cycle[next], y, x)) {
          throw Error(Errc::non_manifold, "face set admits no consistent orientation");
        }
        continue;
      }
      cycle[next] = want;
      done[next] = 1;
      queue.push_back(next);
    }
  }
  for (auto& c : cycle) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return cycle;
}

std::string export_dot(const Triangulation& g) {
  std::ostringstream out;
  out << "graph triangulation {\n";
  out << "  // n=" << g.vertex_count() << " edges=" << g.edge_count() << " faces=" << g.face_count()
      << "\n";
  for (VertexId v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.lo() << " -- " << e.hi() << ";\n";
  for (const auto& c : oriented_faces(g)) {
    out << "  // face " << c[0] << " " << c[1] << " " << c[2] << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mwpsp
