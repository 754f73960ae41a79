// Command-line front end. Talks to the library only through mwpsp.h.

#include <mwpsp/mwpsp.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
  mwpsp_status status;
};

void check(mwpsp_status status) {
  if (status != MWPSP_OK) throw Failure{status};
}

struct Deleter {
  void operator()(mwpsp_triangulation* p) const { mwpsp_triangulation_free(p); }
  void operator()(mwpsp_instance* p) const { mwpsp_instance_free(p); }
  void operator()(mwpsp_sequence* p) const { mwpsp_sequence_free(p); }
  void operator()(mwpsp_tree* p) const { mwpsp_tree_free(p); }
  void operator()(mwpsp_report* p) const { mwpsp_report_free(p); }
  void operator()(char* p) const { mwpsp_string_free(p); }
  void operator()(uint32_t* p) const { mwpsp_pairs_free(p); }
};

template <class T>
using Owned = std::unique_ptr<T, Deleter>;

template <class T, class Fn>
Owned<T> make(Fn&& fn) {
  T* raw = nullptr;
  check(fn(&raw));
  return Owned<T>(raw);
}

std::string take(mwpsp_status status, char** s) {
  Owned<char> guard(*s);
  check(status);
  return std::string(*s);
}

// Input problems that never reach the library.
struct UsageError {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Owned<mwpsp_triangulation> load_graph(const std::string& path) {
  auto text = slurp(path);
  return make<mwpsp_triangulation>(
      [&](mwpsp_triangulation** out) { return mwpsp_triangulation_from_json(text.c_str(), out); });
}

Owned<mwpsp_instance> load_instance(const std::string& path) {
  auto text = slurp(path);
  return make<mwpsp_instance>(
      [&](mwpsp_instance** out) { return mwpsp_instance_parse(text.c_str(), out); });
}

std::string graph_json(const mwpsp_triangulation* t) {
  char* s = nullptr;
  return take(mwpsp_triangulation_to_json(t, &s), &s);
}

std::string sequence_json(const mwpsp_sequence* seq) {
  char* s = nullptr;
  return take(mwpsp_sequence_to_json(seq, &s), &s);
}

std::string report_json(const mwpsp_report* r) {
  char* s = nullptr;
  return take(mwpsp_report_to_json(r, &s), &s);
}

std::vector<uint32_t> parse_face(const std::string& text) {
  std::vector<uint32_t> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0 || v > UINT32_MAX) throw std::invalid_argument(item);
      ids.push_back(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError{"bad face '" + text + "': expected a,b,c"};
    }
  }
  if (ids.size() != 3) throw UsageError{"bad face '" + text + "': expected a,b,c"};
  return ids;
}

mwpsp_improve parse_improve(const std::string& name) {
  if (name == "none") return MWPSP_IMPROVE_NONE;
  if (name == "steepest") return MWPSP_IMPROVE_STEEPEST;
  if (name == "first") return MWPSP_IMPROVE_FIRST;
  return MWPSP_IMPROVE_ANNEAL;
}

void visit_line(const mwpsp_triangulation* t, void*) {
  char* s = nullptr;
  std::cout << take(mwpsp_triangulation_to_json(t, &s), &s) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moves and maximum-weight planar subgraph solvers on maximal planar graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned workers = 1;
  uint64_t seed = 0;
  uint64_t budget = MWPSP_DEFAULT_BUDGET;
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--budget", budget, "Maximum triangulations visited")->check(CLI::PositiveNumber);

  std::string graph_file, instance_file, forced_file, a_file, b_file, out_file, face_text;
  std::string construct = "mst-greedy", improve = "none";
  uint32_t vertex = 0, n = 0;
  bool all_optima = false, compile = false, count_only = false;

  auto* validate = app.add_subcommand("validate", "Check a triangulation file");
  validate->add_option("-g,--graph", graph_file)->required();

  auto* mst = app.add_subcommand("mst", "Maximum spanning tree of an instance");
  mst->add_option("-i,--instance", instance_file)->required();

  auto* solve = app.add_subcommand("solve", "Heuristic solve");
  solve->add_option("-i,--instance", instance_file)->required();
  solve->add_option("--construct", construct)->check(CLI::IsMember({"mst-greedy"}));
  solve->add_option("--improve", improve)
      ->check(CLI::IsMember({"none", "steepest", "first", "anneal"}));

  auto* exact = app.add_subcommand("exact", "Exhaustive optimum");
  exact->add_option("-i,--instance", instance_file)->required();
  exact->add_option("--forced", forced_file, "File of 'u v' edges every solution must contain");
  exact->add_flag("--all-optima", all_optima, "List every optimum instead of the first");

  auto* flipseq = app.add_subcommand("flipseq", "Edge substitutions turning one graph into another");
  flipseq->add_option("-a", a_file)->required();
  flipseq->add_option("-b", b_file)->required();

  auto* relocate = app.add_subcommand("relocate", "Move a degree-3 vertex into a face");
  relocate->add_option("-g,--graph", graph_file)->required();
  relocate->add_option("-u", vertex)->required();
  relocate->add_option("-f", face_text)->required();
  relocate->add_flag("--compile", compile, "Print the equivalent edge substitutions");

  auto* enumerate = app.add_subcommand("enumerate", "All labeled triangulations of {1..n}");
  enumerate->add_option("-n", n)->required();
  enumerate->add_flag("--count-only", count_only);

  auto* counterexample = app.add_subcommand("counterexample", "Print the built-in 8-vertex instance");

  auto* export_dot = app.add_subcommand("export-dot", "Write a triangulation as DOT");
  export_dot->add_option("-g,--graph", graph_file)->required();
  export_dot->add_option("-o,--output", out_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*validate) {
      auto g = load_graph(graph_file);
      std::cout << "{\"valid\":true,\"n\":" << mwpsp_triangulation_vertex_count(g.get())
                << ",\"edges\":" << mwpsp_triangulation_edge_count(g.get())
                << ",\"faces\":" << mwpsp_triangulation_face_count(g.get()) << "}\n";
    } else if (*mst) {
      auto w = load_instance(instance_file);
      auto t = make<mwpsp_tree>(
          [&](mwpsp_tree** out) { return mwpsp_maximum_spanning_tree(w.get(), 1, out); });
      char* s = nullptr;
      std::cout << take(mwpsp_tree_to_json(t.get(), w.get(), &s), &s) << '\n';
    } else if (*solve) {
      auto w = load_instance(instance_file);
      auto r = make<mwpsp_report>([&](mwpsp_report** out) {
        return mwpsp_solve(w.get(), parse_improve(improve), seed, out);
      });
      std::cout << report_json(r.get()) << '\n';
    } else if (*exact) {
      auto w = load_instance(instance_file);
      Owned<uint32_t> forced;
      size_t forced_count = 0;
      if (!forced_file.empty()) {
        auto text = slurp(forced_file);
        uint32_t* pairs = nullptr;
        check(mwpsp_edge_list_parse(text.c_str(), &pairs, &forced_count));
        forced.reset(pairs);
      }
      size_t cap = all_optima ? MWPSP_DEFAULT_CAP : 1;
      auto r = make<mwpsp_report>([&](mwpsp_report** out) {
        return mwpsp_exact(w.get(), forced.get(), forced_count, cap, budget, out);
      });
      std::cout << report_json(r.get()) << '\n';
    } else if (*flipseq) {
      auto a = load_graph(a_file);
      auto b = load_graph(b_file);
      auto seq = make<mwpsp_sequence>(
          [&](mwpsp_sequence** out) { return mwpsp_transform(a.get(), b.get(), 0, out); });
      std::cout << sequence_json(seq.get()) << '\n';
    } else if (*relocate) {
      auto g = load_graph(graph_file);
      auto f = parse_face(face_text);
      if (compile) {
        auto seq = make<mwpsp_sequence>([&](mwpsp_sequence** out) {
          return mwpsp_relocation_as_flips(g.get(), vertex, f.data(), out);
        });
        std::cout << sequence_json(seq.get()) << '\n';
      } else {
        auto h = make<mwpsp_triangulation>([&](mwpsp_triangulation** out) {
          return mwpsp_vertex_relocate(g.get(), vertex, f.data(), out);
        });
        std::cout << graph_json(h.get()) << '\n';
      }
    } else if (*enumerate) {
      uint64_t count = 0;
      check(mwpsp_enumerate(n, budget, count_only ? nullptr : visit_line, nullptr, &count));
      if (count_only) std::cout << count << '\n';
    } else if (*counterexample) {
      auto w = make<mwpsp_instance>(
          [](mwpsp_instance** out) { return mwpsp_instance_counterexample(out); });
      char* s = nullptr;
      std::cout << take(mwpsp_instance_to_text(w.get(), &s), &s);
    } else if (*export_dot) {
      auto g = load_graph(graph_file);
      char* s = nullptr;
      auto dot = take(mwpsp_triangulation_to_dot(g.get(), &s), &s);
      std::ofstream out(out_file, std::ios::binary);
      if (!out) throw UsageError{"cannot write " + out_file};
      out << dot;
      if (!out.flush()) throw UsageError{"cannot write " + out_file};
    }
  } catch (const Failure& f) {
    std::cout.flush();
    std::cerr << "error: " << mwpsp_last_error() << '\n';
    return mwpsp_status_is_resource_limit(f.status) ? 2 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return 1;
  }
  std::cout.flush();
  return 0;
}
