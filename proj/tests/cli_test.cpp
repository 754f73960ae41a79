// Runs the mwpsp executable and checks output and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = MWPSP_CLI;
const std::string kData = MWPSP_TEST_DATA;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string scratch(const std::string& name) { return std::string(MWPSP_SCRATCH) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string counterexample_file() {
  auto path = scratch("counterexample.txt");
  auto r = run("counterexample");
  REQUIRE(r.code == 0);
  std::ofstream(path) << r.out;
  return path;
}

}  // namespace

TEST_CASE("validate") {
  auto ok = run("validate -g " + data("g5.json"));
  CHECK(ok.code == 0);
  CHECK(ok.out == "{\"valid\":true,\"n\":5,\"edges\":9,\"faces\":6}\n");
  CHECK(run("validate -g " + data("bad_euler.json")).code == 1);
  CHECK(run("validate -g " + data("missing.json")).code == 1);
  CHECK(run("validate").code == 1);
  CHECK(run("frobnicate").code == 1);
}

TEST_CASE("counterexample and exact") {
  auto ce = counterexample_file();
  auto text = slurp(ce);
  CHECK(text.rfind("n 8\n1 2 2\n1 3 1\n", 0) == 0);

  auto exact = run("exact -i " + ce);
  CHECK(exact.code == 0);
  CHECK(exact.out.find("\"best_weight\": \"24\"") != std::string::npos);
  CHECK(exact.out.find("\"optima_count\": 1,") != std::string::npos);

  auto forced = run("exact -i " + ce + " --forced " + data("path_forced.txt"));
  CHECK(forced.code == 0);
  CHECK(forced.out.find("\"best_weight\": \"23\"") != std::string::npos);
  CHECK(forced.out.find("\"capped\": true") != std::string::npos);
  auto all = run("exact -i " + ce + " --forced " + data("path_forced.txt") + " --all-optima");
  CHECK(all.out.find("\"capped\": false") != std::string::npos);
  CHECK(all.out.size() > forced.out.size());

  CHECK(run("exact -i " + ce + " --budget 100").code == 2);
  CHECK(run("exact -i " + data("reversed.txt")).code == 1);
}

TEST_CASE("mst and solve") {
  auto ce = counterexample_file();
  auto mst = run("mst -i " + ce);
  CHECK(mst.code == 0);
  CHECK(mst.out == "{\"n\":8,\"edges\":[[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,8]],\"weight\":\"14\"}\n");

  auto none = run("solve -i " + ce + " --construct mst-greedy --improve none");
  CHECK(none.code == 0);
  CHECK(none.out.find("\"method\": \"mst-greedy\"") != std::string::npos);
  auto a = run("solve -i " + ce + " --improve anneal --seed 5");
  auto b = run("--seed 5 solve -i " + ce + " --improve anneal");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"seed\": 5") != std::string::npos);
  CHECK(run("solve -i " + ce + " --improve sideways").code == 1);
  CHECK(run("solve -i " + ce + " --workers 4 --improve steepest").out ==
        run("solve -i " + ce + " --improve steepest").out);
}

TEST_CASE("relocate and flipseq") {
  auto compiled = run("relocate -g " + data("g5.json") + " -u 5 -f 2,3,4 --compile");
  CHECK(compiled.code == 0);
  CHECK(compiled.out == "[{\"op\":\"flip\",\"edge\":[2,3]},{\"op\":\"flip\",\"edge\":[1,5]}]\n");
  auto moved = run("relocate -g " + data("g5.json") + " -u 5 -f 2,3,4");
  CHECK(moved.out == "{\"n\":5,\"faces\":[[1,2,3],[1,2,4],[1,3,4],[2,3,5],[2,4,5],[3,4,5]]}\n");
  CHECK(run("relocate -g " + data("g5.json") + " -u 1 -f 2,3,4").code == 1);
  CHECK(run("relocate -g " + data("g5.json") + " -u 5 -f 2,3").code == 1);

  auto seq = run("flipseq -a " + data("g5.json") + " -b " + data("g5_flipped.json"));
  CHECK(seq.code == 0);
  CHECK(seq.out == "[{\"op\":\"flip\",\"edge\":[1,2]}]\n");
}

TEST_CASE("enumerate") {
  CHECK(run("enumerate -n 5 --count-only").out == "10\n");
  CHECK(run("enumerate -n 6 --count-only").out == "195\n");
  auto lines = run("enumerate -n 5");
  CHECK(lines.code == 0);
  CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 10);
  CHECK(lines.out == run("enumerate -n 5").out);
  CHECK(run("enumerate -n 12 --count-only").code == 2);
  CHECK(run("enumerate -n 7 --count-only --budget 10").code == 2);
}

TEST_CASE("export-dot") {
  auto out = scratch("g5.dot");
  std::remove(out.c_str());
  auto r = run("export-dot -g " + data("g5.json") + " -o " + out);
  CHECK(r.code == 0);
  auto dot = slurp(out);
  CHECK(dot.rfind("graph triangulation {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 1 + 5 + 9 + 6 + 1);
  CHECK(run("export-dot -g " + data("g5.json")).code == 1);
}
