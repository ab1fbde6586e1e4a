#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dcjperm/perm.hpp"

namespace {

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    out.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name, const std::string& content) {
  const std::filesystem::path path = g_dir / name;
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::map<std::string, std::string> parse_structured(const std::string& text) {
  std::map<std::string, std::string> kv;
  for (const std::string& line : lines_of(text)) {
    const std::size_t eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

bool contains_line(const std::string& text, const std::string& wanted) {
  for (const std::string& line : lines_of(text))
    if (line == wanted) return true;
  return false;
}

// Fixtures shared across the tests; file paths filled in main().
std::string fig_file;       // two chromosomes, six genes
std::string mixed_a_file;   // (1,6)(2,3)(4,5)(7,8)
std::string mixed_b_file;   // (1,2)(3,4)(5,6) on four regions
std::string conj_a_file;    // (1,2)(3,4)(5,6)
std::string conj_b_file;    // (1,6)(2,3)(4,5)

}  // namespace

TEST_CASE("encode prints the region count and cycle notation") {
  const RunResult result = run_cli("encode " + fig_file);
  CHECK(result.exit_code == 0);
  CHECK(result.out == "n=6 (2,5)(3,6)(4,7)(9,12)(10,11)\n");

  const RunResult tiny = run_cli("encode " + fixture("tiny.txt", "L 1\n"));
  CHECK(tiny.exit_code == 0);
  CHECK(tiny.out == "n=1 ()\n");
}

TEST_CASE("encode failures exit with the parse code") {
  CHECK(run_cli("encode " + fixture("dup.txt", "L 1 1\n")).exit_code == 2);
  CHECK(run_cli("encode " + fixture("bad.txt", "X 1\n")).exit_code == 2);
  CHECK(run_cli("encode " + (g_dir / "missing.txt").string()).exit_code == 2);
}

TEST_CASE("decode inverts encode") {
  const RunResult encoded = run_cli("encode " + fig_file);
  REQUIRE(encoded.exit_code == 0);
  const std::string round = fixture("roundtrip.txt", encoded.out);
  const RunResult decoded = run_cli("decode " + round);
  CHECK(decoded.exit_code == 0);
  CHECK(decoded.out == "L 1 3 2 4\nC 5 6\n");
}

TEST_CASE("distance breakdown and exit codes") {
  const RunResult result =
      run_cli("distance " + mixed_a_file + " " + mixed_b_file);
  CHECK(result.exit_code == 0);
  CHECK(contains_line(result.out, "distance: 3"));
  CHECK(contains_line(result.out, "lt: 5"));
  CHECK(contains_line(result.out, "nc: 1"));

  const RunResult same = run_cli("distance " + fig_file + " " + fig_file);
  CHECK(same.exit_code == 0);
  CHECK(contains_line(same.out, "distance: 0"));

  CHECK(run_cli("distance " + fig_file + " " + mixed_a_file).exit_code == 4);
}

TEST_CASE("distance with oracle cross-checks") {
  const RunResult result =
      run_cli("distance --oracle " + mixed_a_file + " " + mixed_b_file);
  CHECK(result.exit_code == 0);
  CHECK(contains_line(result.out, "oracle ag: 3"));
  CHECK(contains_line(result.out, "oracle bfs: 3"));
}

TEST_CASE("structured distance output parses back") {
  const RunResult result = run_cli("distance --format structured " +
                                   mixed_a_file + " " + mixed_b_file);
  CHECK(result.exit_code == 0);
  const auto kv = parse_structured(result.out);
  CHECK(kv.at("format") == "1");
  CHECK(kv.at("command") == "distance");
  CHECK(kv.at("total") == "3");
  CHECK(kv.at("lt") == "5");
  CHECK(kv.at("nc") == "1");
  CHECK(kv.at("components") == "2");
  CHECK(kv.at("component.0.points") == "1,2,3,4,5,6");
  CHECK(kv.at("component.0.kind") == "conjugate");
  CHECK(kv.at("component.1.kind") == "non_conjugate");
  CHECK(kv.at("component.1.distance") == "1");
}

TEST_CASE("sort emits a replayable scenario") {
  const RunResult same = run_cli("sort " + fig_file + " " + fig_file);
  CHECK(same.exit_code == 0);
  CHECK(same.out == "0 steps\n");

  const RunResult conj = run_cli("sort " + conj_a_file + " " + conj_b_file);
  CHECK(conj.exit_code == 0);
  const auto lines = lines_of(conj.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "2 steps");

  const RunResult mixed =
      run_cli("sort --format structured " + mixed_a_file + " " + mixed_b_file);
  CHECK(mixed.exit_code == 0);
  const auto kv = parse_structured(mixed.out);
  CHECK(kv.at("steps") == "3");
  // The final genome of the scenario equals the target's encoding.
  const RunResult target = run_cli("encode " + mixed_b_file);
  CHECK(contains_line(target.out, "n=4 " + kv.at("step.2.genome")));
  // Every printed permutation parses back.
  for (int k = 0; k < 3; ++k) {
    const std::string text = kv.at("step." + std::to_string(k) + ".genome");
    CHECK_NOTHROW(dcjperm::parse_cycle_notation(text, 8));
  }
}

TEST_CASE("scenario counting modes") {
  const RunResult closed =
      run_cli("scenarios " + conj_a_file + " " + conj_b_file);
  CHECK(closed.exit_code == 0);
  CHECK(closed.out == "3 (closed form)\n");

  const RunResult zero = run_cli("scenarios " + fig_file + " " + fig_file);
  CHECK(zero.exit_code == 0);
  CHECK(zero.out == "1\n");

  const RunResult brute =
      run_cli("scenarios " + mixed_a_file + " " + mixed_b_file);
  CHECK(brute.exit_code == 0);
  CHECK(brute.out == "9 (exhaustive)\n");
}

TEST_CASE("scenario enumeration with limits") {
  const RunResult all =
      run_cli("scenarios --enumerate " + conj_a_file + " " + conj_b_file);
  CHECK(all.exit_code == 0);
  CHECK(lines_of(all.out).front() == "scenarios: 3");

  const RunResult capped = run_cli("scenarios --enumerate --limit 2 " +
                                   conj_a_file + " " + conj_b_file);
  CHECK(capped.exit_code == 0);
  CHECK(lines_of(capped.out).front() == "scenarios: 2 (truncated)");
}

TEST_CASE("genome space enumeration") {
  const RunResult tiny = run_cli("enumerate 1");
  CHECK(tiny.exit_code == 0);
  CHECK(tiny.out == "()\n(1,2)\n");

  CHECK(run_cli("enumerate 3 --count-only").out == "76\n");
  CHECK(run_cli("enumerate 9 --count-only").out == "997313824\n");
  CHECK(run_cli("enumerate 7").exit_code == 5);
}

TEST_CASE("random genomes are reproducible and valid input") {
  const RunResult first = run_cli("random 5 --seed 42");
  const RunResult second = run_cli("random 5 --seed 42");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  const std::string path = fixture("random.txt", first.out);
  CHECK(run_cli("encode " + path).exit_code == 0);

  const RunResult other = run_cli("random 5 --seed 43");
  CHECK(other.out != first.out);
}

TEST_CASE("oracle subcommands") {
  const RunResult oracle =
      run_cli("oracle-distance " + conj_a_file + " " + conj_b_file);
  CHECK(oracle.exit_code == 0);
  CHECK(contains_line(oracle.out, "bfs: 2"));
  CHECK(contains_line(oracle.out, "ag: 2"));

  const RunResult stats =
      run_cli("ag-stats " + mixed_a_file + " " + mixed_b_file);
  CHECK(stats.exit_code == 0);
  CHECK(contains_line(stats.out, "cycles: 1"));
  CHECK(contains_line(stats.out, "odd_paths: 0"));
  CHECK(contains_line(stats.out, "even_paths: 1"));
  CHECK(contains_line(stats.out, "distance: 3"));
}

int run_all(int argc, char** argv) {
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv + 1);
  return context.run();
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-dcjperm>\n");
    return 1;
  }
  g_cli = argv[1];

  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "dcjperm-cli-tests";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  g_dir = dir;

  fig_file = fixture("fig.txt", "L 1 3 2 4\nC 5 6\n");
  mixed_a_file = fixture("mixed_a.txt", "C 1 2 3\nC 4\n");
  mixed_b_file = fixture("mixed_b.txt", "C 1\nC 2\nC 3\nL 4\n");
  conj_a_file = fixture("conj_a.txt", "C 1\nC 2\nC 3\n");
  conj_b_file = fixture("conj_b.txt", "C 1 2 3\n");

  return run_all(argc, argv);
}
