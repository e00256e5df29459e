#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "mesc/coloring.hpp"
#include "mesc/core.hpp"
#include "mesc/generators.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

CmdResult run_cli(const std::string& args) {
  const char* bin = std::getenv("MESC_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "MESC_CLI must point at the command line binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current))
    if (current == line) return true;
  return false;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current)) lines.push_back(current);
  return lines;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("mesc-cli-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string write_two_set_instance(const Scratch& scratch) {
  mesc::SetSystem system;
  system.n = 4;
  system.sets = {{1, 2, 3}, {3, 4}};
  const std::string path = scratch.path("ex.mesc");
  mesc::write_set_system_file(path, system);
  return path;
}

}  // namespace

TEST_CASE("solve reports the exact optimum") {
  Scratch scratch;
  const std::string input = write_two_set_instance(scratch);
  const CmdResult run = run_cli("solve --input " + input + " --algorithm exact");
  CHECK(run.exit_code == 0);
  CHECK(has_line(run.output, "n: 4"));
  CHECK(has_line(run.output, "m: 2"));
  CHECK(has_line(run.output, "f: 1.25"));
  CHECK(has_line(run.output, "entropy: 0.8112781"));
  CHECK(has_line(run.output, "class-sizes: 3 1"));
  CHECK(has_line(run.output, "assignment: 1 1 1 2"));
  CHECK(has_line(run.output, "certified: true"));
}

TEST_CASE("solve runs the heuristics and writes CSV rows") {
  Scratch scratch;
  const std::string input = write_two_set_instance(scratch);
  const std::string csv = scratch.path("rows.csv");

  CmdResult run = run_cli("solve --input " + input + " --algorithm biased-greedy --delta 1 " +
                          "--output " + csv);
  CHECK(run.exit_code == 0);
  CHECK(has_line(run.output, "delta: 1"));
  CHECK(has_line(run.output, "entropy: 0.8112781"));

  run = run_cli("solve --input " + input + " --algorithm greedy --output " + csv);
  CHECK(run.exit_code == 0);
  CHECK(has_line(run.output, "entropy: 1"));
  CHECK(has_line(run.output, "class-sizes: 2 2"));

  const auto rows = lines_of(read_file(csv));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "instance_id,n,m,f,delta,algorithm,ent_alg,ent_opt,rhs,slack,holds,seed");
  CHECK(rows[1] == "ex,4,2,1.25,1,biased-greedy,0.8112781,,,,,");
  CHECK(rows[2] == "ex,4,2,1.25,0,greedy,1,,,,,");
}

TEST_CASE("solve rejects delta misuse") {
  Scratch scratch;
  const std::string input = write_two_set_instance(scratch);
  CmdResult run = run_cli("solve --input " + input + " --algorithm biased-greedy");
  CHECK(run.exit_code == 2);
  CHECK(run.output.find("error: domain:") != std::string::npos);

  run = run_cli("solve --input " + input + " --algorithm exact --delta 0.5");
  CHECK(run.exit_code == 2);

  run = run_cli("solve --input " + input + " --algorithm nonsense");
  CHECK(run.exit_code == 2);
}

TEST_CASE("certify emits the schema on stdout") {
  Scratch scratch;
  const std::string input = write_two_set_instance(scratch);
  const CmdResult run = run_cli("certify --input " + input + " --delta 1");
  CHECK(run.exit_code == 0);
  const auto rows = lines_of(run.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "instance_id,n,m,f,delta,algorithm,ent_alg,ent_opt,rhs,slack,holds,seed");
  CHECK(rows[1] == "ex,4,2,1.25,1,biased-greedy,0.8112781,0.8112781,1.133206,0.3219281,true,");
}

TEST_CASE("certify sweeps a delta grid into a file") {
  Scratch scratch;
  const std::string input = write_two_set_instance(scratch);
  const std::string csv = scratch.path("sweep.csv");
  CmdResult run = run_cli("certify --input " + input + " --delta-grid 0:1:0.25 --output " + csv);
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("wrote: " + csv + " (5 rows)") != std::string::npos);

  auto rows = lines_of(read_file(csv));
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].find(",true,") != std::string::npos);

  // Appending keeps one header.
  run = run_cli("certify --input " + input + " --delta 0.5 --output " + csv);
  CHECK(run.exit_code == 0);
  rows = lines_of(read_file(csv));
  CHECK(rows.size() == 7);
  CHECK(rows[6].find("0.5,biased-greedy") != std::string::npos);
}

TEST_CASE("certify requires exactly one delta source") {
  Scratch scratch;
  const std::string input = write_two_set_instance(scratch);
  CmdResult run = run_cli("certify --input " + input);
  CHECK(run.exit_code == 2);
  run = run_cli("certify --input " + input + " --delta 0.5 --delta-grid 0:1:0.5");
  CHECK(run.exit_code == 2);
  run = run_cli("certify --input " + input + " --delta 1.5");
  CHECK(run.exit_code == 2);
}

TEST_CASE("color reports the fixture pipeline") {
  const CmdResult plain = run_cli("color --graph paper-fig1 --heuristics off");
  CHECK(plain.exit_code == 0);
  CHECK(has_line(plain.output, "graph: paper-fig1"));
  CHECK(has_line(plain.output, "n: 8"));
  CHECK(has_line(plain.output, "edges: 18"));
  CHECK(has_line(plain.output, "max-degree: 6"));
  CHECK(has_line(plain.output, "sets: 4"));
  CHECK(has_line(plain.output, "f: 1.375"));
  CHECK(has_line(plain.output, "colors: 4"));
  CHECK(has_line(plain.output, "entropy: 1.905639"));
  CHECK(has_line(plain.output, "coloring: 1 1 1 2 3 2 4 4"));
  CHECK(has_line(plain.output, "ent-opt: 1.561278"));
  CHECK(has_line(plain.output, "rhs: 2.02071"));
  CHECK(has_line(plain.output, "corollary-rhs: 3.435747"));
  CHECK(has_line(plain.output, "corollary-vacuous: false"));

  const CmdResult census = run_cli("color --graph paper-fig1 --f-alpha3");
  CHECK(census.exit_code == 0);
  CHECK(has_line(census.output, "alpha3-isolated: 0"));
  CHECK(has_line(census.output, "alpha3-plain-edges: 1"));
  CHECK(has_line(census.output, "alpha3-triangles: 3"));
  CHECK(has_line(census.output, "alpha3-f: 1.375"));
  CHECK(has_line(census.output, "entropy: 1.905639"));
}

TEST_CASE("color handles graph files and caps") {
  Scratch scratch;
  const std::string path = scratch.path("pairs.graph");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < 8; ++k) edges.emplace_back(2 * k + 1, 2 * k + 2);
  mesc::write_graph_file(path, mesc::Graph::create(16, edges));

  CmdResult run = run_cli("color --graph " + path + " --cap 10");
  CHECK(run.exit_code == 3);
  CHECK(run.output.find("error: cap:") != std::string::npos);

  run = run_cli("color --graph " + path + " --cap 100000");
  CHECK(run.exit_code == 0);
  CHECK(has_line(run.output, "sets: 256"));
}

TEST_CASE("color rejects the census on large independent sets") {
  Scratch scratch;
  const std::string path = scratch.path("empty4.graph");
  mesc::write_graph_file(path, mesc::Graph::create(4, {}));
  const CmdResult run = run_cli("color --graph " + path + " --f-alpha3");
  CHECK(run.exit_code == 2);
  CHECK(run.output.find("error: domain:") != std::string::npos);
}

TEST_CASE("phase transition sweep flips the winner at f = e") {
  const CmdResult run =
      run_cli("phase-transition --n 30 --m 10 --f-grid 2:3.25:0.25 --seeds 4 --seed 9");
  CHECK(run.exit_code == 0);
  const auto rows = lines_of(run.output);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] ==
        "f,n,m,seeds,mean_ent_greedy,mean_ent_biased,guarantee_greedy,guarantee_biased,"
        "guarantee_diff,best_delta,tie");

  int flips = 0;
  int previous = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream row(rows[i]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 11);
    const double f = std::stod(fields[0]);
    const double diff = std::stod(fields[8]);
    const int best = std::stoi(fields[9]);
    CHECK(((diff < 0 && best == 1) || (diff > 0 && best == 0)));
    if (f < 2.7) CHECK(best == 1);
    if (f > 2.75) CHECK(best == 0);
    if (previous >= 0 && best != previous) ++flips;
    previous = best;
  }
  CHECK(flips == 1);
}

TEST_CASE("phase transition writes CSV and SVG files") {
  Scratch scratch;
  const std::string csv = scratch.path("phase.csv");
  const std::string svg = scratch.path("phase.svg");
  const CmdResult run = run_cli("phase-transition --n 20 --m 8 --f-grid 1.5:3:0.75 --seeds 2 " +
                                std::string("--output ") + csv + " --svg " + svg);
  CHECK(run.exit_code == 0);
  CHECK(lines_of(read_file(csv)).size() == 4);
  const std::string plot = read_file(svg);
  CHECK(plot.rfind("<svg", 0) == 0);
  CHECK(plot.find("f = e") != std::string::npos);
  CHECK(plot.find("</svg>") != std::string::npos);
}

TEST_CASE("phase transition validates its grid") {
  CmdResult run = run_cli("phase-transition --n 10 --m 4 --f-grid 3:5:0.5");
  CHECK(run.exit_code == 2);
  run = run_cli("phase-transition --n 10 --m 4 --f-grid 2:1:0.5");
  CHECK(run.exit_code == 2);
  run = run_cli("phase-transition --n 10 --m 4");
  CHECK(run.exit_code == 2);
}

TEST_CASE("gen writes deterministic instances") {
  Scratch scratch;
  const std::string a = scratch.path("a.mesc");
  const std::string b = scratch.path("b.mesc");
  CmdResult run =
      run_cli("gen --type mesc --n 25 --m 6 --target-f 2.5 --seed 77 --output " + a);
  CHECK(run.exit_code == 0);
  CHECK(has_line(run.output, "type: mesc"));
  CHECK(has_line(run.output, "seed: 77"));
  run = run_cli("gen --type mesc --n 25 --m 6 --target-f 2.5 --seed 77 --output " + b);
  CHECK(run.exit_code == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(mesc::validate(mesc::read_set_system_file(a)).ok);

  const std::string g = scratch.path("g.graph");
  run = run_cli("gen --type graph --n 12 --p 0.4 --seed 3 --output " + g);
  CHECK(run.exit_code == 0);
  CHECK(mesc::read_graph_file(g).n == 12);

  run = run_cli("gen --type mesc --n 5 --m 2 --target-f 3 --output " + a);
  CHECK(run.exit_code == 2);
}

TEST_CASE("gen emits the bundled fixture") {
  Scratch scratch;
  const std::string path = scratch.path("fig1.graph");
  const CmdResult run = run_cli("gen --emit paper-fig1 --output " + path);
  CHECK(run.exit_code == 0);
  const mesc::Graph g = mesc::read_graph_file(path);
  CHECK(g.edges == mesc::paper_example_graph().edges);

  const CmdResult bad = run_cli("gen --emit nope --output " + path);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("exact budget exhaustion exits with the resource code") {
  Scratch scratch;
  mesc::GenSpec spec;
  spec.n = 12;
  spec.m = 6;
  spec.target_f = 4.0;
  spec.seed = 5;
  const std::string path = scratch.path("dense.mesc");
  mesc::write_set_system_file(path, mesc::random_set_system(spec));

  CmdResult run = run_cli("solve --input " + path + " --algorithm exact --budget 15");
  CHECK(run.exit_code == 3);
  CHECK(has_line(run.output, "certified: false"));
  CHECK(run.output.find("error: budget:") != std::string::npos);

  run = run_cli("certify --input " + path + " --delta 0.5 --budget 15");
  CHECK(run.exit_code == 3);
  const auto rows = lines_of(run.output);
  // ent_opt, rhs, slack and holds stay empty when the optimum is uncertified.
  REQUIRE(rows.size() >= 2);
  CHECK(rows[1].find(",,,,") != std::string::npos);
}

TEST_CASE("malformed files map to parse errors") {
  Scratch scratch;
  const std::string path = scratch.path("broken.mesc");
  std::ofstream(path) << "MESC 1\nnot a header\n";
  const CmdResult run = run_cli("solve --input " + path);
  CHECK(run.exit_code == 2);
  CHECK(run.output.find("error: parse:") != std::string::npos);
}
