// Command line front end: solver runs, bound certification sweeps, the
// coloring pipeline, the delta phase transition experiment, and instance
// generation. Reports go to stdout; CSV goes to stdout or --output.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mesc/coloring.hpp"
#include "mesc/core.hpp"
#include "mesc/generators.hpp"
#include "mesc/parallel.hpp"
#include "mesc/solvers.hpp"

namespace {

constexpr const char* kCsvHeader =
    "instance_id,n,m,f,delta,algorithm,ent_alg,ent_opt,rhs,slack,holds,seed";

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.7g", value);
  return buf;
}

std::string fmt_bool(bool value) { return value ? "true" : "false"; }

std::string instance_id_from_path(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// One line of the shared result schema; empty strings stay empty fields.
struct ResultRow {
  std::string instance_id;
  int n = 0;
  int m = 0;
  std::string f, delta, algorithm, ent_alg, ent_opt, rhs, slack, holds, seed;

  std::string to_csv() const {
    std::ostringstream out;
    out << instance_id << ',' << n << ',' << m << ',' << f << ',' << delta << ',' << algorithm
        << ',' << ent_alg << ',' << ent_opt << ',' << rhs << ',' << slack << ',' << holds << ','
        << seed;
    return out.str();
  }
};

// Appends rows, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const std::vector<ResultRow>& rows) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw mesc::ParseError("cannot open '" + path + "' for writing");
  if (fresh) out << kCsvHeader << '\n';
  for (const auto& row : rows) out << row.to_csv() << '\n';
  if (!out) throw mesc::ParseError("failed while writing '" + path + "'");
}

void print_csv(const std::vector<ResultRow>& rows) {
  std::cout << kCsvHeader << '\n';
  for (const auto& row : rows) std::cout << row.to_csv() << '\n';
}

// "start:stop:step", inclusive of stop up to rounding slack.
std::vector<double> parse_grid(const std::string& text, const char* what) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char tail = '\0';
  const int got =
      std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &tail);
  if (got != 3)
    throw std::invalid_argument(std::string(what) + ": expected start:stop:step, got '" + text +
                                "'");
  if (!(step > 0.0)) throw std::invalid_argument(std::string(what) + ": step must be positive");
  if (stop < start - 1e-12)
    throw std::invalid_argument(std::string(what) + ": stop must not precede start");
  std::vector<double> values;
  for (double v = start; v <= stop + 1e-12; v += step) values.push_back(std::min(v, stop));
  return values;
}

struct SolveArgs {
  std::string input;
  std::string algorithm = "biased-greedy";
  std::optional<double> delta;
  std::int64_t budget = mesc::ExactOptions{}.node_budget;
  std::string output;
};

int cmd_solve(const SolveArgs& args) {
  const mesc::SetSystem system = mesc::read_set_system_file(args.input);
  const double f = mesc::avg_frequency(system);

  double delta_used = 0.0;
  bool delta_shown = true;
  std::vector<int> assignment;
  std::vector<int> class_sizes;
  double entropy = 0.0;
  bool certified = true;
  bool is_exact = false;

  if (args.algorithm == "biased-greedy") {
    if (!args.delta)
      throw std::invalid_argument("--delta is required with --algorithm biased-greedy");
    delta_used = *args.delta;
    const auto [cover, trace] = mesc::biased_greedy(system, delta_used);
    assignment = cover.assignment;
    class_sizes = cover.class_sizes;
    entropy = mesc::entropy_of_cover(cover, system.n);
  } else if (args.algorithm == "greedy" || args.algorithm == "biased") {
    if (args.delta)
      throw std::invalid_argument("--delta is only valid with --algorithm biased-greedy");
    delta_used = args.algorithm == "biased" ? 1.0 : 0.0;
    const auto [cover, trace] = mesc::biased_greedy(system, delta_used);
    assignment = cover.assignment;
    class_sizes = cover.class_sizes;
    entropy = mesc::entropy_of_cover(cover, system.n);
  } else if (args.algorithm == "exact") {
    if (args.delta)
      throw std::invalid_argument("--delta is only valid with --algorithm biased-greedy");
    is_exact = true;
    delta_shown = false;
    const mesc::ExactResult result =
        mesc::exact_min_entropy_cover(system, mesc::ExactOptions{args.budget});
    assignment = result.cover.assignment;
    class_sizes = result.cover.class_sizes;
    entropy = result.entropy;
    certified = result.certified;
  } else {
    throw std::invalid_argument("unknown algorithm '" + args.algorithm + "'");
  }

  std::cout << "input: " << args.input << '\n';
  std::cout << "n: " << system.n << '\n';
  std::cout << "m: " << system.set_count() << '\n';
  std::cout << "f: " << fmt(f) << '\n';
  std::cout << "algorithm: " << args.algorithm << '\n';
  if (delta_shown) std::cout << "delta: " << fmt(delta_used) << '\n';
  std::cout << "entropy: " << fmt(entropy) << '\n';
  std::cout << "class-sizes:";
  for (const int s : class_sizes) std::cout << ' ' << s;
  std::cout << '\n';
  std::cout << "assignment:";
  for (const int i : assignment) std::cout << ' ' << i;
  std::cout << '\n';
  if (is_exact) std::cout << "certified: " << fmt_bool(certified) << '\n';

  if (!args.output.empty()) {
    ResultRow row;
    row.instance_id = instance_id_from_path(args.input);
    row.n = system.n;
    row.m = system.set_count();
    row.f = fmt(f);
    if (delta_shown) row.delta = fmt(delta_used);
    row.algorithm = args.algorithm;
    row.ent_alg = fmt(entropy);
    if (is_exact && certified) row.ent_opt = fmt(entropy);
    append_csv(args.output, {row});
  }

  if (is_exact && !certified) {
    std::cerr << "error: budget: node budget " << args.budget << " exhausted\n";
    return 3;
  }
  return 0;
}

struct CertifyArgs {
  std::string input;
  std::optional<double> delta;
  std::string delta_grid;
  std::int64_t budget = mesc::ExactOptions{}.node_budget;
  std::string output;
};

int cmd_certify(const CertifyArgs& args) {
  if (args.delta.has_value() == !args.delta_grid.empty())
    throw std::invalid_argument("exactly one of --delta and --delta-grid is required");
  std::vector<double> deltas;
  if (args.delta)
    deltas.push_back(*args.delta);
  else
    deltas = parse_grid(args.delta_grid, "--delta-grid");
  for (const double d : deltas)
    if (!(d >= 0.0 && d <= 1.0))
      throw std::invalid_argument("delta " + fmt(d) + " outside [0, 1]");

  const mesc::SetSystem system = mesc::read_set_system_file(args.input);
  const mesc::ExactResult opt =
      mesc::exact_min_entropy_cover(system, mesc::ExactOptions{args.budget});

  std::vector<ResultRow> rows;
  for (const double delta : deltas) {
    ResultRow row;
    row.instance_id = instance_id_from_path(args.input);
    row.n = system.n;
    row.m = system.set_count();
    row.delta = fmt(delta);
    row.algorithm = "biased-greedy";
    if (opt.certified) {
      const mesc::BoundCertificate cert = mesc::certify(system, delta, opt);
      row.f = fmt(cert.f);
      row.ent_alg = fmt(cert.ent_alg);
      row.ent_opt = fmt(cert.ent_opt);
      row.rhs = fmt(cert.rhs);
      row.slack = fmt(cert.slack);
      row.holds = fmt_bool(cert.holds);
    } else {
      const auto [cover, trace] = mesc::biased_greedy(system, delta);
      row.f = fmt(mesc::avg_frequency(system));
      row.ent_alg = fmt(mesc::entropy_of_cover(cover, system.n));
    }
    rows.push_back(std::move(row));
  }

  if (args.output.empty()) {
    print_csv(rows);
  } else {
    append_csv(args.output, rows);
    std::cout << "wrote: " << args.output << " (" << rows.size() << " rows)\n";
  }
  if (!opt.certified) {
    std::cerr << "error: budget: node budget " << args.budget
              << " exhausted, optimum not certified\n";
    return 3;
  }
  return 0;
}

struct ColorArgs {
  std::string graph;
  double delta = 1.0;
  std::string heuristics = "on";
  bool f_alpha3 = false;
  std::size_t cap = mesc::kDefaultMisCap;
  std::int64_t budget = mesc::ExactOptions{}.node_budget;
  std::string output;
};

int cmd_color(const ColorArgs& args) {
  const bool fixture = mesc::is_fixture_id(args.graph);
  const mesc::Graph g =
      fixture ? mesc::load_fixture(args.graph) : mesc::read_graph_file(args.graph);
  const std::string id = fixture ? args.graph : instance_id_from_path(args.graph);

  const mesc::SetSystem system = mesc::to_set_cover(g, args.cap);
  const double f = mesc::avg_frequency(system);

  mesc::Coloring coloring = mesc::biased_coloring(g, args.delta, args.cap);
  if (args.heuristics == "on") {
    coloring = mesc::heuristic_largest_is_first(g, coloring, args.cap);
    coloring = mesc::heuristic_merge_colors(g, coloring);
  }
  const double entropy = mesc::coloring_entropy(coloring);

  const mesc::ExactResult opt =
      mesc::exact_min_entropy_cover(system, mesc::ExactOptions{args.budget});

  std::cout << "graph: " << (fixture ? args.graph : args.graph) << '\n';
  std::cout << "n: " << g.n << '\n';
  std::cout << "edges: " << g.edge_count() << '\n';
  std::cout << "max-degree: " << g.max_degree() << '\n';
  std::cout << "sets: " << system.set_count() << '\n';
  std::cout << "f: " << fmt(f) << '\n';
  std::cout << "delta: " << fmt(args.delta) << '\n';
  std::cout << "heuristics: " << args.heuristics << '\n';
  std::cout << "colors: " << coloring.color_count() << '\n';
  std::cout << "entropy: " << fmt(entropy) << '\n';
  std::cout << "class-sizes:";
  for (const int s : coloring.class_sizes()) std::cout << ' ' << s;
  std::cout << '\n';
  std::cout << "coloring:";
  for (const int c : coloring.color) std::cout << ' ' << c;
  std::cout << '\n';

  if (args.f_alpha3) {
    const mesc::Alpha3Stats stats = mesc::f_alpha3(g);
    std::cout << "alpha3-isolated: " << stats.isolated << '\n';
    std::cout << "alpha3-plain-edges: " << stats.plain_edges << '\n';
    std::cout << "alpha3-triangles: " << stats.triangles << '\n';
    std::cout << "alpha3-f: " << fmt(stats.f) << '\n';
  }

  ResultRow row;
  row.instance_id = id;
  row.n = g.n;
  row.m = system.set_count();
  row.f = fmt(f);
  row.delta = fmt(args.delta);
  row.algorithm = args.heuristics == "on" ? "biased-coloring+heuristics" : "biased-coloring";
  row.ent_alg = fmt(entropy);

  if (opt.certified) {
    const double corollary = mesc::degree_corollary_bound(g, opt.entropy, args.cap);
    const mesc::TheoremBound bound = mesc::theorem_bound(opt.entropy, f, args.delta, g.n);
    std::cout << "ent-opt: " << fmt(opt.entropy) << '\n';
    std::cout << "rhs: " << fmt(bound.rhs) << '\n';
    std::cout << "corollary-rhs: " << fmt(corollary) << '\n';
    std::cout << "corollary-vacuous: " << fmt_bool(corollary < entropy - 1e-9) << '\n';
    row.ent_opt = fmt(opt.entropy);
    row.rhs = fmt(bound.rhs);
    row.slack = fmt(bound.rhs - entropy);
    row.holds = fmt_bool(bound.rhs - entropy >= -1e-9);
  } else {
    std::cout << "ent-opt: -\n";
  }

  if (!args.output.empty()) append_csv(args.output, {row});

  if (!opt.certified)
    std::cerr << "note: node budget " << args.budget
              << " exhausted, optimum not certified; bound lines omitted\n";
  return 0;
}

struct PhaseArgs {
  int n = 60;
  int m = 12;
  std::string f_grid;
  int seeds = 20;
  std::uint64_t seed = 1;
  std::string output;
  std::string svg;
};

struct PhasePoint {
  double f = 0.0;
  double mean_greedy = 0.0;
  double mean_biased = 0.0;
  double guarantee_greedy = 0.0;
  double guarantee_biased = 0.0;
  int best = 0;
  bool tie = false;
};

void write_phase_svg(const std::string& path, const std::vector<PhasePoint>& points);

int cmd_phase(const PhaseArgs& args) {
  if (args.n < 1) throw std::invalid_argument("--n must be positive");
  if (args.m < 1) throw std::invalid_argument("--m must be positive");
  if (args.seeds < 1) throw std::invalid_argument("--seeds must be positive");
  const std::vector<double> grid = parse_grid(args.f_grid, "--f-grid");
  for (const double f : grid)
    if (!(f >= 1.0 && f <= static_cast<double>(args.m)))
      throw std::invalid_argument("target f " + fmt(f) + " outside [1, m]");

  std::vector<PhasePoint> points(grid.size());
  mesc::parallel_for(grid.size(), [&](std::size_t idx) {
    const double target = grid[idx];
    double sum_greedy = 0.0, sum_biased = 0.0;
    for (int s = 0; s < args.seeds; ++s) {
      mesc::GenSpec spec;
      spec.n = args.n;
      spec.m = args.m;
      spec.target_f = target;
      spec.seed = args.seed + static_cast<std::uint64_t>(idx) * args.seeds +
                  static_cast<std::uint64_t>(s);
      const mesc::SetSystem system = mesc::random_set_system(spec);
      sum_greedy +=
          mesc::entropy_of_cover(mesc::greedy(system).first, system.n);
      sum_biased +=
          mesc::entropy_of_cover(mesc::biased(system).first, system.n);
    }
    PhasePoint point;
    point.f = target;
    point.mean_greedy = sum_greedy / args.seeds;
    point.mean_biased = sum_biased / args.seeds;
    point.guarantee_greedy = std::numbers::log2e;
    point.guarantee_biased = std::log2(target);
    const mesc::BestDelta choice = mesc::best_delta(target);
    point.best = choice.delta;
    point.tie = choice.tie;
    points[idx] = point;
  });

  std::ostringstream csv;
  csv << "f,n,m,seeds,mean_ent_greedy,mean_ent_biased,guarantee_greedy,guarantee_biased,"
         "guarantee_diff,best_delta,tie\n";
  for (const auto& p : points) {
    csv << fmt(p.f) << ',' << args.n << ',' << args.m << ',' << args.seeds << ','
        << fmt(p.mean_greedy) << ',' << fmt(p.mean_biased) << ',' << fmt(p.guarantee_greedy)
        << ',' << fmt(p.guarantee_biased) << ',' << fmt(p.guarantee_biased - p.guarantee_greedy)
        << ',' << p.best << ',' << fmt_bool(p.tie) << '\n';
  }

  if (args.output.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(args.output);
    if (!out) throw mesc::ParseError("cannot open '" + args.output + "' for writing");
    out << csv.str();
    if (!out) throw mesc::ParseError("failed while writing '" + args.output + "'");
    std::cout << "wrote: " << args.output << " (" << points.size() << " rows)\n";
  }
  if (!args.svg.empty()) {
    write_phase_svg(args.svg, points);
    std::cout << "wrote: " << args.svg << '\n';
  }
  return 0;
}

struct GenArgs {
  std::string type = "mesc";
  std::string emit;
  int n = 50;
  int m = 10;
  double target_f = 2.0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  if (!args.emit.empty()) {
    const mesc::Graph g = mesc::load_fixture(args.emit);
    mesc::write_graph_file(args.output, g);
    std::cout << "wrote: " << args.output << '\n';
    std::cout << "type: graph\n";
    std::cout << "fixture: " << args.emit << '\n';
    std::cout << "n: " << g.n << '\n';
    std::cout << "edges: " << g.edge_count() << '\n';
    return 0;
  }
  if (args.type == "mesc") {
    mesc::GenSpec spec;
    spec.n = args.n;
    spec.m = args.m;
    spec.target_f = args.target_f;
    spec.seed = args.seed;
    const mesc::SetSystem system = mesc::random_set_system(spec);
    mesc::write_set_system_file(args.output, system);
    std::cout << "wrote: " << args.output << '\n';
    std::cout << "type: mesc\n";
    std::cout << "n: " << system.n << '\n';
    std::cout << "m: " << system.set_count() << '\n';
    std::cout << "target-f: " << fmt(args.target_f) << '\n';
    std::cout << "realized-f: " << fmt(mesc::avg_frequency(system)) << '\n';
    std::cout << "seed: " << args.seed << '\n';
    return 0;
  }
  if (args.type == "graph") {
    const mesc::Graph g = mesc::random_graph(args.n, args.p, args.seed);
    mesc::write_graph_file(args.output, g);
    std::cout << "wrote: " << args.output << '\n';
    std::cout << "type: graph\n";
    std::cout << "n: " << g.n << '\n';
    std::cout << "p: " << fmt(args.p) << '\n';
    std::cout << "edges: " << g.edge_count() << '\n';
    std::cout << "seed: " << args.seed << '\n';
    return 0;
  }
  throw std::invalid_argument("unknown --type '" + args.type + "'");
}

// Minimal standalone plot: mean entropies and the two guarantee curves
// against the target frequency, with a marker at f = e.
void write_phase_svg(const std::string& path, const std::vector<PhasePoint>& points) {
  const double width = 720, height = 480, left = 70, right = 30, top = 40, bottom = 50;
  double fmin = points.front().f, fmax = points.back().f;
  if (fmax - fmin < 1e-9) {
    fmin -= 0.5;
    fmax += 0.5;
  }
  double ymax = 0.0;
  for (const auto& p : points)
    ymax = std::max({ymax, p.mean_greedy, p.mean_biased, p.guarantee_greedy, p.guarantee_biased});
  ymax = ymax * 1.1 + 0.1;

  auto sx = [&](double f) { return left + (f - fmin) / (fmax - fmin) * (width - left - right); };
  auto sy = [&](double y) { return height - bottom - y / ymax * (height - top - bottom); };

  auto polyline = [&](auto value, const char* color, const char* dash) {
    std::ostringstream s;
    s << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (dash[0] != '\0') s << " stroke-dasharray=\"" << dash << "\"";
    s << " points=\"";
    for (const auto& p : points) s << sx(p.f) << ',' << sy(value(p)) << ' ';
    s << "\"/>\n";
    return s.str();
  };

  std::ofstream out(path);
  if (!out) throw mesc::ParseError("cannot open '" + path + "' for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
      << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    const double f = fmin + (fmax - fmin) * t / 5.0;
    const double y = ymax * t / 5.0;
    out << "  <text x=\"" << sx(f) << "\" y=\"" << height - bottom + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(f) << "</text>\n";
    out << "  <text x=\"" << left - 8 << "\" y=\"" << sy(y) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y) << "</text>\n";
  }
  out << "  <text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"12\" text-anchor=\"middle\">target frequency f</text>\n";
  out << "  <text x=\"16\" y=\"" << (top + height - bottom) / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (top + height - bottom) / 2 << ")\">entropy (bits)</text>\n";

  if (std::numbers::e >= fmin && std::numbers::e <= fmax) {
    out << "  <line x1=\"" << sx(std::numbers::e) << "\" y1=\"" << top << "\" x2=\""
        << sx(std::numbers::e) << "\" y2=\"" << height - bottom
        << "\" stroke=\"gray\" stroke-dasharray=\"2,3\"/>\n";
    out << "  <text x=\"" << sx(std::numbers::e) + 4 << "\" y=\"" << top + 12
        << "\" font-size=\"11\" fill=\"gray\">f = e</text>\n";
  }

  out << polyline([](const PhasePoint& p) { return p.mean_greedy; }, "#1f77b4", "");
  out << polyline([](const PhasePoint& p) { return p.mean_biased; }, "#d62728", "");
  out << polyline([](const PhasePoint& p) { return p.guarantee_greedy; }, "#1f77b4", "5,4");
  out << polyline([](const PhasePoint& p) { return p.guarantee_biased; }, "#d62728", "5,4");

  const double lx = width - right - 190, ly = top + 6;
  const char* labels[] = {"mean entropy, delta = 0", "mean entropy, delta = 1",
                          "guarantee log2 e", "guarantee log2 f"};
  const char* colors[] = {"#1f77b4", "#d62728", "#1f77b4", "#d62728"};
  const char* dashes[] = {"", "", "5,4", "5,4"};
  for (int i = 0; i < 4; ++i) {
    out << "  <line x1=\"" << lx << "\" y1=\"" << ly + 16 * i << "\" x2=\"" << lx + 24
        << "\" y2=\"" << ly + 16 * i << "\" stroke=\"" << colors[i] << "\" stroke-width=\"1.5\"";
    if (dashes[i][0] != '\0') out << " stroke-dasharray=\"" << dashes[i] << "\"";
    out << "/>\n";
    out << "  <text x=\"" << lx + 30 << "\" y=\"" << ly + 16 * i + 4 << "\" font-size=\"11\">"
        << labels[i] << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw mesc::ParseError("failed while writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum entropy set cover toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run one algorithm on one instance");
  solve->add_option("--input", solve_args.input, "instance file")->required();
  solve->add_option("--algorithm", solve_args.algorithm,
                    "greedy | biased | biased-greedy | exact");
  solve->add_option("--delta", solve_args.delta, "light fraction for biased-greedy");
  solve->add_option("--budget", solve_args.budget, "node budget for exact search");
  solve->add_option("--output", solve_args.output, "append a CSV result row here");

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "check the additive bound per delta");
  certify->add_option("--input", certify_args.input, "instance file")->required();
  certify->add_option("--delta", certify_args.delta, "single delta");
  certify->add_option("--delta-grid", certify_args.delta_grid, "start:stop:step");
  certify->add_option("--budget", certify_args.budget, "node budget for exact search");
  certify->add_option("--output", certify_args.output, "append CSV rows here");

  ColorArgs color_args;
  auto* color = app.add_subcommand("color", "minimum entropy coloring pipeline");
  color->add_option("--graph", color_args.graph, "graph file or fixture id")->required();
  color->add_option("--delta", color_args.delta, "light fraction for the covering step");
  color->add_option("--heuristics", color_args.heuristics, "on | off")
      ->check(CLI::IsMember({"on", "off"}));
  color->add_flag("--f-alpha3", color_args.f_alpha3, "print the closed form census");
  color->add_option("--cap", color_args.cap, "maximal independent set cap");
  color->add_option("--budget", color_args.budget, "node budget for exact search");
  color->add_option("--output", color_args.output, "append a CSV result row here");

  PhaseArgs phase_args;
  auto* phase = app.add_subcommand("phase-transition", "delta 0 vs delta 1 sweep over f");
  phase->add_option("--n", phase_args.n, "elements per instance");
  phase->add_option("--m", phase_args.m, "sets per instance");
  phase->add_option("--f-grid", phase_args.f_grid, "start:stop:step")->required();
  phase->add_option("--seeds", phase_args.seeds, "instances per grid point");
  phase->add_option("--seed", phase_args.seed, "base seed");
  phase->add_option("--output", phase_args.output, "write the sweep CSV here");
  phase->add_option("--svg", phase_args.svg, "write a plot here");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate instances and graphs");
  gen->add_option("--type", gen_args.type, "mesc | graph");
  gen->add_option("--emit", gen_args.emit, "write a named fixture instead");
  gen->add_option("--n", gen_args.n, "elements or vertices");
  gen->add_option("--m", gen_args.m, "sets (mesc type)");
  gen->add_option("--target-f", gen_args.target_f, "average frequency target (mesc type)");
  gen->add_option("--p", gen_args.p, "edge probability (graph type)");
  gen->add_option("--seed", gen_args.seed, "seed");
  gen->add_option("--output", gen_args.output, "destination path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: cli: " << e.what() << '\n';
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (certify->parsed()) return cmd_certify(certify_args);
    if (color->parsed()) return cmd_color(color_args);
    if (phase->parsed()) return cmd_phase(phase_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    return 2;
  } catch (const mesc::CapExceededError& e) {
    std::cerr << "error: cap: " << e.what() << '\n';
    return 3;
  } catch (const mesc::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: domain: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: budget: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 2;
  }
}
