#include "mesc/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace mesc {
namespace {

// Containing-set ids per element, ascending; index 0 holds element 1.
std::vector<std::vector<int>> containing_sets(const SetSystem& system) {
  std::vector<std::vector<int>> containing(static_cast<std::size_t>(system.n));
  for (int i = 1; i <= system.set_count(); ++i)
    for (const int u : system.set_at(i))
      containing[static_cast<std::size_t>(u) - 1].push_back(i);
  return containing;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

int light_count(int n, double delta) {
  if (n < 1) throw std::domain_error("light_count: n must be positive");
  if (!(delta >= 0.0 && delta <= 1.0))
    throw std::domain_error("delta = " + std::to_string(delta) + " outside [0, 1]");
  // The small slack keeps values like 0.3 * 10 from rounding up to 4.
  const int k = static_cast<int>(std::ceil(delta * static_cast<double>(n) - 1e-9));
  return std::clamp(k, 0, n);
}

SplitReport split_light_heavy(const SetSystem& system, double delta) {
  require_valid(system);
  const int n = system.n;
  const int k = light_count(n, delta);

  std::vector<int> freq(static_cast<std::size_t>(n), 0);
  for (const auto& s : system.sets)
    for (const int u : s) ++freq[static_cast<std::size_t>(u) - 1];

  SplitReport report;
  report.delta = delta;
  report.frequency_order.resize(static_cast<std::size_t>(n));
  std::iota(report.frequency_order.begin(), report.frequency_order.end(), 1);
  std::stable_sort(report.frequency_order.begin(), report.frequency_order.end(),
                   [&freq](int a, int b) {
                     return freq[static_cast<std::size_t>(a) - 1] <
                            freq[static_cast<std::size_t>(b) - 1];
                   });

  report.light.assign(report.frequency_order.begin(), report.frequency_order.begin() + k);
  report.heavy.assign(report.frequency_order.begin() + k, report.frequency_order.end());
  std::sort(report.light.begin(), report.light.end());
  std::sort(report.heavy.begin(), report.heavy.end());
  return report;
}

std::pair<CoverAssignment, AlgorithmTrace> biased_greedy(const SetSystem& system, double delta) {
  const SplitReport split = split_light_heavy(system, delta);
  const int n = system.n;
  const int m = system.set_count();
  const auto containing = containing_sets(system);

  std::vector<int> original_size(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i)
    original_size[static_cast<std::size_t>(i) - 1] =
        static_cast<int>(system.set_at(i).size());

  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  AlgorithmTrace trace;
  trace.records.reserve(static_cast<std::size_t>(n));

  for (const int u : split.light) {
    int best = 0;
    for (const int i : containing[static_cast<std::size_t>(u) - 1]) {
      if (best == 0 || original_size[static_cast<std::size_t>(i) - 1] >
                           original_size[static_cast<std::size_t>(best) - 1])
        best = i;
    }
    assignment[static_cast<std::size_t>(u) - 1] = best;
    const int size = original_size[static_cast<std::size_t>(best) - 1];
    trace.records.push_back({u, Phase::kBiased, best, size, size});
  }

  // Residual cardinality: light elements and already assigned heavy elements
  // no longer count, so each set starts at its number of heavy members.
  std::vector<char> heavy_flag(static_cast<std::size_t>(n), 0);
  for (const int u : split.heavy) heavy_flag[static_cast<std::size_t>(u) - 1] = 1;
  std::vector<int> residual(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i)
    for (const int u : system.set_at(i))
      if (heavy_flag[static_cast<std::size_t>(u) - 1])
        ++residual[static_cast<std::size_t>(i) - 1];

  for (const int u : split.heavy) {
    int best = 0;
    for (const int i : containing[static_cast<std::size_t>(u) - 1]) {
      if (best == 0 || residual[static_cast<std::size_t>(i) - 1] >
                           residual[static_cast<std::size_t>(best) - 1])
        best = i;
    }
    assignment[static_cast<std::size_t>(u) - 1] = best;
    trace.records.push_back({u, Phase::kGreedy, best,
                             original_size[static_cast<std::size_t>(best) - 1],
                             residual[static_cast<std::size_t>(best) - 1]});
    for (const int i : containing[static_cast<std::size_t>(u) - 1])
      --residual[static_cast<std::size_t>(i) - 1];
  }

  return {CoverAssignment::from_assignment(system, std::move(assignment)), std::move(trace)};
}

std::pair<CoverAssignment, AlgorithmTrace> greedy(const SetSystem& system) {
  return biased_greedy(system, 0.0);
}

std::pair<CoverAssignment, AlgorithmTrace> biased(const SetSystem& system) {
  return biased_greedy(system, 1.0);
}

ExactResult exact_min_entropy_cover(const SetSystem& system, const ExactOptions& options) {
  require_valid(system);
  if (options.node_budget < 1) throw std::domain_error("node budget must be positive");
  const int n = system.n;
  const int m = system.set_count();
  const auto containing = containing_sets(system);

  std::vector<int> hist(static_cast<std::size_t>(m), 0);
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  std::vector<int> best_assignment;
  double best_entropy = std::numeric_limits<double>::infinity();
  double sum_xlog = 0.0;  // sum over classes of c log2 c
  const double log2n = std::log2(static_cast<double>(n));
  std::int64_t nodes = 0;
  bool budget_hit = false;

  // Plain recursion; depth is n and instances at this entry point stay small.
  auto dfs = [&](auto&& self, int u) -> void {
    if (nodes >= options.node_budget) {
      budget_hit = true;
      return;
    }
    ++nodes;
    if (u > n) {
      const double h = entropy_of_sizes(hist, n);
      if (h < best_entropy) {
        best_entropy = h;
        best_assignment = assignment;
      }
      return;
    }
    if (!best_assignment.empty()) {
      // Completion bound: entropy cannot drop below the cover that dumps
      // every remaining element into the currently largest class.
      const int rest = n - (u - 1);
      const int cmax = *std::max_element(hist.begin(), hist.end());
      const double completed =
          log2n - (sum_xlog - xlog2x(static_cast<double>(cmax)) +
                   xlog2x(static_cast<double>(cmax + rest))) /
                      static_cast<double>(n);
      // Margin keeps rounding noise from pruning an equally good branch;
      // ties must survive so the first-found optimum stays lexicographic.
      if (completed > best_entropy + 1e-9) return;
    }
    for (const int i : containing[static_cast<std::size_t>(u) - 1]) {
      auto& c = hist[static_cast<std::size_t>(i) - 1];
      sum_xlog += xlog2x(static_cast<double>(c + 1)) - xlog2x(static_cast<double>(c));
      ++c;
      assignment[static_cast<std::size_t>(u) - 1] = i;
      self(self, u + 1);
      --c;
      sum_xlog += xlog2x(static_cast<double>(c)) - xlog2x(static_cast<double>(c + 1));
      if (budget_hit) return;
    }
    assignment[static_cast<std::size_t>(u) - 1] = 0;
  };
  dfs(dfs, 1);

  if (best_assignment.empty())
    throw std::runtime_error("node budget " + std::to_string(options.node_budget) +
                             " too small to reach any complete cover");

  ExactResult result;
  result.cover = CoverAssignment::from_assignment(system, std::move(best_assignment));
  result.entropy = best_entropy;
  result.certified = !budget_hit;
  result.nodes = nodes;
  return result;
}

TheoremBound theorem_bound(double ent_opt, double f, double delta, int n) {
  if (!(ent_opt >= 0.0))
    throw std::domain_error("ent_opt = " + std::to_string(ent_opt) + " must be >= 0");
  if (!(f >= 1.0)) throw std::domain_error("f = " + std::to_string(f) + " must be >= 1");
  TheoremBound bound;
  bound.beta =
      static_cast<double>(n - light_count(n, delta)) / static_cast<double>(n);
  const double middle =
      bound.beta > 0.0 ? bound.beta * std::log2(bound.beta / std::numbers::e) : 0.0;
  bound.rhs = ent_opt + std::log2(f) - middle;
  return bound;
}

BoundCertificate certify(const SetSystem& system, double delta, const ExactResult& opt) {
  const auto [cover, trace] = biased_greedy(system, delta);
  const int n = system.n;

  BoundCertificate cert;
  cert.delta = delta;
  cert.f = avg_frequency(system);
  cert.ent_alg = entropy_of_cover(cover, n);
  cert.ent_opt = opt.entropy;
  cert.opt_certified = opt.certified;

  const TheoremBound bound = theorem_bound(opt.entropy, cert.f, delta, n);
  cert.beta = bound.beta;
  cert.rhs = bound.rhs;
  cert.slack = bound.rhs - cert.ent_alg;
  cert.holds = cert.slack >= -1e-9;

  cert.div_alg_sizes = entropy_decomposition(system, cover).divergence_term;

  // The derivation drops beta * D(heavy share of the optimum || optimum);
  // report it so near-tight instances can be inspected.
  const SplitReport split = split_light_heavy(system, delta);
  std::vector<char> heavy_flag(static_cast<std::size_t>(n), 0);
  for (const int u : split.heavy) heavy_flag[static_cast<std::size_t>(u) - 1] = 1;
  std::vector<int> heavy_per_class(opt.cover.class_sizes.size(), 0);
  long long heavy_total = 0;
  for (int u = 1; u <= n; ++u) {
    if (!heavy_flag[static_cast<std::size_t>(u) - 1]) continue;
    ++heavy_per_class[static_cast<std::size_t>(opt.cover.assignment[static_cast<std::size_t>(u) - 1]) - 1];
    ++heavy_total;
  }
  if (heavy_total > 0) {
    // Any class with heavy mass is nonempty, so the reference weights are
    // positive wherever they need to be.
    const double div = kl_divergence(Distribution::from_counts(heavy_per_class),
                                     Distribution::from_counts(opt.cover.class_sizes));
    cert.div_heavy_scaled = cert.beta * div;
  }
  return cert;
}

BoundCertificate certify(const SetSystem& system, double delta, const ExactOptions& options) {
  return certify(system, delta, exact_min_entropy_cover(system, options));
}

BestDelta best_delta(double f) {
  if (!(f >= 1.0)) throw std::domain_error("f = " + std::to_string(f) + " must be >= 1");
  BestDelta choice;
  if (std::abs(f - std::numbers::e) <= 1e-12) {
    choice.delta = 1;
    choice.tie = true;
  } else {
    choice.delta = f < std::numbers::e ? 1 : 0;
  }
  return choice;
}

}  // namespace mesc
