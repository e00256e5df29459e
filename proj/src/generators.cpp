#include "mesc/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "rng.hpp"

namespace mesc {

SetSystem random_set_system(const GenSpec& spec) {
  if (spec.n < 1) throw std::domain_error("random_set_system: n must be positive");
  if (spec.m < 1) throw std::domain_error("random_set_system: m must be positive");
  if (!(spec.target_f >= 1.0 && spec.target_f <= static_cast<double>(spec.m)))
    throw std::domain_error("random_set_system: target_f = " + std::to_string(spec.target_f) +
                            " outside [1, m = " + std::to_string(spec.m) + "]");

  detail::Rng rng(spec.seed);
  const double p = spec.target_f / static_cast<double>(spec.m);

  SetSystem system;
  system.n = spec.n;
  system.sets.assign(static_cast<std::size_t>(spec.m), {});

  // Element-major draws: all membership coins for element u come before
  // those for u + 1, which keeps files for a given seed stable.
  std::vector<int> uncovered;
  for (int u = 1; u <= spec.n; ++u) {
    bool covered = false;
    for (int i = 1; i <= spec.m; ++i) {
      if (rng.bernoulli(p)) {
        system.sets[static_cast<std::size_t>(i) - 1].push_back(u);
        covered = true;
      }
    }
    if (!covered) uncovered.push_back(u);
  }
  for (const int u : uncovered) {
    auto& target = system.sets[rng.next_below(static_cast<std::uint64_t>(spec.m))];
    target.insert(std::upper_bound(target.begin(), target.end(), u), u);
  }
  return system;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("random_graph: n must be positive");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("random_graph: p = " + std::to_string(p) + " outside [0, 1]");
  detail::Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::create(n, std::move(edges));
}

Graph paper_example_graph() {
  // The bundled 8-vertex example, stated through its complement's edges.
  static const std::vector<std::pair<int, int>> comp_edges = {
      {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {6, 7}, {6, 8}, {7, 8}};
  return complement(Graph::create(8, comp_edges));
}

bool is_fixture_id(const std::string& id) { return id == "paper-fig1"; }

Graph load_fixture(const std::string& id) {
  if (id == "paper-fig1") return paper_example_graph();
  throw std::invalid_argument("unknown fixture id '" + id + "'");
}

}  // namespace mesc
