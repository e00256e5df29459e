#pragma once

#include <cstdint>
#include <string>

#include "mesc/coloring.hpp"
#include "mesc/core.hpp"

namespace mesc {

/// Parameters for random covering instances. Memberships are independent
/// draws with probability target_f / m so the realized average frequency
/// concentrates around target_f; elements left uncovered are repaired into
/// one uniformly chosen set. Requires n >= 1, m >= 1, 1 <= target_f <= m.
struct GenSpec {
  int n = 0;
  int m = 0;
  double target_f = 1.0;
  std::uint64_t seed = 0;
};

SetSystem random_set_system(const GenSpec& spec);

/// Erdos-Renyi graph: each pair is an edge independently with probability p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// The bundled 8-vertex example graph, fixture id "paper-fig1".
Graph paper_example_graph();

bool is_fixture_id(const std::string& id);

/// Throws std::invalid_argument for unknown ids.
Graph load_fixture(const std::string& id);

}  // namespace mesc
