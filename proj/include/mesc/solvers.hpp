#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mesc/core.hpp"

namespace mesc {

/// Partition of the ground set into the ceil(delta*n) least frequent
/// elements (light) and the rest (heavy). Frequency ties break by index.
struct SplitReport {
  double delta = 0.0;
  std::vector<int> light;            // ascending element ids
  std::vector<int> heavy;            // ascending element ids
  std::vector<int> frequency_order;  // all elements ordered by (frequency, id)
};

enum class Phase { kBiased, kGreedy };

/// One record per covered element, in processing order.
struct TraceRecord {
  int element = 0;
  Phase phase = Phase::kBiased;
  int chosen_set = 0;
  int original_size = 0;  // cardinality of the chosen set in the input
  int residual_size = 0;  // cardinality seen by the rule at assignment time
};

struct AlgorithmTrace {
  std::vector<TraceRecord> records;
};

/// Number of light elements, ceil(delta * n), clamped to [0, n].
/// Throws std::domain_error unless 0 <= delta <= 1.
int light_count(int n, double delta);

SplitReport split_light_heavy(const SetSystem& system, double delta);

/// Two-phase covering heuristic. Each light element goes to a containing set
/// of maximum original cardinality. Heavy elements are then processed in
/// ascending id order; each goes to the containing set with the largest
/// residual, where a set's residual excludes all light elements and every
/// heavy element already assigned anywhere. Ties in both phases break toward
/// the smallest set id.
std::pair<CoverAssignment, AlgorithmTrace> biased_greedy(const SetSystem& system, double delta);

/// biased_greedy with delta = 0: every element is heavy.
std::pair<CoverAssignment, AlgorithmTrace> greedy(const SetSystem& system);

/// biased_greedy with delta = 1: every element is light.
std::pair<CoverAssignment, AlgorithmTrace> biased(const SetSystem& system);

struct ExactOptions {
  std::int64_t node_budget = 20'000'000;
};

struct ExactResult {
  CoverAssignment cover;
  double entropy = 0.0;
  bool certified = false;  // false when the node budget ran out
  std::int64_t nodes = 0;
};

/// Minimum-entropy cover by depth-first search over per-element set choices
/// with branch-and-bound pruning. Elements are branched in ascending id
/// order and candidate sets tried in ascending id order, so among optimal
/// covers the lexicographically smallest assignment vector is returned.
/// When the node budget runs out the best cover found so far is returned
/// with `certified` false.
ExactResult exact_min_entropy_cover(const SetSystem& system, const ExactOptions& options = {});

struct TheoremBound {
  double rhs = 0.0;
  double beta = 0.0;  // heavy fraction (n - ceil(delta n)) / n
};

/// rhs = ent_opt + log2 f - beta log2(beta / e); the middle term is zero
/// when beta = 0. Requires ent_opt >= 0, f >= 1, n >= 1, delta in [0, 1].
TheoremBound theorem_bound(double ent_opt, double f, double delta, int n);

/// A full check of the additive guarantee on one instance and delta, plus
/// the two nonnegative divergences that the bound's derivation discards.
/// `slack = rhs - ent_alg`, and `holds` means slack >= -1e-9.
struct BoundCertificate {
  double ent_alg = 0.0;
  double ent_opt = 0.0;
  double f = 1.0;
  double delta = 0.0;
  double beta = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  bool opt_certified = true;
  double div_alg_sizes = 0.0;     // D(algorithm classes || set-size distribution)
  double div_heavy_scaled = 0.0;  // beta * D(optimum heavy classes || optimum classes)
};

BoundCertificate certify(const SetSystem& system, double delta, const ExactOptions& options = {});

/// Variant reusing a precomputed exact optimum, e.g. across a delta grid.
BoundCertificate certify(const SetSystem& system, double delta, const ExactResult& opt);

struct BestDelta {
  int delta = 0;  // 0 (all greedy) or 1 (all biased)
  bool tie = false;
};

/// Picks the smaller additive guarantee, log2 f at delta = 1 against log2 e
/// at delta = 0. Within 1e-12 of f = e both match; the tie flag is set and
/// delta = 1 is reported. Requires f >= 1.
BestDelta best_delta(double f);

}  // namespace mesc
