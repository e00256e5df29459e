#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mesc/core.hpp"

namespace mesc {

/// Thrown when enumerating maximal independent sets would exceed the cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 1..n; edges stored sorted as u < v.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  /// Normalizes endpoint order, sorts, and validates (no self loops, no
  /// duplicates, endpoints in range). Throws std::invalid_argument.
  static Graph create(int n, std::vector<std::pair<int, int>> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
  int max_degree() const;
  /// Adjacency lists indexed 0..n-1, each sorted ascending.
  std::vector<std::vector<int>> adjacency() const;
};

/// Vertex coloring with contiguous color ids 1..k.
struct Coloring {
  std::vector<int> color;  // vertex u (1-based) -> color id

  int color_count() const;
  /// Vertices per color id, each list ascending.
  std::vector<std::vector<int>> classes() const;
  std::vector<int> class_sizes() const;
};

bool is_proper(const Graph& g, const Coloring& c);

/// Shannon entropy in bits of the color class sizes.
double coloring_entropy(const Coloring& c);

/// Census behind the closed-form f for graphs whose largest independent
/// set has at most 3 vertices. Counts refer to the complement graph.
struct Alpha3Stats {
  long long isolated = 0;     // complement vertices with no complement edge
  long long plain_edges = 0;  // complement edges lying in no complement triangle
  long long triangles = 0;    // complement triangles
  double f = 0.0;             // (isolated + 2*plain_edges + 3*triangles) / n
};

Graph complement(const Graph& g);

inline constexpr std::size_t kDefaultMisCap = 100'000;

/// All inclusion-maximal independent sets, each sorted ascending, the list
/// in lexicographic order. Throws CapExceededError past `cap` sets.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g,
                                                       std::size_t cap = kDefaultMisCap);

/// True when the graph has an independent set of k vertices.
bool has_independent_set(const Graph& g, int k);

/// The covering instance whose member sets are the maximal independent sets.
SetSystem to_set_cover(const Graph& g, std::size_t cap = kDefaultMisCap);

/// Closed-form average frequency for graphs with independence number <= 3.
/// Throws std::domain_error when some independent set has 4 vertices.
Alpha3Stats f_alpha3(const Graph& g);

/// Runs the covering heuristic on the independent-set instance and converts
/// the result back to a proper coloring with first-use color ids.
Coloring biased_coloring(const Graph& g, double delta, std::size_t cap = kDefaultMisCap);

/// Repeatedly merges the pair of color classes whose union is independent
/// and whose merge decreases entropy the most, until no merge helps.
Coloring heuristic_merge_colors(const Graph& g, const Coloring& c);

/// Recolors one maximum independent set (lexicographically smallest among
/// the largest) with a fresh color when that does not raise entropy.
Coloring heuristic_largest_is_first(const Graph& g, const Coloring& c,
                                    std::size_t cap = kDefaultMisCap);

/// ent_opt + log2(max_degree + 2) + log2(f / 3) where f comes from the
/// independent-set instance. May fall below the optimum entropy on graphs
/// with many isolated vertices; callers should treat negative or tiny
/// values as vacuous rather than as a violated guarantee.
double degree_corollary_bound(const Graph& g, double ent_opt, std::size_t cap = kDefaultMisCap);

/// Guarantee shift when an eta-approximate entropy oracle replaces the
/// exact optimum: base_rhs + log2(eta). Requires eta >= 1.
double approx_oracle_bound(double eta, double base_rhs);

/// Plain-text graph format (LF line endings):
///   GRAPH 1
///   <n> <e>
///   e lines "u v" with u < v
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace mesc
