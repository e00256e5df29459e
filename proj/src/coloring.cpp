#include "mesc/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mesc/solvers.hpp"

namespace mesc {
namespace {

using AdjMatrix = std::vector<std::vector<char>>;

AdjMatrix adjacency_matrix(const Graph& g) {
  AdjMatrix adj(static_cast<std::size_t>(g.n),
                std::vector<char>(static_cast<std::size_t>(g.n), 0));
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(v) - 1] = 1;
    adj[static_cast<std::size_t>(v) - 1][static_cast<std::size_t>(u) - 1] = 1;
  }
  return adj;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

Coloring coloring_from_classes(int n, const std::vector<std::vector<int>>& classes) {
  Coloring c;
  c.color.assign(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    ++next;
    for (const int v : cls) c.color[static_cast<std::size_t>(v) - 1] = next;
  }
  return c;
}

void require_proper(const Graph& g, const Coloring& c, const char* who) {
  if (!is_proper(g, c))
    throw std::invalid_argument(std::string(who) + ": input coloring is not proper");
}

}  // namespace

Graph Graph::create(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") outside vertex range [1, " + std::to_string(n) + "]");
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                std::to_string(dup->second) + ")");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u) - 1];
    ++deg[static_cast<std::size_t>(v) - 1];
  }
  return deg;
}

int Graph::max_degree() const {
  const std::vector<int> deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u) - 1].push_back(v);
    adj[static_cast<std::size_t>(v) - 1].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

int Coloring::color_count() const {
  int k = 0;
  for (const int c : color) k = std::max(k, c);
  return k;
}

std::vector<std::vector<int>> Coloring::classes() const {
  std::vector<std::vector<int>> result(static_cast<std::size_t>(color_count()));
  for (std::size_t i = 0; i < color.size(); ++i) {
    const int c = color[i];
    if (c < 1)
      throw std::invalid_argument("vertex " + std::to_string(i + 1) + " is uncolored");
    result[static_cast<std::size_t>(c) - 1].push_back(static_cast<int>(i) + 1);
  }
  return result;
}

std::vector<int> Coloring::class_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(color_count()), 0);
  for (const int c : color) {
    if (c < 1) throw std::invalid_argument("coloring has an uncolored vertex");
    ++sizes[static_cast<std::size_t>(c) - 1];
  }
  return sizes;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.n) return false;
  for (const int col : c.color)
    if (col < 1) return false;
  for (const auto& [u, v] : g.edges)
    if (c.color[static_cast<std::size_t>(u) - 1] == c.color[static_cast<std::size_t>(v) - 1])
      return false;
  return true;
}

double coloring_entropy(const Coloring& c) {
  return entropy_of_sizes(c.class_sizes(), static_cast<int>(c.color.size()));
}

Graph complement(const Graph& g) {
  const AdjMatrix adj = adjacency_matrix(g);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= g.n; ++u)
    for (int v = u + 1; v <= g.n; ++v)
      if (!adj[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(v) - 1])
        edges.emplace_back(u, v);
  return Graph::create(g.n, std::move(edges));
}

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g, std::size_t cap) {
  // Maximal independent sets of g are exactly the maximal cliques of its
  // complement; enumerate those with Bron-Kerbosch and pivoting.
  const Graph comp = complement(g);
  const AdjMatrix adj = adjacency_matrix(comp);
  std::vector<std::vector<int>> results;

  auto adjacent = [&adj](int a, int b) {
    return adj[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] != 0;
  };

  std::vector<int> r;
  auto bk = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
    if (p.empty() && x.empty()) {
      if (results.size() >= cap)
        throw CapExceededError("maximal independent set count exceeds cap " +
                               std::to_string(cap));
      std::vector<int> found = r;
      std::sort(found.begin(), found.end());
      results.push_back(std::move(found));
      return;
    }
    int pivot = 0;
    std::size_t pivot_score = 0;
    auto consider = [&](int u) {
      std::size_t score = 0;
      for (const int w : p)
        if (adjacent(u, w)) ++score;
      if (pivot == 0 || score > pivot_score) {
        pivot = u;
        pivot_score = score;
      }
    };
    for (const int u : p) consider(u);
    for (const int u : x) consider(u);

    std::vector<int> candidates;
    for (const int v : p)
      if (!adjacent(pivot, v)) candidates.push_back(v);

    for (const int v : candidates) {
      std::vector<int> np, nx;
      for (const int w : p)
        if (adjacent(v, w)) np.push_back(w);
      for (const int w : x)
        if (adjacent(v, w)) nx.push_back(w);
      r.push_back(v);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  };

  std::vector<int> p(static_cast<std::size_t>(g.n));
  for (int v = 1; v <= g.n; ++v) p[static_cast<std::size_t>(v) - 1] = v;
  bk(bk, std::move(p), {});

  std::sort(results.begin(), results.end());
  return results;
}

bool has_independent_set(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.n) return false;
  const AdjMatrix adj = adjacency_matrix(g);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = start; v <= g.n; ++v) {
      if (g.n - v + 1 < k - static_cast<int>(chosen.size())) return false;
      bool ok = true;
      for (const int u : chosen) {
        if (adj[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(v) - 1]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 1);
}

SetSystem to_set_cover(const Graph& g, std::size_t cap) {
  SetSystem system;
  system.n = g.n;
  system.sets = maximal_independent_sets(g, cap);
  return system;
}

Alpha3Stats f_alpha3(const Graph& g) {
  if (has_independent_set(g, 4))
    throw std::domain_error("f_alpha3: independence number exceeds 3");
  const Graph comp = complement(g);
  const AdjMatrix adj = adjacency_matrix(comp);
  const std::vector<int> deg = comp.degrees();

  Alpha3Stats stats;
  for (const int d : deg)
    if (d == 0) ++stats.isolated;

  for (const auto& [u, v] : comp.edges) {
    bool in_triangle = false;
    for (int w = 1; w <= g.n; ++w) {
      if (w == u || w == v) continue;
      if (adj[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(w) - 1] &&
          adj[static_cast<std::size_t>(v) - 1][static_cast<std::size_t>(w) - 1]) {
        in_triangle = true;
        // Count each triangle once, at its lexicographically first edge.
        if (w > v) ++stats.triangles;
      }
    }
    if (!in_triangle) ++stats.plain_edges;
  }
  stats.f = static_cast<double>(stats.isolated + 2 * stats.plain_edges + 3 * stats.triangles) /
            static_cast<double>(g.n);
  return stats;
}

Coloring biased_coloring(const Graph& g, double delta, std::size_t cap) {
  const SetSystem system = to_set_cover(g, cap);
  const auto [cover, trace] = biased_greedy(system, delta);
  Coloring c;
  c.color.assign(static_cast<std::size_t>(g.n), 0);
  std::vector<int> remap(static_cast<std::size_t>(system.set_count()) + 1, 0);
  int next = 0;
  for (int v = 1; v <= g.n; ++v) {
    const int set_id = cover.assignment[static_cast<std::size_t>(v) - 1];
    auto& mapped = remap[static_cast<std::size_t>(set_id)];
    if (mapped == 0) mapped = ++next;
    c.color[static_cast<std::size_t>(v) - 1] = mapped;
  }
  return c;
}

Coloring heuristic_merge_colors(const Graph& g, const Coloring& c) {
  require_proper(g, c, "heuristic_merge_colors");
  const AdjMatrix adj = adjacency_matrix(g);
  std::vector<std::vector<int>> classes = c.classes();

  auto independent_union = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (const int u : a)
      for (const int v : b)
        if (adj[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(v) - 1]) return false;
    return true;
  };

  for (;;) {
    double best_gain = 0.0;
    std::size_t best_a = 0, best_b = 0;
    bool found = false;
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        if (!independent_union(classes[a], classes[b])) continue;
        const double sa = static_cast<double>(classes[a].size());
        const double sb = static_cast<double>(classes[b].size());
        // Entropy drop of the merge, scaled by n; always positive.
        const double gain = xlog2x(sa + sb) - xlog2x(sa) - xlog2x(sb);
        if (!found || gain > best_gain + 1e-15) {
          best_gain = gain;
          best_a = a;
          best_b = b;
          found = true;
        }
      }
    }
    if (!found) break;
    auto& target = classes[best_a];
    target.insert(target.end(), classes[best_b].begin(), classes[best_b].end());
    std::sort(target.begin(), target.end());
    classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(best_b));
  }
  return coloring_from_classes(g.n, classes);
}

Coloring heuristic_largest_is_first(const Graph& g, const Coloring& c, std::size_t cap) {
  require_proper(g, c, "heuristic_largest_is_first");
  const std::vector<std::vector<int>> mis = maximal_independent_sets(g, cap);
  std::size_t best_size = 0;
  for (const auto& s : mis) best_size = std::max(best_size, s.size());
  const auto chosen_it =
      std::find_if(mis.begin(), mis.end(), [&](const auto& s) { return s.size() == best_size; });
  const std::vector<int>& chosen = *chosen_it;

  std::vector<char> in_chosen(static_cast<std::size_t>(g.n) + 1, 0);
  for (const int v : chosen) in_chosen[static_cast<std::size_t>(v)] = 1;

  std::vector<std::vector<int>> classes;
  for (const auto& cls : c.classes()) {
    std::vector<int> rest;
    for (const int v : cls)
      if (!in_chosen[static_cast<std::size_t>(v)]) rest.push_back(v);
    if (!rest.empty()) classes.push_back(std::move(rest));
  }
  classes.push_back(chosen);

  const Coloring candidate = coloring_from_classes(g.n, classes);
  if (coloring_entropy(candidate) <= coloring_entropy(c) + 1e-12) return candidate;
  return c;
}

double degree_corollary_bound(const Graph& g, double ent_opt, std::size_t cap) {
  if (!(ent_opt >= 0.0))
    throw std::domain_error("ent_opt = " + std::to_string(ent_opt) + " must be >= 0");
  const double f = avg_frequency(to_set_cover(g, cap));
  return ent_opt + std::log2(static_cast<double>(g.max_degree()) + 2.0) + std::log2(f / 3.0);
}

double approx_oracle_bound(double eta, double base_rhs) {
  if (!(eta >= 1.0))
    throw std::domain_error("eta = " + std::to_string(eta) + " must be >= 1");
  return base_rhs + std::log2(eta);
}

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input, expected 'GRAPH 1' magic line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "GRAPH 1") throw ParseError("bad magic line '" + line + "', expected 'GRAPH 1'");

  if (!std::getline(in, line)) throw ParseError("missing '<n> <e>' header line");
  std::istringstream header(line);
  long long n = 0, e = 0;
  std::string extra;
  if (!(header >> n >> e) || (header >> extra))
    throw ParseError("header line must be '<n> <e>', got '" + line + "'");
  if (n < 1) throw ParseError("vertex count must be positive, got " + std::to_string(n));
  if (e < 0) throw ParseError("edge count must be nonnegative, got " + std::to_string(e));

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (long long i = 1; i <= e; ++i) {
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(e) + " edge lines, found " +
                       std::to_string(i - 1));
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      throw ParseError("edge line " + std::to_string(i) + " must be 'u v', got '" + line + "'");
    if (u < 1 || v > n || u >= v)
      throw ParseError("edge line " + std::to_string(i) + ": need 1 <= u < v <= " +
                       std::to_string(n));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  while (std::getline(in, line)) {
    std::istringstream rest(line);
    if (rest >> extra) throw ParseError("trailing content after the last edge line: '" + line + "'");
  }

  try {
    return Graph::create(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "GRAPH 1\n" << g.n << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_graph(out, g);
  if (!out) throw ParseError("failed while writing '" + path + "'");
}

}  // namespace mesc
