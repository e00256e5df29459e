#include "mesc/core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mesc {
namespace {

std::vector<int> set_sizes(const SetSystem& system) {
  std::vector<int> sizes;
  sizes.reserve(system.sets.size());
  for (const auto& s : system.sets) sizes.push_back(static_cast<int>(s.size()));
  return sizes;
}

}  // namespace

bool SetSystem::contains(int set_id, int element) const {
  const auto& s = set_at(set_id);
  return std::binary_search(s.begin(), s.end(), element);
}

ValidationReport validate(const SetSystem& system) {
  ValidationReport report;
  auto flag = [&report](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  if (system.n < 1) flag("ground set is empty (n = " + std::to_string(system.n) + ")");
  if (system.sets.empty()) flag("no member sets (m = 0)");
  if (!report.ok) return report;

  std::vector<char> covered(static_cast<std::size_t>(system.n), 0);
  for (int i = 1; i <= system.set_count(); ++i) {
    const auto& s = system.set_at(i);
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      const int u = s[pos];
      if (u < 1 || u > system.n) {
        flag("set " + std::to_string(i) + ": element " + std::to_string(u) +
             " out of range [1, " + std::to_string(system.n) + "]");
        continue;
      }
      covered[static_cast<std::size_t>(u) - 1] = 1;
      if (pos > 0 && s[pos] <= s[pos - 1]) {
        flag(s[pos] == s[pos - 1]
                 ? "set " + std::to_string(i) + ": duplicate element " + std::to_string(u)
                 : "set " + std::to_string(i) + ": elements not ascending at position " +
                       std::to_string(pos + 1));
      }
    }
  }
  for (int u = 1; u <= system.n; ++u) {
    if (!covered[static_cast<std::size_t>(u) - 1])
      flag("element " + std::to_string(u) + " is uncovered");
  }
  return report;
}

void require_valid(const SetSystem& system) {
  const ValidationReport report = validate(system);
  if (report.ok) return;
  std::string msg = "invalid set system: " + report.violations.front();
  if (report.violations.size() > 1)
    msg += " (+" + std::to_string(report.violations.size() - 1) + " more)";
  throw std::invalid_argument(msg);
}

int element_frequency(const SetSystem& system, int u) {
  if (u < 1 || u > system.n)
    throw std::out_of_range("element " + std::to_string(u) + " out of range [1, " +
                            std::to_string(system.n) + "]");
  int count = 0;
  for (int i = 1; i <= system.set_count(); ++i)
    if (system.contains(i, u)) ++count;
  return count;
}

double avg_frequency(const SetSystem& system) {
  if (system.n < 1) throw std::invalid_argument("avg_frequency: empty ground set");
  long long mass = 0;
  for (const auto& s : system.sets) mass += static_cast<long long>(s.size());
  return static_cast<double>(mass) / static_cast<double>(system.n);
}

double entropy_of_sizes(std::span<const int> class_sizes, int n) {
  if (n < 1) throw std::invalid_argument("entropy_of_sizes: n must be positive");
  double h = 0.0;
  for (const int s : class_sizes) {
    if (s <= 0) continue;
    const double p = static_cast<double>(s) / static_cast<double>(n);
    h -= p * std::log2(p);
  }
  return h;
}

double entropy_of_cover(const CoverAssignment& cover, int n) {
  return entropy_of_sizes(cover.class_sizes, n);
}

CoverAssignment CoverAssignment::from_assignment(const SetSystem& system,
                                                 std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != system.n)
    throw std::invalid_argument("assignment length " + std::to_string(assignment.size()) +
                                " does not match n = " + std::to_string(system.n));
  CoverAssignment cover;
  cover.class_sizes.assign(system.sets.size(), 0);
  for (int u = 1; u <= system.n; ++u) {
    const int i = assignment[static_cast<std::size_t>(u) - 1];
    if (i < 1 || i > system.set_count())
      throw std::invalid_argument("element " + std::to_string(u) + " assigned to set " +
                                  std::to_string(i) + " outside [1, " +
                                  std::to_string(system.set_count()) + "]");
    if (!system.contains(i, u))
      throw std::invalid_argument("element " + std::to_string(u) + " assigned to set " +
                                  std::to_string(i) + " which does not contain it");
    ++cover.class_sizes[static_cast<std::size_t>(i) - 1];
  }
  cover.assignment = std::move(assignment);
  return cover;
}

Distribution Distribution::from_weights(std::vector<double> weights) {
  double total = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0))
      throw std::invalid_argument("distribution weight " + std::to_string(w) + " is negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("distribution weights sum to " + std::to_string(total));
  Distribution d;
  d.weights = std::move(weights);
  return d;
}

Distribution Distribution::from_counts(std::span<const int> counts) {
  long long total = 0;
  for (const int c : counts) {
    if (c < 0) throw std::invalid_argument("negative count in distribution");
    total += c;
  }
  if (total <= 0) throw std::invalid_argument("distribution counts sum to zero");
  Distribution d;
  d.weights.reserve(counts.size());
  for (const int c : counts)
    d.weights.push_back(static_cast<double>(c) / static_cast<double>(total));
  return d;
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  if (p.weights.size() != q.weights.size())
    throw std::invalid_argument("kl_divergence: length mismatch " +
                                std::to_string(p.weights.size()) + " vs " +
                                std::to_string(q.weights.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < p.weights.size(); ++i) {
    const double pi = p.weights[i];
    if (pi <= 0.0) continue;
    const double qi = q.weights[i];
    if (qi <= 0.0)
      throw std::domain_error("kl_divergence: p has mass at index " + std::to_string(i + 1) +
                              " where q has none");
    sum += pi * std::log2(pi / qi);
  }
  // Rounding can push a mathematically zero divergence a hair negative.
  if (sum < 0.0 && sum > -1e-12) sum = 0.0;
  return sum;
}

EntropyDecomposition entropy_decomposition(const SetSystem& system, const CoverAssignment& cover) {
  require_valid(system);
  if (static_cast<int>(cover.class_sizes.size()) != system.set_count())
    throw std::invalid_argument("cover has " + std::to_string(cover.class_sizes.size()) +
                                " classes for " + std::to_string(system.set_count()) + " sets");
  const std::vector<int> sizes = set_sizes(system);
  const double n = static_cast<double>(system.n);
  long long mass = std::accumulate(sizes.begin(), sizes.end(), 0LL);

  EntropyDecomposition d;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int c = cover.class_sizes[i];
    if (c <= 0) continue;
    d.size_term -= (static_cast<double>(c) / n) * std::log2(static_cast<double>(sizes[i]));
  }
  d.divergence_term =
      kl_divergence(Distribution::from_counts(cover.class_sizes), Distribution::from_counts(sizes));
  d.mass_term = std::log2(static_cast<double>(mass));
  d.total = d.size_term - d.divergence_term + d.mass_term;
  return d;
}

namespace {

long long parse_count(const std::string& token, const char* what, long long lo, long long hi) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not an integer: '" + token + "'");
  }
  if (used != token.size())
    throw ParseError(std::string(what) + ": trailing characters in '" + token + "'");
  if (value < lo || value > hi)
    throw ParseError(std::string(what) + ": " + std::to_string(value) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) fields.push_back(tok);
  return fields;
}

}  // namespace

SetSystem read_set_system(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input, expected 'MESC 1' magic line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "MESC 1") throw ParseError("bad magic line '" + line + "', expected 'MESC 1'");

  if (!std::getline(in, line)) throw ParseError("missing '<n> <m>' header line");
  auto header = split_fields(line);
  if (header.size() != 2) throw ParseError("header line must be '<n> <m>', got '" + line + "'");
  const int n = static_cast<int>(parse_count(header[0], "header n", 1, 1'000'000'000));
  const int m = static_cast<int>(parse_count(header[1], "header m", 1, 1'000'000'000));

  SetSystem system;
  system.n = n;
  system.sets.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(m) + " set lines, found " +
                       std::to_string(i - 1));
    std::vector<int> set;
    int prev = 0;
    for (const auto& tok : split_fields(line)) {
      const int u =
          static_cast<int>(parse_count(tok, ("set " + std::to_string(i)).c_str(), 1, n));
      if (u <= prev)
        throw ParseError("set " + std::to_string(i) + ": element ids must be strictly ascending");
      set.push_back(u);
      prev = u;
    }
    system.sets.push_back(std::move(set));
  }
  while (std::getline(in, line)) {
    if (!split_fields(line).empty())
      throw ParseError("trailing content after the last set line: '" + line + "'");
  }

  const ValidationReport report = validate(system);
  if (!report.ok) throw ParseError("instance invalid: " + report.violations.front());
  return system;
}

SetSystem read_set_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  return read_set_system(in);
}

void write_set_system(std::ostream& out, const SetSystem& system) {
  require_valid(system);
  out << "MESC 1\n" << system.n << ' ' << system.set_count() << '\n';
  for (const auto& s : system.sets) {
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      if (pos > 0) out << ' ';
      out << s[pos];
    }
    out << '\n';
  }
}

void write_set_system_file(const std::string& path, const SetSystem& system) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_set_system(out, system);
  if (!out) throw ParseError("failed while writing '" + path + "'");
}

}  // namespace mesc
