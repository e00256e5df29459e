#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mesc {

/// Thrown when an instance or graph file does not conform to its format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set-cover instance: ground set {1..n} plus m member sets.
///
/// Member sets are sorted, duplicate-free lists of 1-based element ids.
/// Empty member sets are legal but never chosen by any algorithm.
struct SetSystem {
  int n = 0;
  std::vector<std::vector<int>> sets;

  int set_count() const { return static_cast<int>(sets.size()); }
  /// 1-based set accessor.
  const std::vector<int>& set_at(int i) const { return sets[static_cast<std::size_t>(i) - 1]; }
  bool contains(int set_id, int element) const;
};

/// Structural check outcome; `ok` iff `violations` is empty.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// A cover: every element assigned to one set that contains it.
struct CoverAssignment {
  std::vector<int> assignment;   // element u (1-based) -> set id in 1..m
  std::vector<int> class_sizes;  // per set id: number of elements assigned to it

  /// Builds the histogram and checks membership; throws std::invalid_argument
  /// when some element is assigned to a set that does not contain it.
  static CoverAssignment from_assignment(const SetSystem& system, std::vector<int> assignment);
};

/// Nonnegative weights summing to 1 within 1e-12.
struct Distribution {
  std::vector<double> weights;

  static Distribution from_weights(std::vector<double> weights);
  static Distribution from_counts(std::span<const int> counts);
};

/// Three-term split of a cover's entropy against the set-size mass:
/// total = size_term - divergence_term + mass_term, an exact identity.
struct EntropyDecomposition {
  double size_term = 0.0;        // -sum_i p_i log2 |P_i|
  double divergence_term = 0.0;  // D(class distribution || set-size distribution)
  double mass_term = 0.0;        // log2 sum_i |P_i|
  double total = 0.0;
};

ValidationReport validate(const SetSystem& system);

/// Throws std::invalid_argument listing the violations of an invalid system.
void require_valid(const SetSystem& system);

/// Number of member sets containing element u; at least 1 for valid systems.
/// Throws std::out_of_range unless 1 <= u <= n.
int element_frequency(const SetSystem& system, int u);

/// Average element frequency f = (sum of member set sizes) / n.
double avg_frequency(const SetSystem& system);

/// Shannon entropy in bits of a class-size histogram over n elements,
/// with 0 log2 0 := 0. Result lies in [0, log2 n].
double entropy_of_sizes(std::span<const int> class_sizes, int n);

double entropy_of_cover(const CoverAssignment& cover, int n);

/// D(p || q) in bits; 0 log2 (0/q) := 0. Throws std::invalid_argument on a
/// length mismatch and std::domain_error when p puts mass where q has none.
double kl_divergence(const Distribution& p, const Distribution& q);

EntropyDecomposition entropy_decomposition(const SetSystem& system, const CoverAssignment& cover);

/// Plain-text instance format (LF line endings):
///   MESC 1
///   <n> <m>
///   m lines of ascending element ids; an empty line is an empty set
SetSystem read_set_system(std::istream& in);
SetSystem read_set_system_file(const std::string& path);
void write_set_system(std::ostream& out, const SetSystem& system);
void write_set_system_file(const std::string& path, const SetSystem& system);

}  // namespace mesc
