#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mesc/core.hpp"
#include "mesc/generators.hpp"
#include "support/oracles.hpp"

using namespace mesc;

namespace {

SetSystem two_set_example() {
  SetSystem system;
  system.n = 4;
  system.sets = {{1, 2, 3}, {3, 4}};
  return system;
}

}  // namespace

TEST_CASE("validate accepts a well formed system") {
  const ValidationReport report = validate(two_set_example());
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("validate reports structural violations") {
  SetSystem system;
  system.n = 2;
  system.sets = {{1, 2}, {3}};
  auto report = validate(system);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations.size() == 1);
  CHECK(report.violations[0].find("out of range") != std::string::npos);

  system.sets = {{1}};
  report = validate(system);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations[0].find("uncovered") != std::string::npos);

  system.sets = {{1, 1}, {2}};
  report = validate(system);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations[0].find("duplicate") != std::string::npos);

  system.sets = {{2, 1}};
  report = validate(system);
  CHECK_FALSE(report.ok);

  system.sets = {};
  report = validate(system);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations[0].find("m = 0") != std::string::npos);

  system.n = 0;
  system.sets = {{1}};
  CHECK_FALSE(validate(system).ok);

  CHECK_THROWS_AS(require_valid(system), std::invalid_argument);
}

TEST_CASE("element_frequency counts containing sets") {
  const SetSystem system = two_set_example();
  CHECK(element_frequency(system, 1) == 1);
  CHECK(element_frequency(system, 3) == 2);
  CHECK(element_frequency(system, 4) == 1);
  CHECK_THROWS_AS(element_frequency(system, 0), std::out_of_range);
  CHECK_THROWS_AS(element_frequency(system, 5), std::out_of_range);
}

TEST_CASE("avg_frequency is total set mass over n") {
  CHECK(avg_frequency(two_set_example()) == doctest::Approx(1.25).epsilon(1e-15));
  SetSystem full;
  full.n = 3;
  full.sets = {{1, 2, 3}, {1, 2, 3}};
  CHECK(avg_frequency(full) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("avg_frequency of any valid system is at least 1") {
  std::mt19937_64 meta(7001);
  for (int trial = 0; trial < 50; ++trial) {
    GenSpec spec;
    spec.n = 1 + static_cast<int>(meta() % 12);
    spec.m = 1 + static_cast<int>(meta() % 5);
    spec.target_f = 1.0 + (static_cast<double>(meta() % 1000) / 999.0) * (spec.m - 1);
    spec.seed = meta();
    const SetSystem system = random_set_system(spec);
    REQUIRE(validate(system).ok);
    CHECK(avg_frequency(system) >= 1.0);
  }
}

TEST_CASE("entropy_of_sizes matches hand computed values") {
  const std::vector<int> sizes332 = {3, 3, 2};
  CHECK(entropy_of_sizes(sizes332, 8) == doctest::Approx(1.5612781244591328).epsilon(1e-15));
  const std::vector<int> sizes3221 = {3, 2, 2, 1};
  CHECK(entropy_of_sizes(sizes3221, 8) == doctest::Approx(1.9056390622295665).epsilon(1e-15));
  const std::vector<int> single = {4};
  CHECK(entropy_of_sizes(single, 4) == 0.0);
  const std::vector<int> uniform = {1, 1, 1, 1};
  CHECK(entropy_of_sizes(uniform, 4) == doctest::Approx(2.0).epsilon(1e-15));
  const std::vector<int> with_zero = {3, 0, 1};
  const std::vector<int> without_zero = {3, 1};
  CHECK(entropy_of_sizes(with_zero, 4) == entropy_of_sizes(without_zero, 4));
  CHECK_THROWS_AS(entropy_of_sizes(single, 0), std::invalid_argument);
}

TEST_CASE("from_assignment validates membership and builds the histogram") {
  const SetSystem system = two_set_example();
  const CoverAssignment cover = CoverAssignment::from_assignment(system, {1, 1, 1, 2});
  CHECK(cover.class_sizes == std::vector<int>{3, 1});
  CHECK(entropy_of_cover(cover, 4) == doctest::Approx(0.8112781244591328).epsilon(1e-15));

  CHECK_THROWS_AS(CoverAssignment::from_assignment(system, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CoverAssignment::from_assignment(system, {1, 1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(CoverAssignment::from_assignment(system, {2, 1, 1, 2}), std::invalid_argument);
}

TEST_CASE("distribution constructors enforce their invariants") {
  CHECK_NOTHROW(Distribution::from_weights({0.5, 0.5}));
  CHECK_THROWS_AS(Distribution::from_weights({0.6, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::from_weights({-0.1, 1.1}), std::invalid_argument);

  const std::vector<int> counts = {3, 0, 1};
  const Distribution d = Distribution::from_counts(counts);
  CHECK(d.weights[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(d.weights[1] == 0.0);
  const std::vector<int> zeros = {0, 0};
  CHECK_THROWS_AS(Distribution::from_counts(zeros), std::invalid_argument);
  const std::vector<int> negative = {-1, 2};
  CHECK_THROWS_AS(Distribution::from_counts(negative), std::invalid_argument);
}

TEST_CASE("kl_divergence matches a hand computed value and edge rules") {
  const Distribution p = Distribution::from_weights({0.75, 0.25});
  const Distribution q = Distribution::from_weights({0.5, 0.5});
  CHECK(kl_divergence(p, q) == doctest::Approx(0.18872187554086717).epsilon(1e-15));
  CHECK(kl_divergence(p, p) == 0.0);

  const Distribution narrow = Distribution::from_weights({1.0, 0.0});
  CHECK_NOTHROW(kl_divergence(narrow, q));
  CHECK_THROWS_AS(kl_divergence(q, narrow), std::domain_error);
  const Distribution longer = Distribution::from_weights({0.5, 0.25, 0.25});
  CHECK_THROWS_AS(kl_divergence(p, longer), std::invalid_argument);
}

TEST_CASE("kl_divergence is nonnegative and zero only at equality") {
  std::mt19937_64 meta(7002);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + meta() % 5;
    std::vector<int> a(k), b(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = static_cast<int>(meta() % 6);
      b[i] = 1 + static_cast<int>(meta() % 6);
    }
    if (std::all_of(a.begin(), a.end(), [](int v) { return v == 0; })) a[0] = 1;
    const Distribution p = Distribution::from_counts(a);
    const Distribution q = Distribution::from_counts(b);
    const double d = kl_divergence(p, q);
    CHECK(d >= 0.0);
    if (d <= 1e-12) {
      for (std::size_t i = 0; i < k; ++i)
        CHECK(std::abs(p.weights[i] - q.weights[i]) <= 1e-9);
    }
  }
}

TEST_CASE("entropy_decomposition reproduces the worked example") {
  const SetSystem system = two_set_example();
  const CoverAssignment cover = CoverAssignment::from_assignment(system, {1, 1, 1, 2});
  const EntropyDecomposition d = entropy_decomposition(system, cover);
  CHECK(d.size_term == doctest::Approx(-1.4387218755408671).epsilon(1e-12));
  CHECK(d.divergence_term == doctest::Approx(0.07192809488736231).epsilon(1e-9));
  CHECK(d.mass_term == doctest::Approx(2.321928094887362).epsilon(1e-12));
  CHECK(d.total == doctest::Approx(entropy_of_cover(cover, 4)).epsilon(1e-12));
}

TEST_CASE("entropy_decomposition identity holds on random covers") {
  std::mt19937_64 meta(7003);
  for (int trial = 0; trial < 100; ++trial) {
    GenSpec spec;
    spec.n = 2 + static_cast<int>(meta() % 10);
    spec.m = 2 + static_cast<int>(meta() % 5);
    spec.target_f = 1.0 + (static_cast<double>(meta() % 1000) / 999.0) * 2.0;
    spec.target_f = std::min(spec.target_f, static_cast<double>(spec.m));
    spec.seed = meta();
    const SetSystem system = random_set_system(spec);

    // Random valid cover: each element picks one of its containing sets.
    std::vector<int> assignment(static_cast<std::size_t>(spec.n));
    for (int u = 1; u <= spec.n; ++u) {
      std::vector<int> options;
      for (int i = 1; i <= system.set_count(); ++i)
        if (system.contains(i, u)) options.push_back(i);
      assignment[static_cast<std::size_t>(u) - 1] = options[meta() % options.size()];
    }
    const CoverAssignment cover = CoverAssignment::from_assignment(system, assignment);
    const EntropyDecomposition d = entropy_decomposition(system, cover);
    const double direct = entropy_of_cover(cover, spec.n);
    CHECK(std::abs(d.total - direct) <= 1e-9);
    CHECK(std::abs((d.size_term - d.divergence_term + d.mass_term) - direct) <= 1e-9);
    CHECK(d.divergence_term >= 0.0);
  }
}

TEST_CASE("instance files round trip") {
  const SetSystem system = two_set_example();
  std::ostringstream out;
  write_set_system(out, system);
  CHECK(out.str() == "MESC 1\n4 2\n1 2 3\n3 4\n");

  std::istringstream in(out.str());
  const SetSystem back = read_set_system(in);
  CHECK(back.n == system.n);
  CHECK(back.sets == system.sets);
}

TEST_CASE("instance files support empty sets") {
  std::istringstream in("MESC 1\n2 3\n1 2\n\n2\n");
  const SetSystem system = read_set_system(in);
  REQUIRE(system.set_count() == 3);
  CHECK(system.set_at(2).empty());
  std::ostringstream out;
  write_set_system(out, system);
  CHECK(out.str() == "MESC 1\n2 3\n1 2\n\n2\n");
}

TEST_CASE("instance parser rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_set_system(in), ParseError);
  };
  reject("");
  reject("MESC 2\n4 2\n1 2 3\n3 4\n");
  reject("MESC 1\n4\n1 2 3\n3 4\n");
  reject("MESC 1\n4 2\n1 2 3\n");            // missing set line
  reject("MESC 1\n4 2\n1 2 3\n3 4\n5\n");    // trailing content
  reject("MESC 1\n4 2\n1 2 5\n3 4\n");       // element out of range
  reject("MESC 1\n4 2\n1 3 2\n3 4\n");       // not ascending
  reject("MESC 1\n4 2\n1 2 2\n3 4\n");       // duplicate
  reject("MESC 1\n4 2\n1 2\n2 4\n");         // element 3 uncovered
  reject("MESC 1\n4 2\n1 2 3\nx 4\n");       // non integer token
  reject("MESC 1\n0 1\n\n");                 // empty ground set
}

TEST_CASE("random covers agree with the naive exhaustive oracle dimensions") {
  // Smoke level guard that oracle helpers themselves behave.
  const SetSystem system = two_set_example();
  const auto naive = oracles::naive_min_entropy_cover(system);
  CHECK(naive.entropy == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  CHECK(naive.assignment == std::vector<int>{1, 1, 1, 2});
  CHECK(oracles::choice_space(system, 1000) == 2);
}
