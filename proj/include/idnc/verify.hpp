#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "idnc/graph.hpp"
#include "idnc/random.hpp"
#include "idnc/state.hpp"
#include "idnc/strategies.hpp"

namespace idnc::verify {

/// Outcome of one oracle suite.
struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst_error = 0.0;  // largest relative (or absolute) discrepancy seen
  double seconds = 0.0;
  std::string detail;

  bool passed() const { return failures == 0 && cases > 0; }
};

void print_report(std::ostream& out, const SuiteReport& report);

// Brute-force oracles, independent of the closed forms.

/// Edge count by testing every vertex pair against the adjacency rules.
std::uint64_t brute_edge_count(const FeedbackState& state);

/// Wants sets as bit masks (bit j-1 = packet j), N <= 32.
std::uint64_t brute_edge_count(const std::vector<std::uint32_t>& wants);
/// Sum of degrees over the vertices of receiver i (0-based).
std::uint64_t brute_degree_sum(const std::vector<std::uint32_t>& wants, std::size_t i);

/// All maximal cliques (Bron-Kerbosch with pivoting), as sorted vertex indices.
std::vector<std::vector<std::size_t>> maximal_cliques(const IdncGraph& graph);

/// Uniformly random subset of {0..n-1} of the given size, as a mask.
std::uint32_t random_subset(Rng& rng, int n, int size);

/// Random state: each packet wanted independently with a per-state probability.
FeedbackState random_state(Rng& rng, int num_receivers, int num_packets);

/// Maximum weight clique by enumerating every vertex subset (|V| <= 20).
/// Same tie rules as the exact solver.
std::vector<std::size_t> brute_max_weight_clique(const IdncGraph& graph,
                                                 const std::vector<double>& weights);

// Suites. Sizes default to the acceptance levels; callers may shrink them.

SuiteReport edge_formula_suite(std::size_t states = 10'000, int max_m = 8, int max_n = 8,
                               std::uint64_t seed = 11);

SuiteReport evolution_suite(std::size_t states = 1'000, int max_m = 6, int max_n = 6,
                            std::uint64_t seed = 12);

SuiteReport dominance_suite(int max_n = 5);

SuiteReport expectation_monte_carlo_suite(std::size_t configs = 20,
                                          std::size_t samples = 100'000, int max_m = 6,
                                          int max_n = 12, double tolerance = 0.01,
                                          std::uint64_t seed = 13);

SuiteReport expectation_exhaustive_suite(int max_m = 3, int max_n = 8,
                                         double tolerance = 1e-9, std::uint64_t seed = 14);

/// How the Monte Carlo evolution oracle picks the targeted packets.
enum class TargetSampling {
  /// One distinct packet per targeted receiver, every pair cross-held (a C2
  /// clique); the whole state is redrawn until such a clique exists.
  kConditionedClique,
  /// Each targeted receiver's packet uniform in its own Wants set, no
  /// clique requirement.
  kIndependent,
};

/// Expected degree and edge-set evolution against Monte Carlo: uniform Wants
/// sets, targeted packets per `sampling`, Bernoulli receptions. Degrees are
/// compared only where defined, i.e. not for a targeted receiver with psi = 1.
SuiteReport evolution_monte_carlo_suite(std::size_t configs = 8,
                                        std::size_t samples = 1'000'000, int max_m = 4,
                                        int max_n = 10, double tolerance = 0.05,
                                        std::uint64_t seed = 15,
                                        TargetSampling sampling =
                                            TargetSampling::kConditionedClique);

SuiteReport degree_ordering_suite(std::size_t instances = 10'000, int max_m = 10,
                                  int max_n = 20, std::uint64_t seed = 16);

/// Instances split evenly between i in T and i outside T.
SuiteReport targeting_gain_suite(std::size_t instances = 10'000, int max_m = 10,
                                 int max_n = 20, std::uint64_t seed = 17);

SuiteReport exact_solver_suite(std::size_t graphs = 500, std::size_t max_vertices = 14,
                               std::uint64_t seed = 18);

struct VerifyOptions {
  double scale = 1.0;  // multiplies every case / sample count
  std::uint64_t seed = 1;
};

std::vector<SuiteReport> run_all(const VerifyOptions& options = {});

}  // namespace idnc::verify
