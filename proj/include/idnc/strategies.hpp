#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idnc/graph.hpp"
#include "idnc/plan.hpp"
#include "idnc/random.hpp"
#include "idnc/state.hpp"

namespace idnc {

enum class StrategyKind {
  kRandom,              // rnd
  kMaxClique,           // mc: unit weights
  kReceptionWeighted,   // mwc-r: w_ij = q_i
  kMostWantedPacket,    // mowps: w_ij = |Omega_j|^n
  kWorstReceiver,       // wort: w_ij = (psi_i / q_i)^n
};

enum class Solver { kExact, kGreedy };

std::string_view to_string(StrategyKind kind);
std::string_view to_string(Solver solver);
std::optional<StrategyKind> parse_strategy(std::string_view name);
std::optional<Solver> parse_solver(std::string_view name);

inline constexpr StrategyKind kAllStrategies[] = {
    StrategyKind::kRandom, StrategyKind::kMaxClique, StrategyKind::kReceptionWeighted,
    StrategyKind::kMostWantedPacket, StrategyKind::kWorstReceiver};

struct StrategyConfig {
  StrategyKind kind = StrategyKind::kWorstReceiver;
  Solver solver = Solver::kGreedy;
  double bias = 1.0;                    // biasing exponent n
  std::size_t exact_size_limit = 60;    // max |V| accepted by the exact solver

  std::string label() const;
};

struct VertexWeights {
  std::vector<double> base;      // w_v per vertex index
  std::vector<double> modified;  // w_v * sum of neighbour weights, on the full graph
  std::vector<int> demand;       // |Omega_j|, entry j-1 belongs to packet j
};

/// Sum over neighbours u of v of w_u, times w_v.
std::vector<double> modified_weights(const IdncGraph& graph, const std::vector<double>& base);

/// Weights for `kind`; random selection gets unit weights (unused).
VertexWeights assign_weights(StrategyKind kind, const IdncGraph& graph,
                             const FeedbackState& state, double bias = 1.0);

class ExactSolverLimitError : public std::length_error {
 public:
  ExactSolverLimitError(std::size_t vertices, std::size_t limit);
};

/// Maximum weight clique by branch and bound. Ties go to the larger clique,
/// then to the lexicographically smallest vertex list. Throws
/// ExactSolverLimitError above `size_limit` vertices.
TransmissionPlan select_exact(const IdncGraph& graph, const VertexWeights& weights,
                              std::size_t size_limit = 60);

/// Repeatedly adds the candidate with the largest adjacency-modified weight
/// (ties: larger base weight, then lowest vertex index) and restricts the
/// candidates to its neighbours. Output is a maximal clique.
TransmissionPlan select_greedy(const IdncGraph& graph, const VertexWeights& weights);

/// Grows a maximal clique by uniformly random addable vertices.
TransmissionPlan select_random(const IdncGraph& graph, Rng& rng);

/// Dispatches on the configured strategy and solver.
TransmissionPlan select_plan(const StrategyConfig& config, const IdncGraph& graph,
                             const FeedbackState& state, Rng& rng);

double plan_weight(const IdncGraph& graph, const VertexWeights& weights,
                   const TransmissionPlan& plan);

}  // namespace idnc
