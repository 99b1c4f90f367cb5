#pragma once

#include <span>
#include <vector>

#include "idnc/plan.hpp"
#include "idnc/state.hpp"

namespace idnc {

/// Feedback-set sizes only; packet identities are treated as uniformly random.
/// Vector entry r-1 belongs to receiver r.
struct Cardinalities {
  int num_packets = 1;
  std::vector<int> wants;              // psi
  std::vector<int> has;                // rho
  std::vector<double> reception_probs; // q

  /// Throws std::invalid_argument unless every packet is wanted or held.
  static Cardinalities from_state(const FeedbackState& state);
  /// rho = N - psi; missing q defaults to 1.
  static Cardinalities from_wants(int num_packets, std::vector<int> wants,
                                  std::vector<double> reception_probs = {});

  int num_receivers() const { return static_cast<int>(wants.size()); }
  int psi(ReceiverId i) const { return wants[i - 1]; }
  int rho(ReceiverId i) const { return has[i - 1]; }
  double q(ReceiverId i) const { return reception_probs[i - 1]; }

  /// Throws std::invalid_argument unless psi_i + rho_i = N for every i, sizes
  /// agree, and 0 < q_i <= 1.
  void validate() const;
};

/// E|W_i n W_k| for independent uniform sets of sizes psi_i, psi_k.
double expected_common_wants(int psi_i, int psi_k, int num_packets);

/// E[ I(j in H_k) |W_k n W_i| ] for a fixed j in W_i.
double expected_held_and_common(int psi_i, int psi_k, int num_packets);

/// Expected degree E[Delta_i] of any vertex of each receiver.
std::vector<double> expected_degree(const Cardinalities& c);

/// E|E| = 1/2 sum_i psi_i E[Delta_i].
double expected_edge_count(const Cardinalities& c);

/// xi_k = psi_k rho_k / (N (N-1)); zero when N = 1.
double xi(const Cardinalities& c, ReceiverId k);

/// Phi_k(x) evaluated for the receiver i whose degree is being updated.
double phi(const Cardinalities& c, ReceiverId k, ReceiverId i, double x);

struct ExpectedEvolutionTerms {
  std::vector<bool> targeted;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma;
  std::vector<double> xi;
  std::vector<double> expected_degree;
};

/// alpha, beta, gamma evaluated for every receiver (targeted or not).
ExpectedEvolutionTerms evolution_terms(const Cardinalities& c,
                                       std::span<const ReceiverId> targeted);

/// Expected per-vertex degree after a transmission targeting `targeted`.
std::vector<double> expected_degree_evolution(const Cardinalities& c,
                                              std::span<const ReceiverId> targeted);

/// Expected edge-set size after a transmission targeting `targeted`.
/// Throws std::invalid_argument if a targeted receiver wants nothing.
double expected_edge_evolution(const Cardinalities& c,
                               std::span<const ReceiverId> targeted);

/// The lower-psi receiver h has the larger expected degree.
/// Throws std::invalid_argument unless psi_i > psi_h.
bool check_degree_ordering(const Cardinalities& c, ReceiverId i, ReceiverId h);

/// True when the preconditions of the targeting-gain inequality hold:
/// psi_i > 0 and 1 < psi_k <= rho_k for every other targeted k.
bool targeting_gain_applicable(const Cardinalities& c,
                               std::span<const ReceiverId> targeted, ReceiverId i);

/// alpha_i - q_i gamma_i / psi_i >= beta_i. Throws std::invalid_argument if
/// the preconditions do not hold.
bool check_targeting_gain(const Cardinalities& c, std::span<const ReceiverId> targeted,
                          ReceiverId i);

}  // namespace idnc
