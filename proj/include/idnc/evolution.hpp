#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "idnc/plan.hpp"
#include "idnc/state.hpp"

namespace idnc {

/// How one transmission touches an unordered receiver pair {first, second}.
/// A targeted vertex is "restricted" with respect to the other receiver when
/// its packet is also wanted by that receiver (the pair shares a C1 edge).
enum class PairCase {
  kNeitherTargeted,
  kSecondTargetedUnrestricted,  // first not targeted, p_second not in W_first
  kSecondTargetedRestricted,    // first not targeted, p_second in W_first
  kFirstTargetedUnrestricted,
  kFirstTargetedRestricted,
  kBothUnrestricted,            // cross-held packets (C2)
  kBothRestricted,              // the same packet (C1)
};

/// Six-way case label (1..6) where the two single-target mirrors share label 4.
int case_label(PairCase c);

struct PairDelta {
  ReceiverId first = 0;
  ReceiverId second = 0;
  PairCase category = PairCase::kNeitherTargeted;
  std::int64_t delta = 0;  // change in Y_{first,second}
};

struct EvolutionDelta {
  std::int64_t before = 0;
  std::int64_t after = 0;
  std::vector<PairDelta> per_pair;  // pairs with at least one targeted receiver
};

/// Throws std::invalid_argument unless `plan` is a clique of the state's graph
/// and the state is partitioned.
void validate_plan(const FeedbackState& state, const TransmissionPlan& plan);

PairCase classify_pair(const FeedbackState& state, const TransmissionPlan& plan,
                       ReceiverId first, ReceiverId second);

/// Closed-form change of Y_ik. Symmetric in (i, k).
std::int64_t pairwise_evolution(const FeedbackState& state, const TransmissionPlan& plan,
                                const ReceptionOutcome& outcome, ReceiverId i,
                                ReceiverId k);

/// Edge-set size after `plan` is sent and `outcome` observed, computed from
/// the pre-transmission state only.
EvolutionDelta exact_evolution(const FeedbackState& state, const TransmissionPlan& plan,
                               const ReceptionOutcome& outcome);

enum class Targeting { kFirstOnly, kSecondOnly, kBoth };

/// Common-wanted versus non-common targeting of one receiver pair under one
/// targeting pattern, compared on the actual pairwise edge count afterwards.
struct DominancePattern {
  Targeting targeting = Targeting::kBoth;
  int common_choices = 0;
  int noncommon_choices = 0;
  /// For every outcome, min Y' over common choices >= max Y' over the others.
  bool per_outcome = true;
  /// Worst case over outcomes: min common Y' >= min non-common Y'.
  bool worst_case = true;

  bool comparable() const { return common_choices > 0 && noncommon_choices > 0; }
  bool dominant() const { return !comparable() || (per_outcome && worst_case); }
};

struct DominanceReport {
  std::array<DominancePattern, 3> patterns;
  std::size_t comparisons = 0;

  bool dominant() const;
};

/// Enumerates single and double targeting of receivers i and k with packets
/// inside and outside W_i n W_k, and every reception outcome.
DominanceReport check_pair_dominance(const FeedbackState& state, ReceiverId i,
                                     ReceiverId k);

}  // namespace idnc
