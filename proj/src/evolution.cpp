#include "idnc/evolution.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "idnc/graph.hpp"

namespace idnc {

int case_label(PairCase c) {
  switch (c) {
    case PairCase::kNeitherTargeted: return 1;
    case PairCase::kSecondTargetedUnrestricted: return 2;
    case PairCase::kSecondTargetedRestricted: return 3;
    case PairCase::kFirstTargetedUnrestricted:
    case PairCase::kFirstTargetedRestricted: return 4;
    case PairCase::kBothUnrestricted: return 5;
    case PairCase::kBothRestricted: return 6;
  }
  return 0;
}

void validate_plan(const FeedbackState& state, const TransmissionPlan& plan) {
  if (!state.partitioned()) {
    throw std::invalid_argument("edge evolution needs every packet wanted or held");
  }
  const auto& vs = plan.vertices();
  for (const auto& v : vs) {
    if (v.receiver < 1 || v.receiver > state.num_receivers() || v.packet < 1 ||
        v.packet > state.num_packets() || !state.wants(v.receiver, v.packet)) {
      throw std::invalid_argument("plan vertex " + std::to_string(v.receiver) + "." +
                                  std::to_string(v.packet) + " is not a request");
    }
  }
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const bool same = vs[a].packet == vs[b].packet;
      const bool cross = state.has(vs[b].receiver, vs[a].packet) &&
                         state.has(vs[a].receiver, vs[b].packet);
      if (!same && !cross) throw std::invalid_argument("plan is not a clique");
    }
  }
}

PairCase classify_pair(const FeedbackState& state, const TransmissionPlan& plan,
                       ReceiverId first, ReceiverId second) {
  const auto p_first = plan.packet_for(first);
  const auto p_second = plan.packet_for(second);
  if (!p_first && !p_second) return PairCase::kNeitherTargeted;
  if (!p_first) {
    return state.wants(first, *p_second) ? PairCase::kSecondTargetedRestricted
                                         : PairCase::kSecondTargetedUnrestricted;
  }
  if (!p_second) {
    return state.wants(second, *p_first) ? PairCase::kFirstTargetedRestricted
                                         : PairCase::kFirstTargetedUnrestricted;
  }
  return state.wants(second, *p_first) ? PairCase::kBothRestricted
                                       : PairCase::kBothUnrestricted;
}

namespace {

std::int64_t delta_for(PairCase c, const PairwiseStats& s, std::int64_t x_first,
                       std::int64_t x_second) {
  const std::int64_t t_fs = s.first_only;   // theta_ik
  const std::int64_t t_sf = s.second_only;  // theta_ki
  switch (c) {
    case PairCase::kNeitherTargeted:
      return 0;
    case PairCase::kSecondTargetedUnrestricted:
      return -x_second * t_fs;
    case PairCase::kSecondTargetedRestricted:
      return x_second * s.second_only_hat();
    case PairCase::kFirstTargetedUnrestricted:
      return -x_first * t_sf;
    case PairCase::kFirstTargetedRestricted:
      return x_first * s.first_only_hat();
    case PairCase::kBothUnrestricted:
      // Both vertices are unrestricted, so each receiver wants a packet the
      // other already holds.
      if (t_fs < 1 || t_sf < 1) {
        throw std::logic_error("cross-held targeting with an empty exclusive Wants part");
      }
      return x_first * x_second - x_first * t_sf - x_second * t_fs;
    case PairCase::kBothRestricted: {
      // psi_ik drops by X_i + X_k - X_i X_k and each theta gains the other's
      // lone reception; expanding gives a "+ X_i X_k" inside the bracket.
      const std::int64_t both = x_first * x_second;
      return x_first * s.first_only_hat() + x_second * s.second_only_hat() -
             both * (s.first_only_hat() + s.second_only_hat() + both);
    }
  }
  return 0;
}

}  // namespace

std::int64_t pairwise_evolution(const FeedbackState& state, const TransmissionPlan& plan,
                                const ReceptionOutcome& outcome, ReceiverId i,
                                ReceiverId k) {
  if (i == k) throw std::invalid_argument("pairwise evolution needs distinct receivers");
  const PairCase c = classify_pair(state, plan, i, k);
  const std::int64_t xi = plan.targets(i) ? outcome.x(i) : 0;
  const std::int64_t xk = plan.targets(k) ? outcome.x(k) : 0;
  return delta_for(c, pairwise_stats(state, i, k), xi, xk);
}

EvolutionDelta exact_evolution(const FeedbackState& state, const TransmissionPlan& plan,
                               const ReceptionOutcome& outcome) {
  validate_plan(state, plan);
  if (outcome.received.size() != plan.size()) {
    throw std::invalid_argument("reception outcome must cover exactly the targeted set");
  }
  for (const auto& v : plan.vertices()) {
    if (!outcome.received.contains(v.receiver)) {
      throw std::invalid_argument("reception outcome missing a targeted receiver");
    }
  }

  EvolutionDelta out;
  out.before = edge_count_formula(state);
  out.after = out.before;
  const int m = state.num_receivers();
  for (ReceiverId i = 1; i <= m; ++i) {
    for (ReceiverId k = i + 1; k <= m; ++k) {
      const PairCase c = classify_pair(state, plan, i, k);
      if (c == PairCase::kNeitherTargeted) continue;
      const std::int64_t xi = plan.targets(i) ? outcome.x(i) : 0;
      const std::int64_t xk = plan.targets(k) ? outcome.x(k) : 0;
      const std::int64_t d = delta_for(c, pairwise_stats(state, i, k), xi, xk);
      out.per_pair.push_back({i, k, c, d});
      out.after += d;
    }
  }
  return out;
}

bool DominanceReport::dominant() const {
  return std::all_of(patterns.begin(), patterns.end(),
                     [](const DominancePattern& p) { return p.dominant(); });
}

namespace {

// Edges between i's and k's vertices, counted directly from C1/C2.
std::int64_t count_pair_edges(const FeedbackState& s, ReceiverId i, ReceiverId k) {
  std::int64_t edges = 0;
  for (PacketId j : s.wants_set(i)) {
    for (PacketId l : s.wants_set(k)) {
      if (j == l || (s.has(k, j) && s.has(i, l))) ++edges;
    }
  }
  return edges;
}

struct Choice {
  TransmissionPlan plan;
  bool common = false;
};

}  // namespace

DominanceReport check_pair_dominance(const FeedbackState& state, ReceiverId i,
                                     ReceiverId k) {
  if (i == k) throw std::invalid_argument("dominance check needs distinct receivers");
  DominanceReport report;
  const auto wi = state.wants_set(i);
  const auto wk = state.wants_set(k);

  const std::array<Targeting, 3> kinds{Targeting::kFirstOnly, Targeting::kSecondOnly,
                                       Targeting::kBoth};
  for (std::size_t idx = 0; idx < kinds.size(); ++idx) {
    DominancePattern& pattern = report.patterns[idx];
    pattern.targeting = kinds[idx];

    std::vector<Choice> choices;
    if (kinds[idx] == Targeting::kFirstOnly) {
      for (PacketId p : wi) choices.push_back({TransmissionPlan({{i, p}}), state.wants(k, p)});
    } else if (kinds[idx] == Targeting::kSecondOnly) {
      for (PacketId p : wk) choices.push_back({TransmissionPlan({{k, p}}), state.wants(i, p)});
    } else {
      for (PacketId p : wi) {
        for (PacketId l : wk) {
          TransmissionPlan plan({{i, p}, {k, l}});
          if (p == l) {
            choices.push_back({std::move(plan), true});
          } else if (state.has(k, p) && state.has(i, l)) {
            choices.push_back({std::move(plan), false});
          }
        }
      }
    }

    const unsigned outcomes = kinds[idx] == Targeting::kBoth ? 4U : 2U;
    std::int64_t worst_common = std::numeric_limits<std::int64_t>::max();
    std::int64_t worst_other = std::numeric_limits<std::int64_t>::max();
    for (unsigned mask = 0; mask < outcomes; ++mask) {
      std::int64_t min_common = std::numeric_limits<std::int64_t>::max();
      std::int64_t max_other = std::numeric_limits<std::int64_t>::min();
      for (const auto& choice : choices) {
        const auto outcome = ReceptionOutcome::from_mask(choice.plan, mask);
        const auto next = apply_transmission(state, choice.plan, outcome);
        const std::int64_t y = count_pair_edges(next, i, k);
        if (choice.common) {
          min_common = std::min(min_common, y);
          worst_common = std::min(worst_common, y);
        } else {
          max_other = std::max(max_other, y);
          worst_other = std::min(worst_other, y);
        }
      }
      if (!choices.empty()) ++report.comparisons;
      if (min_common != std::numeric_limits<std::int64_t>::max() &&
          max_other != std::numeric_limits<std::int64_t>::min() && min_common < max_other) {
        pattern.per_outcome = false;
      }
    }
    for (const auto& choice : choices) {
      (choice.common ? pattern.common_choices : pattern.noncommon_choices)++;
    }
    if (pattern.comparable() && worst_common < worst_other) pattern.worst_case = false;
  }
  return report;
}

}  // namespace idnc
