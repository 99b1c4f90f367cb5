#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "idnc/plan.hpp"
#include "idnc/random.hpp"

namespace idnc {

using PacketSet = boost::dynamic_bitset<>;  // bit j-1 set <=> packet j present

struct FrameConfig {
  int num_receivers = 1;
  int num_packets = 1;
  std::vector<double> reception_probs;  // q_i, entry i-1 belongs to receiver i
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument on M < 1, N < 1, size mismatch or q outside (0, 1].
  void validate() const;
};

/// Heterogeneous erasure channel. Each receiver's erasure probability is drawn
/// uniformly in [erasure_low, upper()] at the start of a frame and held fixed.
struct ChannelConfig {
  double erasure_low = 0.01;
  double erasure_high = 0.3;
  /// Worst-receiver erasure; replaces erasure_high as the top of the range.
  std::optional<double> worst_erasure;
  /// Recentres the draw range on this mean, keeping its width.
  std::optional<double> mean_override;

  void validate() const;
  double lower() const;
  double upper() const;
  double mean_erasure() const;

  /// q_i = 1 - e_i for M receivers.
  std::vector<double> draw_reception_probs(int num_receivers, Rng& rng) const;
};

/// Per-receiver Has/Wants sets of the frame. Normally Has is the complement
/// of Wants; states built with from_sets may leave packets in neither set
/// (untracked), which only the graph module accepts.
class FeedbackState {
 public:
  /// Every receiver wants every packet.
  FeedbackState(int num_packets, std::vector<double> reception_probs);

  /// Explicit Wants sets (1-based packet ids). Missing q defaults to 1.
  static FeedbackState from_wants(int num_packets,
                                  const std::vector<std::vector<PacketId>>& wants,
                                  std::vector<double> reception_probs = {});

  /// Explicit Wants and Has sets; packets in neither are untracked.
  /// Throws std::invalid_argument if a packet is in both.
  static FeedbackState from_sets(int num_packets,
                                 const std::vector<std::vector<PacketId>>& wants,
                                 const std::vector<std::vector<PacketId>>& has,
                                 std::vector<double> reception_probs = {});

  int num_receivers() const { return static_cast<int>(wants_.size()); }
  int num_packets() const { return num_packets_; }
  double reception_prob(ReceiverId i) const { return reception_probs_[i - 1]; }
  std::span<const double> reception_probs() const { return reception_probs_; }

  bool wants(ReceiverId i, PacketId j) const { return wants_[i - 1].test(j - 1); }
  bool has(ReceiverId i, PacketId j) const { return has_[i - 1].test(j - 1); }

  /// psi_i, the Wants set size.
  int wants_count(ReceiverId i) const { return static_cast<int>(wants_[i - 1].count()); }
  /// rho_i, the Has set size.
  int has_count(ReceiverId i) const { return static_cast<int>(has_[i - 1].count()); }

  std::vector<PacketId> wants_set(ReceiverId i) const;
  std::vector<PacketId> has_set(ReceiverId i) const;
  const PacketSet& wants_bits(ReceiverId i) const { return wants_[i - 1]; }
  const PacketSet& has_bits(ReceiverId i) const { return has_[i - 1]; }

  std::size_t total_wants() const;
  bool complete() const;
  /// Every packet is either wanted or held by every receiver.
  bool partitioned() const;

  /// Moves packet j from W_i to H_i.
  void mark_received(ReceiverId i, PacketId j) {
    wants_[i - 1].reset(j - 1);
    has_[i - 1].set(j - 1);
  }
  void mark_wanted(ReceiverId i, PacketId j) {
    wants_[i - 1].set(j - 1);
    has_[i - 1].reset(j - 1);
  }

  friend bool operator==(const FeedbackState&, const FeedbackState&) = default;

 private:
  int num_packets_;
  std::vector<double> reception_probs_;
  std::vector<PacketSet> wants_;
  std::vector<PacketSet> has_;
};

/// Initial uncoded phase: packet j reaches receiver i with probability q_i,
/// drawn from the frame's initial-phase stream.
FeedbackState init_frame(const FrameConfig& frame);

/// Draws X_i ~ Bernoulli(q_i) for every targeted receiver, in receiver order.
ReceptionOutcome sample_outcome(const TransmissionPlan& plan,
                                std::span<const double> reception_probs, Rng& rng);

/// Every receiver that decodes its targeted packet moves it from Wants to Has.
/// Throws std::invalid_argument if the outcome's domain is not the targeted
/// set or a targeted packet is not wanted.
FeedbackState apply_transmission(const FeedbackState& state,
                                 const TransmissionPlan& plan,
                                 const ReceptionOutcome& outcome);

}  // namespace idnc
