#include "idnc/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace idnc {

void FrameConfig::validate() const {
  if (num_receivers < 1) throw std::invalid_argument("num_receivers must be >= 1");
  if (num_packets < 1) throw std::invalid_argument("num_packets must be >= 1");
  if (static_cast<int>(reception_probs.size()) != num_receivers) {
    throw std::invalid_argument("need one reception probability per receiver");
  }
  for (double q : reception_probs) {
    if (!(q > 0.0 && q <= 1.0)) {
      throw std::invalid_argument("reception probability " + std::to_string(q) +
                                  " outside (0, 1]");
    }
  }
}

void ChannelConfig::validate() const {
  if (!(erasure_low >= 0.0 && erasure_low <= erasure_high && erasure_high < 1.0)) {
    throw std::invalid_argument("erasure range must satisfy 0 <= lo <= hi < 1");
  }
  if (worst_erasure && !(*worst_erasure >= erasure_low && *worst_erasure < 1.0)) {
    throw std::invalid_argument("worst erasure must lie in [erasure_lo, 1)");
  }
  if (mean_override && !(*mean_override >= 0.0 && *mean_override < 1.0)) {
    throw std::invalid_argument("mean erasure must lie in [0, 1)");
  }
}

double ChannelConfig::lower() const {
  double lo = erasure_low;
  if (mean_override) {
    double half = 0.5 * (worst_erasure.value_or(erasure_high) - erasure_low);
    lo = std::max(0.0, *mean_override - half);
  }
  return lo;
}

double ChannelConfig::upper() const {
  double hi = worst_erasure.value_or(erasure_high);
  if (mean_override) {
    double half = 0.5 * (hi - erasure_low);
    hi = std::min(std::nextafter(1.0, 0.0), *mean_override + half);
  }
  return hi;
}

double ChannelConfig::mean_erasure() const {
  return mean_override.value_or(0.5 * (lower() + upper()));
}

std::vector<double> ChannelConfig::draw_reception_probs(int num_receivers,
                                                        Rng& rng) const {
  const double lo = lower();
  const double width = upper() - lo;
  std::vector<double> q(num_receivers);
  for (auto& qi : q) qi = 1.0 - (lo + width * rng.uniform());
  return q;
}

FeedbackState::FeedbackState(int num_packets, std::vector<double> reception_probs)
    : num_packets_(num_packets), reception_probs_(std::move(reception_probs)) {
  if (num_packets < 1) throw std::invalid_argument("num_packets must be >= 1");
  if (reception_probs_.empty()) throw std::invalid_argument("need at least one receiver");
  wants_.assign(reception_probs_.size(), PacketSet(num_packets));
  for (auto& w : wants_) w.set();
  has_.assign(reception_probs_.size(), PacketSet(num_packets));
}

namespace {

void check_packet(PacketId j, int num_packets) {
  if (j < 1 || j > num_packets) {
    throw std::invalid_argument("packet id " + std::to_string(j) + " outside 1..N");
  }
}

}  // namespace

FeedbackState FeedbackState::from_wants(int num_packets,
                                        const std::vector<std::vector<PacketId>>& wants,
                                        std::vector<double> reception_probs) {
  if (reception_probs.empty()) reception_probs.assign(wants.size(), 1.0);
  if (reception_probs.size() != wants.size()) {
    throw std::invalid_argument("need one reception probability per receiver");
  }
  FeedbackState state(num_packets, std::move(reception_probs));
  for (std::size_t i = 0; i < wants.size(); ++i) {
    state.wants_[i].reset();
    state.has_[i].set();
    for (PacketId j : wants[i]) {
      check_packet(j, num_packets);
      state.mark_wanted(static_cast<ReceiverId>(i + 1), j);
    }
  }
  return state;
}

FeedbackState FeedbackState::from_sets(int num_packets,
                                       const std::vector<std::vector<PacketId>>& wants,
                                       const std::vector<std::vector<PacketId>>& has,
                                       std::vector<double> reception_probs) {
  if (has.size() != wants.size()) {
    throw std::invalid_argument("need Has and Wants sets for the same receivers");
  }
  FeedbackState state = from_wants(num_packets, wants, std::move(reception_probs));
  for (std::size_t i = 0; i < has.size(); ++i) {
    state.has_[i].reset();
    for (PacketId j : has[i]) {
      check_packet(j, num_packets);
      if (state.wants_[i].test(j - 1)) {
        throw std::invalid_argument("packet " + std::to_string(j) +
                                    " both wanted and held by receiver " +
                                    std::to_string(i + 1));
      }
      state.has_[i].set(j - 1);
    }
  }
  return state;
}

std::vector<PacketId> FeedbackState::wants_set(ReceiverId i) const {
  std::vector<PacketId> out;
  const auto& w = wants_[i - 1];
  for (auto b = w.find_first(); b != PacketSet::npos; b = w.find_next(b)) {
    out.push_back(static_cast<PacketId>(b) + 1);
  }
  return out;
}

std::vector<PacketId> FeedbackState::has_set(ReceiverId i) const {
  std::vector<PacketId> out;
  const auto& h = has_[i - 1];
  for (auto b = h.find_first(); b != PacketSet::npos; b = h.find_next(b)) {
    out.push_back(static_cast<PacketId>(b) + 1);
  }
  return out;
}

std::size_t FeedbackState::total_wants() const {
  std::size_t total = 0;
  for (const auto& w : wants_) total += w.count();
  return total;
}

bool FeedbackState::complete() const {
  return std::all_of(wants_.begin(), wants_.end(),
                     [](const PacketSet& w) { return w.none(); });
}

bool FeedbackState::partitioned() const {
  for (std::size_t i = 0; i < wants_.size(); ++i) {
    if ((wants_[i] | has_[i]).count() != static_cast<std::size_t>(num_packets_)) return false;
  }
  return true;
}

FeedbackState init_frame(const FrameConfig& frame) {
  frame.validate();
  FeedbackState state(frame.num_packets, frame.reception_probs);
  Rng rng(frame.rng_seed, StreamPurpose::kInitialPhase);
  for (PacketId j = 1; j <= frame.num_packets; ++j) {
    for (ReceiverId i = 1; i <= frame.num_receivers; ++i) {
      if (rng.bernoulli(frame.reception_probs[i - 1])) state.mark_received(i, j);
    }
  }
  return state;
}

ReceptionOutcome sample_outcome(const TransmissionPlan& plan,
                                std::span<const double> reception_probs, Rng& rng) {
  ReceptionOutcome out;
  for (const auto& v : plan.vertices()) {
    out.received[v.receiver] = rng.bernoulli(reception_probs[v.receiver - 1]);
  }
  return out;
}

FeedbackState apply_transmission(const FeedbackState& state,
                                 const TransmissionPlan& plan,
                                 const ReceptionOutcome& outcome) {
  if (outcome.received.size() != plan.size()) {
    throw std::invalid_argument("reception outcome must cover exactly the targeted set");
  }
  FeedbackState next = state;
  for (const auto& v : plan.vertices()) {
    auto it = outcome.received.find(v.receiver);
    if (it == outcome.received.end()) {
      throw std::invalid_argument("reception outcome missing targeted receiver " +
                                  std::to_string(v.receiver));
    }
    if (v.receiver < 1 || v.receiver > state.num_receivers() || v.packet < 1 ||
        v.packet > state.num_packets() || !state.wants(v.receiver, v.packet)) {
      throw std::invalid_argument("plan targets a packet its receiver does not want");
    }
    if (it->second) next.mark_received(v.receiver, v.packet);
  }
  return next;
}

}  // namespace idnc
