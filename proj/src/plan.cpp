#include "idnc/plan.hpp"

#include <algorithm>
#include <stdexcept>

namespace idnc {

TransmissionPlan::TransmissionPlan(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  auto same_receiver = [](const Vertex& a, const Vertex& b) {
    return a.receiver == b.receiver;
  };
  if (std::adjacent_find(vertices_.begin(), vertices_.end(), same_receiver) !=
      vertices_.end()) {
    throw std::invalid_argument("a transmission may target each receiver at most once");
  }
}

bool TransmissionPlan::targets(ReceiverId receiver) const {
  return packet_for(receiver).has_value();
}

std::optional<PacketId> TransmissionPlan::packet_for(ReceiverId receiver) const {
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), receiver,
      [](const Vertex& v, ReceiverId r) { return v.receiver < r; });
  if (it == vertices_.end() || it->receiver != receiver) return std::nullopt;
  return it->packet;
}

std::vector<ReceiverId> TransmissionPlan::targeted() const {
  std::vector<ReceiverId> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.receiver);
  return out;
}

ReceptionOutcome ReceptionOutcome::all(const TransmissionPlan& plan, bool value) {
  ReceptionOutcome out;
  for (const auto& v : plan.vertices()) out.received[v.receiver] = value;
  return out;
}

ReceptionOutcome ReceptionOutcome::from_mask(const TransmissionPlan& plan,
                                             unsigned mask) {
  ReceptionOutcome out;
  unsigned bit = 0;
  for (const auto& v : plan.vertices()) {
    out.received[v.receiver] = ((mask >> bit) & 1U) != 0;
    ++bit;
  }
  return out;
}

}  // namespace idnc
