#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace idnc {

/// Receivers are numbered 1..M and packets 1..N throughout the library.
using ReceiverId = int;
using PacketId = int;

/// A request of `packet` by `receiver`, i.e. one vertex of the IDNC graph.
struct Vertex {
  ReceiverId receiver = 0;
  PacketId packet = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// One coded transmission: a clique of request vertices with at most one
/// vertex per receiver. The packet XOR is the set of the vertices' packets.
class TransmissionPlan {
 public:
  TransmissionPlan() = default;

  /// Throws std::invalid_argument if two vertices share a receiver.
  explicit TransmissionPlan(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }

  bool targets(ReceiverId receiver) const;
  std::optional<PacketId> packet_for(ReceiverId receiver) const;
  std::vector<ReceiverId> targeted() const;

  friend bool operator==(const TransmissionPlan&, const TransmissionPlan&) = default;

 private:
  std::vector<Vertex> vertices_;  // sorted by receiver
};

/// Reception indicators X_i, defined exactly on a plan's targeted set.
struct ReceptionOutcome {
  std::map<ReceiverId, bool> received;

  /// 0/1 indicator; throws std::out_of_range for receivers outside the domain.
  int x(ReceiverId receiver) const { return received.at(receiver) ? 1 : 0; }

  static ReceptionOutcome all(const TransmissionPlan& plan, bool value);

  /// The outcome whose bit r (LSB first) belongs to the r-th targeted receiver.
  static ReceptionOutcome from_mask(const TransmissionPlan& plan, unsigned mask);

  friend bool operator==(const ReceptionOutcome&, const ReceptionOutcome&) = default;
};

}  // namespace idnc
