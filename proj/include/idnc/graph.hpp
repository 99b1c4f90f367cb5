#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "idnc/plan.hpp"
#include "idnc/state.hpp"

namespace idnc {

using VertexSet = boost::dynamic_bitset<>;  // bit v set <=> vertex index v present

/// Coding-opportunity graph of a feedback state. One vertex per (i, j in W_i),
/// ordered lexicographically by (receiver, packet). Two vertices of distinct
/// receivers i, k are adjacent iff they request the same packet (C1) or each
/// requested packet is held by the other receiver (C2). Immutable.
class IdncGraph {
 public:
  explicit IdncGraph(const FeedbackState& state);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  std::optional<std::size_t> index_of(const Vertex& v) const;

  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_[a].test(b); }
  const VertexSet& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Every pair adjacent (which also forces at most one vertex per receiver).
  bool is_clique(std::span<const std::size_t> members) const;
  /// Clique that no further vertex can join.
  bool is_maximal_clique(std::span<const std::size_t> members) const;

  /// Converts vertex indices to a plan; throws if they are not a clique.
  TransmissionPlan to_plan(std::span<const std::size_t> members) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

inline IdncGraph build_graph(const FeedbackState& state) { return IdncGraph(state); }

/// Pairwise feedback statistics of receivers i and k.
struct PairwiseStats {
  std::int64_t common = 0;        // psi_ik = |W_i n W_k|
  std::int64_t first_only = 0;    // theta_ik = |W_i n H_k| (= psi_i - psi_ik when partitioned)
  std::int64_t second_only = 0;   // theta_ki = |W_k n H_i|

  std::int64_t first_only_hat() const { return first_only - 1; }
  std::int64_t second_only_hat() const { return second_only - 1; }
  /// Y_ik, the number of edges between the two receivers' vertices.
  std::int64_t edges() const { return common + first_only * second_only; }
};

PairwiseStats pairwise_stats(const FeedbackState& state, ReceiverId i, ReceiverId k);

/// |E| from Wants-set cardinalities and pairwise intersections alone.
std::int64_t edge_count_formula(const FeedbackState& state);

/// Closed-form degree of vertex (i, j): sum over k != i of
/// [j in W_k] + [j in H_k] * |W_k n H_i|.
std::int64_t vertex_degree(const FeedbackState& state, const Vertex& v);

/// |E| / (|V|(|V|-1)/2); 1.0 when |V| <= 1.
double coding_density(std::size_t vertices, std::size_t edges);
inline double coding_density(const IdncGraph& g) {
  return coding_density(g.size(), g.edge_count());
}

/// Debug export, one "i.j k.l" edge per line with a < b in vertex order.
void write_edge_list(std::ostream& out, const IdncGraph& graph);

}  // namespace idnc
