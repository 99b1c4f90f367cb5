#include "idnc/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace idnc {

IdncGraph::IdncGraph(const FeedbackState& state) {
  const int m = state.num_receivers();
  vertices_.reserve(state.total_wants());
  for (ReceiverId i = 1; i <= m; ++i) {
    for (PacketId j : state.wants_set(i)) vertices_.push_back({i, j});
  }

  const std::size_t n = vertices_.size();
  adjacency_.assign(n, VertexSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    const auto [i, j] = vertices_[a];
    const PacketSet& has_i = state.has_bits(i);
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto [k, l] = vertices_[b];
      if (k == i) continue;
      const bool same_packet = j == l;
      const bool cross_held = state.has_bits(k).test(j - 1) && has_i.test(l - 1);
      if (same_packet || cross_held) {
        adjacency_[a].set(b);
        adjacency_[b].set(a);
        ++edge_count_;
      }
    }
  }
}

std::optional<std::size_t> IdncGraph::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool IdncGraph::is_clique(std::span<const std::size_t> members) const {
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!adjacent(members[a], members[b])) return false;
    }
  }
  return true;
}

bool IdncGraph::is_maximal_clique(std::span<const std::size_t> members) const {
  if (!is_clique(members)) return false;
  VertexSet common(size());
  common.set();
  for (std::size_t v : members) {
    common &= adjacency_[v];
    common.reset(v);
  }
  return common.none();
}

TransmissionPlan IdncGraph::to_plan(std::span<const std::size_t> members) const {
  if (!is_clique(members)) throw std::invalid_argument("vertex set is not a clique");
  std::vector<Vertex> out;
  out.reserve(members.size());
  for (std::size_t v : members) out.push_back(vertices_[v]);
  return TransmissionPlan(std::move(out));
}

PairwiseStats pairwise_stats(const FeedbackState& state, ReceiverId i, ReceiverId k) {
  const auto& wi = state.wants_bits(i);
  const auto& wk = state.wants_bits(k);
  PairwiseStats s;
  s.common = static_cast<std::int64_t>((wi & wk).count());
  s.first_only = static_cast<std::int64_t>((wi & state.has_bits(k)).count());
  s.second_only = static_cast<std::int64_t>((wk & state.has_bits(i)).count());
  return s;
}

std::int64_t edge_count_formula(const FeedbackState& state) {
  std::int64_t total = 0;
  const int m = state.num_receivers();
  for (ReceiverId i = 1; i <= m; ++i) {
    for (ReceiverId k = i + 1; k <= m; ++k) total += pairwise_stats(state, i, k).edges();
  }
  return total;
}

std::int64_t vertex_degree(const FeedbackState& state, const Vertex& v) {
  const auto [i, j] = v;
  std::int64_t degree = 0;
  for (ReceiverId k = 1; k <= state.num_receivers(); ++k) {
    if (k == i) continue;
    if (state.wants(k, j)) {
      degree += 1;
    } else if (state.has(k, j)) {
      degree += static_cast<std::int64_t>((state.wants_bits(k) & state.has_bits(i)).count());
    }
  }
  return degree;
}

double coding_density(std::size_t vertices, std::size_t edges) {
  if (vertices <= 1) return 1.0;
  const double complete = 0.5 * static_cast<double>(vertices) *
                          static_cast<double>(vertices - 1);
  return static_cast<double>(edges) / complete;
}

void write_edge_list(std::ostream& out, const IdncGraph& graph) {
  for (std::size_t a = 0; a < graph.size(); ++a) {
    const auto& n = graph.neighbors(a);
    for (auto b = n.find_next(a); b != VertexSet::npos; b = n.find_next(b)) {
      const auto& u = graph.vertex(a);
      const auto& w = graph.vertex(b);
      out << u.receiver << '.' << u.packet << ' ' << w.receiver << '.' << w.packet << '\n';
    }
  }
}

}  // namespace idnc
