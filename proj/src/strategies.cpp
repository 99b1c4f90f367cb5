#include "idnc/strategies.hpp"

#include <algorithm>
#include <cmath>

namespace idnc {

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kRandom: return "rnd";
    case StrategyKind::kMaxClique: return "mc";
    case StrategyKind::kReceptionWeighted: return "mwc-r";
    case StrategyKind::kMostWantedPacket: return "mowps";
    case StrategyKind::kWorstReceiver: return "wort";
  }
  return "?";
}

std::string_view to_string(Solver solver) {
  return solver == Solver::kExact ? "exact" : "greedy";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) {
  for (StrategyKind k : kAllStrategies) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<Solver> parse_solver(std::string_view name) {
  if (name == "exact") return Solver::kExact;
  if (name == "greedy") return Solver::kGreedy;
  return std::nullopt;
}

std::string StrategyConfig::label() const {
  std::string out(to_string(kind));
  if (kind != StrategyKind::kRandom) {
    out += '-';
    out += to_string(solver);
  }
  return out;
}

std::vector<double> modified_weights(const IdncGraph& graph, const std::vector<double>& base) {
  std::vector<double> out(graph.size(), 0.0);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const auto& nb = graph.neighbors(v);
    double sum = 0.0;
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) sum += base[u];
    out[v] = base[v] * sum;
  }
  return out;
}

VertexWeights assign_weights(StrategyKind kind, const IdncGraph& graph,
                             const FeedbackState& state, double bias) {
  VertexWeights w;
  w.demand.assign(state.num_packets(), 0);
  for (ReceiverId i = 1; i <= state.num_receivers(); ++i) {
    for (PacketId j : state.wants_set(i)) ++w.demand[j - 1];
  }
  w.base.resize(graph.size(), 1.0);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const auto [i, j] = graph.vertex(v);
    switch (kind) {
      case StrategyKind::kRandom:
      case StrategyKind::kMaxClique:
        w.base[v] = 1.0;
        break;
      case StrategyKind::kReceptionWeighted:
        w.base[v] = state.reception_prob(i);
        break;
      case StrategyKind::kMostWantedPacket:
        w.base[v] = std::pow(static_cast<double>(w.demand[j - 1]), bias);
        break;
      case StrategyKind::kWorstReceiver:
        w.base[v] = std::pow(state.wants_count(i) / state.reception_prob(i), bias);
        break;
    }
  }
  w.modified = modified_weights(graph, w.base);
  return w;
}

ExactSolverLimitError::ExactSolverLimitError(std::size_t vertices, std::size_t limit)
    : std::length_error("exact clique search refused for " + std::to_string(vertices) +
                        " vertices (limit " + std::to_string(limit) +
                        "); use the greedy solver") {}

namespace {

class ExactSearch {
 public:
  ExactSearch(const IdncGraph& graph, const std::vector<double>& weights)
      : graph_(graph), weights_(weights) {
    int max_receiver = 0;
    for (const auto& v : graph.vertices()) max_receiver = std::max(max_receiver, v.receiver);
    receiver_best_.assign(max_receiver + 1, -1.0);
  }

  std::vector<std::size_t> run() {
    VertexSet all(graph_.size());
    all.set();
    expand(all);
    return best_;
  }

 private:
  bool same_weight(double a, double b) const {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
  }

  bool beats(double w, std::size_t card) const {
    if (best_.empty()) return true;
    if (same_weight(w, best_weight_)) return card > best_.size();
    return w > best_weight_;
  }

  // Cliques are enumerated as increasing index sequences, depth first, which
  // visits them in lexicographic order; only strict improvements replace the
  // incumbent, so the earliest of equal cliques wins.
  void expand(const VertexSet& candidates) {
    // One vertex per receiver at most, so the per-receiver maximum bounds
    // what the candidates can still add.
    std::fill(receiver_best_.begin(), receiver_best_.end(), -1.0);
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      auto& slot = receiver_best_[graph_.vertex(v).receiver];
      slot = std::max(slot, weights_[v]);
    }
    double bound = weight_;
    std::size_t card_bound = current_.size();
    for (double b : receiver_best_) {
      if (b >= 0.0) {
        bound += b;
        ++card_bound;
      }
    }
    if (!best_.empty()) {
      if (bound < best_weight_ && !same_weight(bound, best_weight_)) return;
      if (same_weight(bound, best_weight_) && card_bound <= best_.size()) return;
    }

    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      current_.push_back(v);
      weight_ += weights_[v];
      if (beats(weight_, current_.size())) {
        best_ = current_;
        best_weight_ = weight_;
      }
      VertexSet next = candidates & graph_.neighbors(v);
      for (auto u = next.find_first(); u != VertexSet::npos && u <= v; u = next.find_next(u)) {
        next.reset(u);
      }
      if (next.any()) expand(next);
      weight_ -= weights_[v];
      current_.pop_back();
    }
  }

  const IdncGraph& graph_;
  const std::vector<double>& weights_;
  std::vector<double> receiver_best_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  double weight_ = 0.0;
  double best_weight_ = 0.0;
};

}  // namespace

TransmissionPlan select_exact(const IdncGraph& graph, const VertexWeights& weights,
                              std::size_t size_limit) {
  if (graph.size() > size_limit) throw ExactSolverLimitError(graph.size(), size_limit);
  if (graph.empty()) return {};
  const auto best = ExactSearch(graph, weights.base).run();
  return graph.to_plan(best);
}

TransmissionPlan select_greedy(const IdncGraph& graph, const VertexWeights& weights) {
  const std::size_t n = graph.size();
  if (n == 0) return {};
  const auto& w = weights.base;

  // neighbour_sum[v] tracks the base-weight sum of v's neighbours that are
  // still candidates.
  std::vector<double> neighbour_sum(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nb = graph.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      neighbour_sum[v] += w[u];
    }
  }

  VertexSet candidates(n);
  candidates.set();
  std::vector<std::size_t> clique;
  while (candidates.any()) {
    std::size_t pick = candidates.find_first();
    double pick_score = w[pick] * neighbour_sum[pick];
    for (auto v = candidates.find_next(pick); v != VertexSet::npos; v = candidates.find_next(v)) {
      const double score = w[v] * neighbour_sum[v];
      if (score > pick_score || (score == pick_score && w[v] > w[pick])) {
        pick = v;
        pick_score = score;
      }
    }
    clique.push_back(pick);

    VertexSet next = candidates & graph.neighbors(pick);
    VertexSet dropped = candidates - next;
    for (auto u = dropped.find_first(); u != VertexSet::npos; u = dropped.find_next(u)) {
      const auto& nb = graph.neighbors(u);
      for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
        if (next.test(v)) neighbour_sum[v] -= w[u];
      }
    }
    candidates = std::move(next);
  }
  std::sort(clique.begin(), clique.end());
  return graph.to_plan(clique);
}

TransmissionPlan select_random(const IdncGraph& graph, Rng& rng) {
  VertexSet candidates(graph.size());
  candidates.set();
  std::vector<std::size_t> clique;
  while (candidates.any()) {
    std::size_t skip = rng.index(candidates.count());
    auto v = candidates.find_first();
    while (skip-- > 0) v = candidates.find_next(v);
    clique.push_back(v);
    candidates &= graph.neighbors(v);
  }
  std::sort(clique.begin(), clique.end());
  return graph.to_plan(clique);
}

TransmissionPlan select_plan(const StrategyConfig& config, const IdncGraph& graph,
                             const FeedbackState& state, Rng& rng) {
  if (config.kind == StrategyKind::kRandom) return select_random(graph, rng);
  const auto weights = assign_weights(config.kind, graph, state, config.bias);
  if (config.solver == Solver::kExact) {
    return select_exact(graph, weights, config.exact_size_limit);
  }
  return select_greedy(graph, weights);
}

double plan_weight(const IdncGraph& graph, const VertexWeights& weights,
                   const TransmissionPlan& plan) {
  double sum = 0.0;
  for (const auto& v : plan.vertices()) {
    const auto idx = graph.index_of(v);
    if (!idx) throw std::invalid_argument("plan vertex not in graph");
    sum += weights.base[*idx];
  }
  return sum;
}

}  // namespace idnc
