#include "idnc/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "idnc/evolution.hpp"
#include "idnc/expectation.hpp"

namespace idnc::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

double relative_error(double observed, double expected) {
  const double diff = std::abs(observed - expected);
  return std::abs(expected) > 1e-12 ? diff / std::abs(expected) : diff;
}

bool adjacent_rule(const FeedbackState& s, const Vertex& a, const Vertex& b) {
  if (a.receiver == b.receiver) return false;
  if (a.packet == b.packet) return true;
  return s.has(b.receiver, a.packet) && s.has(a.receiver, b.packet);
}

FeedbackState state_from_masks(const std::vector<std::uint32_t>& wants, int num_packets,
                               std::vector<double> q = {}) {
  std::vector<std::vector<PacketId>> lists(wants.size());
  for (std::size_t i = 0; i < wants.size(); ++i) {
    for (int j = 0; j < num_packets; ++j) {
      if (wants[i] >> j & 1U) lists[i].push_back(j + 1);
    }
  }
  return FeedbackState::from_wants(num_packets, lists, std::move(q));
}

std::vector<std::uint32_t> masks_of_size(int n, int size) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) == size) out.push_back(m);
  }
  return out;
}

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

std::size_t scaled(std::size_t n, double scale) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(n * scale)));
}

}  // namespace

void print_report(std::ostream& out, const SuiteReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s  %-28s cases=%zu failures=%zu worst=%.3g time=%.1fs",
                r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.failures,
                r.worst_error, r.seconds);
  out << buf << '\n';
  if (!r.detail.empty()) {
    std::istringstream lines(r.detail);
    for (std::string line; std::getline(lines, line);) out << "      " << line << '\n';
  }
}

std::uint64_t brute_edge_count(const FeedbackState& state) {
  std::vector<Vertex> vertices;
  for (ReceiverId i = 1; i <= state.num_receivers(); ++i) {
    for (PacketId j : state.wants_set(i)) vertices.push_back({i, j});
  }
  std::uint64_t edges = 0;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent_rule(state, vertices[a], vertices[b])) ++edges;
    }
  }
  return edges;
}

std::uint64_t brute_edge_count(const std::vector<std::uint32_t>& wants) {
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < wants.size(); ++i) {
    for (std::size_t k = i + 1; k < wants.size(); ++k) {
      for (std::uint32_t a = wants[i]; a; a &= a - 1) {
        const int j = std::countr_zero(a);
        for (std::uint32_t b = wants[k]; b; b &= b - 1) {
          const int l = std::countr_zero(b);
          if (j == l || (!(wants[k] >> j & 1U) && !(wants[i] >> l & 1U))) ++edges;
        }
      }
    }
  }
  return edges;
}

std::uint64_t brute_degree_sum(const std::vector<std::uint32_t>& wants, std::size_t i) {
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < wants.size(); ++k) {
    if (k == i) continue;
    for (std::uint32_t a = wants[i]; a; a &= a - 1) {
      const int j = std::countr_zero(a);
      for (std::uint32_t b = wants[k]; b; b &= b - 1) {
        const int l = std::countr_zero(b);
        if (j == l || (!(wants[k] >> j & 1U) && !(wants[i] >> l & 1U))) ++sum;
      }
    }
  }
  return sum;
}

std::vector<std::vector<std::size_t>> maximal_cliques(const IdncGraph& graph) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(VertexSet, VertexSet)> recurse = [&](VertexSet p, VertexSet x) {
    if (p.none() && x.none()) {
      auto clique = current;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    std::size_t pivot = VertexSet::npos;
    std::size_t best = 0;
    const VertexSet px = p | x;
    for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
      const std::size_t c = (p & graph.neighbors(u)).count();
      if (pivot == VertexSet::npos || c > best) {
        pivot = u;
        best = c;
      }
    }
    const VertexSet branch = p - graph.neighbors(pivot);
    for (auto v = branch.find_first(); v != VertexSet::npos; v = branch.find_next(v)) {
      current.push_back(v);
      recurse(p & graph.neighbors(v), x & graph.neighbors(v));
      current.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  if (graph.empty()) return out;
  VertexSet all(graph.size());
  all.set();
  recurse(all, VertexSet(graph.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t random_subset(Rng& rng, int n, int size) {
  std::vector<int> items(n);
  std::iota(items.begin(), items.end(), 0);
  std::uint32_t mask = 0;
  for (int t = 0; t < size; ++t) {
    const std::size_t pick = t + rng.index(static_cast<std::size_t>(n - t));
    std::swap(items[t], items[pick]);
    mask |= 1U << items[t];
  }
  return mask;
}

FeedbackState random_state(Rng& rng, int num_receivers, int num_packets) {
  const double p = rng.uniform();
  std::vector<std::uint32_t> wants(num_receivers, 0);
  std::vector<double> q(num_receivers);
  for (int i = 0; i < num_receivers; ++i) {
    for (int j = 0; j < num_packets; ++j) {
      if (rng.bernoulli(p)) wants[i] |= 1U << j;
    }
    q[i] = 0.1 + 0.9 * rng.uniform();
  }
  return state_from_masks(wants, num_packets, q);
}

std::vector<std::size_t> brute_max_weight_clique(const IdncGraph& graph,
                                                 const std::vector<double>& weights) {
  const std::size_t n = graph.size();
  if (n > 20) throw std::invalid_argument("brute-force clique search limited to 20 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (graph.adjacent(a, b)) adj[a] |= 1U << b;
    }
  }
  struct Found {
    double weight;
    std::vector<std::size_t> members;
  };
  std::vector<Found> cliques;
  double top = -1.0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    bool clique = true;
    double w = 0.0;
    for (std::uint32_t m = mask; m && clique; m &= m - 1) {
      const int v = std::countr_zero(m);
      if ((mask & ~(1U << v) & ~adj[v]) != 0) clique = false;
      w += weights[v];
    }
    if (!clique) continue;
    std::vector<std::size_t> members;
    for (std::uint32_t m = mask; m; m &= m - 1) members.push_back(std::countr_zero(m));
    top = std::max(top, w);
    cliques.push_back({w, std::move(members)});
  }
  std::vector<std::size_t> best;
  bool have = false;
  for (auto& c : cliques) {
    if (std::abs(c.weight - top) > 1e-9 * std::max(1.0, std::abs(top))) continue;
    if (!have || c.members.size() > best.size() ||
        (c.members.size() == best.size() && c.members < best)) {
      best = c.members;
      have = true;
    }
  }
  return best;
}

SuiteReport edge_formula_suite(std::size_t states, int max_m, int max_n, std::uint64_t seed) {
  Timer timer;
  SuiteReport r;
  r.name = "edge-count formula";
  Rng rng(seed);
  for (std::size_t s = 0; s < states; ++s) {
    const auto state = random_state(rng, rng.between(1, max_m), rng.between(1, max_n));
    const IdncGraph graph(state);
    const auto brute = static_cast<std::int64_t>(brute_edge_count(state));
    bool ok = edge_count_formula(state) == brute &&
              static_cast<std::int64_t>(graph.edge_count()) == brute;
    for (std::size_t v = 0; v < graph.size() && ok; ++v) {
      ok = vertex_degree(state, graph.vertex(v)) == static_cast<std::int64_t>(graph.degree(v));
    }
    ++r.cases;
    if (!ok) ++r.failures;
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport evolution_suite(std::size_t states, int max_m, int max_n, std::uint64_t seed) {
  Timer timer;
  SuiteReport r;
  r.name = "edge-count evolution";
  Rng rng(seed);
  std::map<int, std::size_t> labels;
  std::size_t cliques_seen = 0;
  for (std::size_t s = 0; s < states; ++s) {
    const auto state = random_state(rng, rng.between(1, max_m), rng.between(1, max_n));
    const IdncGraph graph(state);
    for (const auto& clique : maximal_cliques(graph)) {
      ++cliques_seen;
      const auto plan = graph.to_plan(clique);
      for (unsigned mask = 0; mask < (1U << plan.size()); ++mask) {
        const auto outcome = ReceptionOutcome::from_mask(plan, mask);
        const auto predicted = exact_evolution(state, plan, outcome);
        const auto counted =
            static_cast<std::int64_t>(brute_edge_count(apply_transmission(state, plan, outcome)));
        for (const auto& pd : predicted.per_pair) ++labels[case_label(pd.category)];
        ++r.cases;
        if (predicted.after != counted) {
          ++r.failures;
          r.worst_error = std::max(r.worst_error, std::abs(double(predicted.after - counted)));
        }
      }
    }
  }
  std::ostringstream d;
  d << states << " states, " << cliques_seen << " maximal cliques; pair cases";
  for (const auto& [label, n] : labels) d << ' ' << label << ':' << n;
  r.detail = d.str();
  r.seconds = timer.seconds();
  return r;
}

SuiteReport dominance_suite(int max_n) {
  Timer timer;
  SuiteReport r;
  r.name = "pairwise dominance";
  std::size_t comparable = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (std::uint32_t a = 0; a < (1U << n); ++a) {
      for (std::uint32_t b = 0; b < (1U << n); ++b) {
        const auto state = state_from_masks({a, b}, n);
        const auto report = check_pair_dominance(state, 1, 2);
        for (const auto& p : report.patterns) comparable += p.comparable() ? 1 : 0;
        ++r.cases;
        if (!report.dominant()) ++r.failures;
      }
    }
  }
  r.detail = std::to_string(comparable) + " comparable targeting patterns";
  r.seconds = timer.seconds();
  return r;
}

SuiteReport expectation_monte_carlo_suite(std::size_t configs, std::size_t samples, int max_m,
                                          int max_n, double tolerance, std::uint64_t seed) {
  Timer timer;
  SuiteReport r;
  r.name = "expected degree/edges (MC)";
  Rng rng(seed);
  std::ostringstream d;
  for (std::size_t c = 0; c < configs; ++c) {
    const int m = rng.between(std::min(3, max_m), max_m);
    const int n = rng.between(std::min(4, max_n), max_n);
    std::vector<int> psi(m);
    for (auto& x : psi) x = rng.between(1, n);
    const auto card = Cardinalities::from_wants(n, psi);
    const auto degree = expected_degree(card);
    const double edges = expected_edge_count(card);

    std::vector<double> degree_sum(m, 0.0);
    double edge_sum = 0.0;
    std::vector<std::uint32_t> wants(m);
    for (std::size_t s = 0; s < samples; ++s) {
      for (int i = 0; i < m; ++i) wants[i] = random_subset(rng, n, psi[i]);
      for (int i = 0; i < m; ++i) {
        degree_sum[i] += static_cast<double>(brute_degree_sum(wants, i)) / psi[i];
      }
      edge_sum += static_cast<double>(brute_edge_count(wants));
    }
    double worst = relative_error(edge_sum / samples, edges);
    for (int i = 0; i < m; ++i) {
      worst = std::max(worst, relative_error(degree_sum[i] / samples, degree[i]));
    }
    r.worst_error = std::max(r.worst_error, worst);
    ++r.cases;
    if (worst > tolerance) {
      ++r.failures;
      d << format("M=%g N=%g worst relative error %.4f\n", m, n, worst);
    }
  }
  r.detail = d.str();
  r.seconds = timer.seconds();
  return r;
}

SuiteReport expectation_exhaustive_suite(int max_m, int max_n, double tolerance,
                                         std::uint64_t seed) {
  Timer timer;
  SuiteReport r;
  r.name = "expected degree/edges (exact)";
  Rng rng(seed);
  auto check = [&](double got, double want) {
    const double err = std::abs(got - want);
    r.worst_error = std::max(r.worst_error, err);
    ++r.cases;
    if (err > tolerance) ++r.failures;
  };

  for (int n = 1; n <= max_n; ++n) {
    // Pairwise moments over every pair of cardinalities.
    for (int pi = 1; pi <= n; ++pi) {
      for (int pk = 0; pk <= n; ++pk) {
        double common = 0.0, held = 0.0, count = 0.0, count_held = 0.0;
        for (auto wi : masks_of_size(n, pi)) {
          for (auto wk : masks_of_size(n, pk)) {
            common += std::popcount(wi & wk);
            count += 1.0;
            if (wi & 1U) {
              held += (wk & 1U) ? 0.0 : std::popcount(wi & wk);
              count_held += 1.0;
            }
          }
        }
        check(common / count, expected_common_wants(pi, pk, n));
        check(held / count_held, expected_held_and_common(pi, pk, n));
      }
    }

    for (int m = 1; m <= max_m; ++m) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> psi(m);
        for (auto& x : psi) x = rng.between(1, n);
        const auto card = Cardinalities::from_wants(n, psi);
        std::vector<std::vector<std::uint32_t>> choices(m);
        for (int i = 0; i < m; ++i) choices[i] = masks_of_size(n, psi[i]);

        std::vector<double> degree_sum(m, 0.0);
        double edge_sum = 0.0, states = 0.0;
        std::vector<std::uint32_t> wants(m);
        std::function<void(int)> enumerate = [&](int i) {
          if (i == m) {
            for (int r2 = 0; r2 < m; ++r2) {
              degree_sum[r2] += static_cast<double>(brute_degree_sum(wants, r2));
            }
            edge_sum += static_cast<double>(brute_edge_count(wants));
            states += 1.0;
            return;
          }
          for (auto w : choices[i]) {
            wants[i] = w;
            enumerate(i + 1);
          }
        };
        enumerate(0);
        const auto degree = expected_degree(card);
        for (int i = 0; i < m; ++i) check(degree_sum[i] / (states * psi[i]), degree[i]);
        check(edge_sum / states, expected_edge_count(card));
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport evolution_monte_carlo_suite(std::size_t configs, std::size_t samples, int max_m,
                                        int max_n, double tolerance, std::uint64_t seed,
                                        TargetSampling sampling) {
  Timer timer;
  SuiteReport r;
  r.name = sampling == TargetSampling::kConditionedClique ? "expected evolution (MC clique)"
                                                          : "expected evolution (MC indep.)";
  Rng rng(seed);
  std::ostringstream d;
  std::size_t made = 0;
  while (made < configs) {
    const int m = rng.between(2, max_m);
    const int n = rng.between(std::min(4, max_n), max_n);
    std::vector<int> psi(m);
    std::vector<double> q(m);
    for (int i = 0; i < m; ++i) {
      psi[i] = rng.between(1, n - 1);
      q[i] = 0.5 + 0.5 * rng.uniform();
    }
    std::vector<ReceiverId> targeted;
    for (int i = 1; i <= m; ++i) {
      if (rng.bernoulli(0.5)) targeted.push_back(i);
    }
    if (targeted.empty()) targeted.push_back(rng.between(1, m));
    if (targeted.size() > 3) targeted.resize(3);

    std::vector<std::uint32_t> wants(m);
    std::vector<int> packet(m, -1);
    auto draw = [&]() {
      for (int i = 0; i < m; ++i) wants[i] = random_subset(rng, n, psi[i]);
      for (ReceiverId t : targeted) {
        const std::uint32_t w = wants[t - 1];
        int pick = static_cast<int>(rng.index(std::popcount(w)));
        std::uint32_t x = w;
        while (pick-- > 0) x &= x - 1;
        packet[t - 1] = std::countr_zero(x);
      }
      if (sampling == TargetSampling::kIndependent) return true;
      for (std::size_t a = 0; a < targeted.size(); ++a) {
        for (std::size_t b = a + 1; b < targeted.size(); ++b) {
          const int i = targeted[a] - 1, k = targeted[b] - 1;
          if (packet[i] == packet[k]) return false;
          if (wants[k] >> packet[i] & 1U) return false;
          if (wants[i] >> packet[k] & 1U) return false;
        }
      }
      return true;
    };

    // Skip configurations where the conditioning event is too rare to sample.
    std::size_t accepted = 0;
    for (int t = 0; t < 2000; ++t) accepted += draw() ? 1 : 0;
    if (accepted < 20) continue;
    ++made;

    const auto card = Cardinalities::from_wants(n, psi, q);
    const double edges = expected_edge_evolution(card, targeted);
    const auto degree = expected_degree_evolution(card, targeted);

    double edge_sum = 0.0;
    std::vector<double> degree_sum(m, 0.0);
    std::vector<double> degree_n(m, 0.0);
    std::size_t draws = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      while (!draw()) ++draws;
      ++draws;
      for (ReceiverId t : targeted) {
        if (rng.bernoulli(q[t - 1])) wants[t - 1] &= ~(1U << packet[t - 1]);
      }
      edge_sum += static_cast<double>(brute_edge_count(wants));
      for (int i = 0; i < m; ++i) {
        const int left = std::popcount(wants[i]);
        if (left == 0) continue;
        degree_sum[i] += static_cast<double>(brute_degree_sum(wants, i)) / left;
        degree_n[i] += 1.0;
      }
    }

    const double edge_err = relative_error(edge_sum / samples, edges);
    double degree_err = 0.0;
    for (int i = 0; i < m; ++i) {
      const bool is_target = std::find(targeted.begin(), targeted.end(), i + 1) != targeted.end();
      if (is_target && psi[i] == 1) continue;
      if (degree_n[i] > 0) {
        degree_err = std::max(degree_err, relative_error(degree_sum[i] / degree_n[i], degree[i]));
      }
    }
    const double worst = std::max(edge_err, degree_err);
    r.worst_error = std::max(r.worst_error, worst);
    ++r.cases;
    std::ostringstream cfg;
    cfg << "M=" << m << " N=" << n << " psi=(";
    for (int i = 0; i < m; ++i) cfg << (i ? "," : "") << psi[i];
    cfg << ") T={";
    for (std::size_t t = 0; t < targeted.size(); ++t) cfg << (t ? "," : "") << targeted[t];
    cfg << "}";
    d << cfg.str()
      << format(" edges %.4f vs MC %.4f; worst degree err %.4f", edges, edge_sum / samples,
                degree_err)
      << format(" acceptance %.3f", double(samples) / double(draws)) << '\n';
    if (worst > tolerance) ++r.failures;
  }
  r.detail = d.str();
  r.seconds = timer.seconds();
  return r;
}

SuiteReport degree_ordering_suite(std::size_t instances, int max_m, int max_n,
                                  std::uint64_t seed) {
  Timer timer;
  SuiteReport r;
  r.name = "degree ordering";
  Rng rng(seed);
  while (r.cases < instances) {
    const int m = rng.between(2, max_m);
    const int n = rng.between(2, max_n);
    std::vector<int> psi(m);
    for (auto& x : psi) x = rng.between(0, n);
    const ReceiverId i = rng.between(1, m);
    const ReceiverId h = rng.between(1, m);
    if (psi[i - 1] <= psi[h - 1]) continue;
    const auto card = Cardinalities::from_wants(n, psi);
    ++r.cases;
    if (!check_degree_ordering(card, i, h)) ++r.failures;
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport targeting_gain_suite(std::size_t instances, int max_m, int max_n,
                                 std::uint64_t seed) {
  Timer timer;
  SuiteReport r;
  r.name = "targeting gain";
  Rng rng(seed);
  std::size_t inside = 0, outside = 0;
  while (r.cases < instances) {
    const bool member = r.cases % 2 == 0;
    const int m = rng.between(2, max_m);
    const int n = rng.between(std::min(4, max_n), max_n);
    const ReceiverId i = rng.between(1, m);
    std::vector<ReceiverId> targeted;
    for (ReceiverId k = 1; k <= m; ++k) {
      if (k == i ? member : rng.bernoulli(0.5)) targeted.push_back(k);
    }
    if (targeted.empty()) continue;
    std::vector<int> psi(m);
    std::vector<double> q(m);
    for (ReceiverId k = 1; k <= m; ++k) {
      const bool constrained = k != i && std::find(targeted.begin(), targeted.end(), k) !=
                                             targeted.end();
      psi[k - 1] = constrained ? rng.between(2, n / 2) : rng.between(k == i ? 1 : 0, n);
      q[k - 1] = 0.05 + 0.95 * rng.uniform();
    }
    const auto card = Cardinalities::from_wants(n, psi, q);
    if (!targeting_gain_applicable(card, targeted, i)) {
      throw std::logic_error("targeting-gain instance generator broke the preconditions");
    }
    ++r.cases;
    (member ? inside : outside)++;
    if (!check_targeting_gain(card, targeted, i)) ++r.failures;
  }
  r.detail = std::to_string(inside) + " with i in T, " + std::to_string(outside) + " without";
  r.seconds = timer.seconds();
  return r;
}

SuiteReport exact_solver_suite(std::size_t graphs, std::size_t max_vertices,
                               std::uint64_t seed) {
  Timer timer;
  SuiteReport r;
  r.name = "exact max-weight clique";
  Rng rng(seed);
  std::size_t greedy_worse = 0;
  while (r.cases < graphs) {
    const auto state = random_state(rng, rng.between(1, 6), rng.between(1, 6));
    const IdncGraph graph(state);
    if (graph.empty() || graph.size() > max_vertices) continue;

    VertexWeights weights;
    const std::size_t variant = r.cases % 6;
    if (variant < 4) {
      const StrategyKind kinds[] = {StrategyKind::kMaxClique, StrategyKind::kReceptionWeighted,
                                    StrategyKind::kMostWantedPacket,
                                    StrategyKind::kWorstReceiver};
      const double biases[] = {0.5, 1.0, 2.0};
      weights = assign_weights(kinds[variant], graph, state, biases[rng.index(3)]);
    } else {
      weights = assign_weights(StrategyKind::kMaxClique, graph, state);
      for (auto& w : weights.base) w = static_cast<double>(rng.between(1, 3));
      weights.modified = modified_weights(graph, weights.base);
    }

    const auto exact = select_exact(graph, weights, max_vertices);
    const auto brute = graph.to_plan(brute_max_weight_clique(graph, weights.base));
    const auto greedy = select_greedy(graph, weights);
    const double we = plan_weight(graph, weights, exact);
    const double wg = plan_weight(graph, weights, greedy);
    ++r.cases;
    bool ok = exact == brute;
    if (wg > we + 1e-9 * std::max(1.0, we)) ok = false;
    if (wg < we - 1e-9 * std::max(1.0, we)) ++greedy_worse;
    if (!ok) ++r.failures;
    r.worst_error = std::max(r.worst_error, std::abs(we - plan_weight(graph, weights, brute)));
  }
  r.detail = "greedy strictly below exact on " + std::to_string(greedy_worse) + " graphs";
  r.seconds = timer.seconds();
  return r;
}

std::vector<SuiteReport> run_all(const VerifyOptions& o) {
  const double s = o.scale;
  auto seed = [&](std::uint64_t k) { return derive_seed(o.seed, k); };
  std::vector<SuiteReport> out;
  out.push_back(edge_formula_suite(scaled(10'000, s), 8, 8, seed(1)));
  out.push_back(evolution_suite(scaled(1'000, s), 6, 6, seed(2)));
  out.push_back(dominance_suite(5));
  out.push_back(expectation_monte_carlo_suite(20, scaled(100'000, s), 6, 12, 0.01, seed(3)));
  out.push_back(expectation_exhaustive_suite(3, 8, 1e-9, seed(4)));
  out.push_back(evolution_monte_carlo_suite(8, scaled(1'000'000, s), 4, 10, 0.05, seed(5)));
  out.push_back(evolution_monte_carlo_suite(8, scaled(1'000'000, s), 4, 10, 0.05, seed(5),
                                            TargetSampling::kIndependent));
  out.push_back(degree_ordering_suite(scaled(10'000, s), 10, 20, seed(6)));
  out.push_back(targeting_gain_suite(scaled(10'000, s), 10, 20, seed(7)));
  out.push_back(exact_solver_suite(scaled(500, s), 14, seed(8)));
  return out;
}

}  // namespace idnc::verify
