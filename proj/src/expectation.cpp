#include "idnc/expectation.hpp"

#include <algorithm>
#include <stdexcept>

namespace idnc {

Cardinalities Cardinalities::from_state(const FeedbackState& state) {
  if (!state.partitioned()) {
    throw std::invalid_argument("cardinalities need every packet wanted or held");
  }
  Cardinalities c;
  c.num_packets = state.num_packets();
  for (ReceiverId i = 1; i <= state.num_receivers(); ++i) {
    c.wants.push_back(state.wants_count(i));
    c.has.push_back(state.has_count(i));
  }
  c.reception_probs.assign(state.reception_probs().begin(), state.reception_probs().end());
  return c;
}

Cardinalities Cardinalities::from_wants(int num_packets, std::vector<int> wants,
                                        std::vector<double> reception_probs) {
  Cardinalities c;
  c.num_packets = num_packets;
  c.wants = std::move(wants);
  for (int w : c.wants) c.has.push_back(num_packets - w);
  c.reception_probs = std::move(reception_probs);
  if (c.reception_probs.empty()) c.reception_probs.assign(c.wants.size(), 1.0);
  c.validate();
  return c;
}

void Cardinalities::validate() const {
  if (num_packets < 1) throw std::invalid_argument("num_packets must be >= 1");
  if (wants.size() != has.size() || wants.size() != reception_probs.size()) {
    throw std::invalid_argument("cardinality vectors differ in length");
  }
  for (std::size_t i = 0; i < wants.size(); ++i) {
    if (wants[i] < 0 || has[i] < 0 || wants[i] + has[i] != num_packets) {
      throw std::invalid_argument("psi_i + rho_i must equal N");
    }
    if (!(reception_probs[i] > 0.0 && reception_probs[i] <= 1.0)) {
      throw std::invalid_argument("reception probability outside (0, 1]");
    }
  }
}

double expected_common_wants(int psi_i, int psi_k, int num_packets) {
  return static_cast<double>(psi_i) * psi_k / num_packets;
}

double expected_held_and_common(int psi_i, int psi_k, int num_packets) {
  if (num_packets < 2) return 0.0;
  const int rho_k = num_packets - psi_k;
  return static_cast<double>(rho_k) * psi_k * (psi_i - 1) /
         (static_cast<double>(num_packets) * (num_packets - 1));
}

namespace {

// 1/(N-1), or 0 for single-packet frames where every rho product vanishes.
double inv_n_minus_1(int n) { return n < 2 ? 0.0 : 1.0 / (n - 1); }

std::vector<bool> membership(const Cardinalities& c, std::span<const ReceiverId> t) {
  std::vector<bool> in(c.num_receivers(), false);
  for (ReceiverId r : t) {
    if (r < 1 || r > c.num_receivers()) throw std::invalid_argument("unknown receiver");
    in[r - 1] = true;
  }
  return in;
}

}  // namespace

std::vector<double> expected_degree(const Cardinalities& c) {
  c.validate();
  const double n = c.num_packets;
  const double inv = inv_n_minus_1(c.num_packets);
  const int m = c.num_receivers();
  std::vector<double> out(m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      if (k == i) continue;
      out[i] += c.wants[k] / n * (1.0 + c.has[k] * static_cast<double>(c.has[i]) * inv);
    }
  }
  return out;
}

double expected_edge_count(const Cardinalities& c) {
  const auto degree = expected_degree(c);
  double sum = 0.0;
  for (int i = 0; i < c.num_receivers(); ++i) sum += c.wants[i] * degree[i];
  return 0.5 * sum;
}

double xi(const Cardinalities& c, ReceiverId k) {
  return c.psi(k) * static_cast<double>(c.rho(k)) * inv_n_minus_1(c.num_packets) /
         c.num_packets;
}

double phi(const Cardinalities& c, ReceiverId k, ReceiverId i, double x) {
  const double slack = c.rho(k) - c.psi(k) + 1;
  return c.q(k) / c.num_packets *
         (1.0 + slack * (c.rho(i) + x) * inv_n_minus_1(c.num_packets));
}

ExpectedEvolutionTerms evolution_terms(const Cardinalities& c,
                                       std::span<const ReceiverId> targeted) {
  c.validate();
  const int m = c.num_receivers();
  ExpectedEvolutionTerms t;
  t.targeted = membership(c, targeted);
  t.expected_degree = expected_degree(c);
  t.xi.resize(m);
  for (ReceiverId k = 1; k <= m; ++k) t.xi[k - 1] = xi(c, k);
  t.alpha.assign(m, 0.0);
  t.beta.assign(m, 0.0);
  t.gamma.assign(m, 0.0);
  for (ReceiverId i = 1; i <= m; ++i) {
    double xi_others = 0.0;
    for (ReceiverId k = 1; k <= m; ++k) {
      if (k != i) xi_others += t.xi[k - 1];
    }
    double phi_q = 0.0, phi_0 = 0.0, phi_1 = 0.0;
    for (ReceiverId k : targeted) {
      if (k == i) continue;
      phi_q += phi(c, k, i, c.q(i));
      phi_0 += phi(c, k, i, 0.0);
      phi_1 += phi(c, k, i, 1.0);
    }
    t.alpha[i - 1] = c.q(i) * xi_others - phi_q;
    t.beta[i - 1] = -phi_0;
    t.gamma[i - 1] = xi_others - phi_1;
  }
  return t;
}

std::vector<double> expected_degree_evolution(const Cardinalities& c,
                                              std::span<const ReceiverId> targeted) {
  const auto t = evolution_terms(c, targeted);
  std::vector<double> out = t.expected_degree;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += t.targeted[i] ? t.alpha[i] : t.beta[i];
  }
  return out;
}

double expected_edge_evolution(const Cardinalities& c,
                               std::span<const ReceiverId> targeted) {
  const auto t = evolution_terms(c, targeted);
  double result = 0.0;
  for (int i = 0; i < c.num_receivers(); ++i) result += c.wants[i] * t.expected_degree[i];
  result *= 0.5;
  for (int i = 0; i < c.num_receivers(); ++i) {
    const double psi = c.wants[i];
    const double q = c.reception_probs[i];
    if (t.targeted[i]) {
      if (c.wants[i] == 0) {
        throw std::invalid_argument("a receiver with an empty Wants set cannot be targeted");
      }
      result -= 0.5 * q * t.expected_degree[i];
      result += 0.5 * psi * (t.alpha[i] - q * t.gamma[i] / psi);
    } else {
      result += 0.5 * psi * t.beta[i];
    }
  }
  return result;
}

bool check_degree_ordering(const Cardinalities& c, ReceiverId i, ReceiverId h) {
  if (!(c.psi(i) > c.psi(h))) throw std::invalid_argument("requires psi_i > psi_h");
  const auto degree = expected_degree(c);
  return degree[h - 1] > degree[i - 1];
}

bool targeting_gain_applicable(const Cardinalities& c,
                               std::span<const ReceiverId> targeted, ReceiverId i) {
  if (c.psi(i) <= 0) return false;
  return std::all_of(targeted.begin(), targeted.end(), [&](ReceiverId k) {
    return k == i || (c.psi(k) > 1 && c.psi(k) <= c.rho(k));
  });
}

bool check_targeting_gain(const Cardinalities& c, std::span<const ReceiverId> targeted,
                          ReceiverId i) {
  if (!targeting_gain_applicable(c, targeted, i)) {
    throw std::invalid_argument("targeting-gain preconditions do not hold");
  }
  const auto t = evolution_terms(c, targeted);
  const double lhs = t.alpha[i - 1] - c.q(i) * t.gamma[i - 1] / c.psi(i);
  // Ties are exact for psi_i = 1, T = {i}.
  return lhs >= t.beta[i - 1] - 1e-12;
}

}  // namespace idnc
