#pragma once

// Synchronous majority dynamics with the tie-keep rule.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "majority/configuration.hpp"
#include "majority/graph.hpp"

namespace majority {

class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_matching(const Graph& g, const Configuration& x) {
  if (x.size() != g.size())
    throw std::invalid_argument("configuration length " + std::to_string(x.size()) +
                                " does not match node count " + std::to_string(g.size()));
}

// 1 if more than half of the neighbours hold 1, the current state on an exact
// tie, else 0.
inline bool majority_rule(const Graph& g, const Configuration& x, Node u) {
  std::size_t ones = 0;
  for (Node v : g.neighbors(u)) ones += x[v];
  std::size_t twice = 2 * ones, d = g.degree(u);
  if (twice > d) return true;
  if (twice == d) return x[u];
  return false;
}

inline Configuration majority_step(const Graph& g, const Configuration& x) {
  require_matching(g, x);
  Configuration next(g.size());
  for (Node u = 0; u < g.size(); ++u) next.set(u, majority_rule(g, x, u));
  return next;
}

// Threshold form sgn(sum_v a_uv x_v - d(u)/2) with a_uu = 1 for even d(u).
// Kept separate from majority_step so the two can be compared.
inline Configuration majority_step_threshold(const Graph& g, const Configuration& x) {
  require_matching(g, x);
  Configuration next(g.size());
  for (Node u = 0; u < g.size(); ++u) {
    long twice_sum = 0;
    for (Node v : g.neighbors(u)) twice_sum += 2 * static_cast<long>(x[v]);
    if (g.degree(u) % 2 == 0) twice_sum += 2 * static_cast<long>(x[u]);
    next.set(u, twice_sum - static_cast<long>(g.degree(u)) > 0);
  }
  return next;
}

struct Orbit {
  // x^0 .. x^{transient + period}
  std::vector<Configuration> states;
  std::size_t transient = 0;
  std::size_t period = 0;

  const Configuration& attractor_state(std::uint64_t t) const {
    if (t < states.size()) return states[t];
    return states[transient + (t - transient) % period];
  }
};

inline std::size_t minimum_horizon(const Graph& g) { return g.edge_count() + 2; }
inline std::size_t default_horizon(const Graph& g) { return 2 * g.edge_count() + g.size() + 4; }

// Detects repeats against x^{t-1} and x^{t-2}; a repeat further back is
// reported as a period violation instead of being silently accepted.
inline Orbit orbit(const Graph& g, const Configuration& x, std::size_t horizon) {
  require_matching(g, x);
  if (horizon < minimum_horizon(g))
    throw std::invalid_argument("horizon " + std::to_string(horizon) + " is below |E|+2 = " +
                                std::to_string(minimum_horizon(g)));
  Orbit result;
  result.states.push_back(x);
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> seen;
  seen.emplace(x, 0);
  for (std::size_t t = 1; t <= horizon; ++t) {
    Configuration next = majority_step(g, result.states.back());
    result.states.push_back(next);
    const auto& s = result.states;
    if (next == s[t - 1]) {
      result.transient = t - 1;
      result.period = 1;
      return result;
    }
    if (t >= 2 && next == s[t - 2]) {
      result.transient = t - 2;
      result.period = 2;
      return result;
    }
    auto [it, inserted] = seen.emplace(std::move(next), t);
    if (!inserted)
      throw DynamicsError("period violation: state at t=" + std::to_string(t) +
                          " repeats t=" + std::to_string(it->second));
  }
  throw DynamicsError("no attractor within horizon " + std::to_string(horizon));
}

inline Orbit orbit(const Graph& g, const Configuration& x) {
  return orbit(g, x, default_horizon(g));
}

inline Configuration state_at(const Graph& g, const Configuration& x, std::uint64_t t) {
  return orbit(g, x).attractor_state(t);
}

// A two-step change c_u^t != 0 is recorded at time t+1, the step at which the
// new state x_u^{t+1} is first observed. Its parity class is that of t+1.
struct ChangeEvent {
  std::uint64_t time = 0;
  bool state = false;

  friend bool operator==(const ChangeEvent&, const ChangeEvent&) = default;
};

// Per node, the changes x_u^{t+1} != x_u^{t-1} for t >= 1, split by parity of
// the recorded time.
struct ChangeLog {
  std::vector<std::vector<ChangeEvent>> even;
  std::vector<std::vector<ChangeEvent>> odd;

  std::size_t total(Node u) const { return even[u].size() + odd[u].size(); }
};

inline ChangeLog two_step_changes(const Orbit& orb) {
  const std::size_t n = orb.states.front().size();
  ChangeLog log{std::vector<std::vector<ChangeEvent>>(n), std::vector<std::vector<ChangeEvent>>(n)};
  // c^t vanishes for t > transient, where x^{t+1} = x^{t-1}.
  for (std::size_t t = 1; t + 1 < orb.states.size(); ++t) {
    const auto& before = orb.states[t - 1];
    const auto& after = orb.states[t + 1];
    for (Node u = 0; u < n; ++u) {
      if (before[u] != after[u])
        ((t + 1) % 2 == 0 ? log.even : log.odd)[u].push_back({t + 1, after[u]});
    }
  }
  return log;
}

inline ChangeLog two_step_changes(const Graph& g, const Configuration& x) {
  return two_step_changes(orbit(g, x));
}

}  // namespace majority
