#pragma once

// Energy functionals along orbits and two-step change statistics.
//
// Energies are exact rationals. They are accumulated as integer counts of
// mismatching ordered pairs per distance class and combined with alpha^k at
// the end.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "majority/configuration.hpp"
#include "majority/dynamics.hpp"
#include "majority/graph.hpp"
#include "majority/rng.hpp"

namespace majority {

using Rational = boost::multiprecision::cpp_rational;

enum class EnergyKind { global, centered };

struct EnergySeries {
  EnergyKind kind = EnergyKind::global;
  Node center = 0;
  Rational alpha = 1;
  // values[t] = sum_{u,v} w_uv |x_u^{t+1} - x_v^t| for t = 0..transient+period
  std::vector<Rational> values;
};

inline std::size_t ceil_log2(std::uint64_t v) {
  std::size_t bits = 0;
  while ((std::uint64_t{1} << bits) < v && bits < 64) ++bits;
  return bits;
}

namespace detail {

// counts[k] = number of ordered pairs (u,v) with a_uv = 1, class k and
// x_u^{t+1} != x_v^t. `cls` maps a pair to its class.
template <class ClassFn>
std::vector<std::uint64_t> mismatch_counts(const Graph& g, const Configuration& now,
                                           const Configuration& next, std::size_t classes,
                                           ClassFn cls) {
  std::vector<std::uint64_t> counts(classes, 0);
  for (Node u = 0; u < g.size(); ++u) {
    for (Node v : g.neighbors(u))
      if (next[u] != now[v]) ++counts[cls(u, v)];
    if (g.degree(u) % 2 == 0 && next[u] != now[u]) ++counts[cls(u, u)];
  }
  return counts;
}

}  // namespace detail

inline EnergySeries energy_series(const Graph& g, const Orbit& orb) {
  EnergySeries series;
  const std::size_t last = orb.transient + orb.period;
  for (std::size_t t = 0; t <= last; ++t) {
    auto counts = detail::mismatch_counts(g, orb.attractor_state(t), orb.attractor_state(t + 1), 1,
                                          [](Node, Node) { return std::size_t{0}; });
    series.values.emplace_back(counts[0]);
  }
  return series;
}

inline EnergySeries energy_series(const Graph& g, const Configuration& x) {
  return energy_series(g, orbit(g, x));
}

// Delta/(Delta+2), or 1/2 when Delta <= 3.
inline Rational default_alpha(const Graph& g) {
  auto delta = static_cast<long>(g.max_degree());
  if (delta <= 3) return Rational(1, 2);
  return Rational(delta, delta + 2);
}

inline EnergySeries centered_energy_series(const Graph& g, const Orbit& orb, Node r,
                                           const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0,1)");
  if (r >= g.size()) throw std::invalid_argument("center out of range");
  auto dist = g.distances_from(r);
  const std::size_t classes = *std::max_element(dist.begin(), dist.end()) + 1;
  std::vector<Rational> weight(classes);
  weight[0] = 1;
  for (std::size_t k = 1; k < classes; ++k) weight[k] = weight[k - 1] * alpha;

  EnergySeries series{EnergyKind::centered, r, alpha, {}};
  const std::size_t last = orb.transient + orb.period;
  for (std::size_t t = 0; t <= last; ++t) {
    auto counts = detail::mismatch_counts(
        g, orb.attractor_state(t), orb.attractor_state(t + 1), classes,
        [&](Node u, Node v) { return std::min(dist[u], dist[v]); });
    Rational total = 0;
    for (std::size_t k = 0; k < classes; ++k)
      if (counts[k] != 0) total += weight[k] * counts[k];
    series.values.push_back(total);
  }
  return series;
}

inline EnergySeries centered_energy_series(const Graph& g, const Configuration& x, Node r,
                                           const Rational& alpha) {
  return centered_energy_series(g, orbit(g, x), r, alpha);
}

// c_u^t = [x_u^{t+1} != x_u^{t-1}] for t >= 1.
inline bool two_step_change(const Orbit& orb, Node u, std::uint64_t t) {
  return orb.attractor_state(t + 1)[u] != orb.attractor_state(t - 1)[u];
}

// Empty when E^{t+1} <= E^t - 1 for t < transient, E is constant from the
// transient on, and 0 <= E^t <= 2|E| + #even-degree nodes.
inline std::optional<std::string> check_global_energy(const Graph& g, const Orbit& orb,
                                                      const EnergySeries& series) {
  std::size_t even = 0;
  for (Node u = 0; u < g.size(); ++u) even += g.degree(u) % 2 == 0;
  const Rational cap = 2 * g.edge_count() + even;
  for (std::size_t t = 0; t < series.values.size(); ++t) {
    const auto& e = series.values[t];
    if (e < 0 || e > cap) return "energy out of range at t=" + std::to_string(t);
    if (t + 1 == series.values.size()) break;
    const auto& next = series.values[t + 1];
    if (t < orb.transient && next > e - 1)
      return "energy did not drop by 1 at t=" + std::to_string(t);
    if (t >= orb.transient && next != e)
      return "energy not constant on attractor at t=" + std::to_string(t);
  }
  return std::nullopt;
}

// Empty when E_r^t - E_r^{t-1} <= -c_r^t for every t >= 1 and
// sum_t c_r^t <= E_r^0.
inline std::optional<std::string> check_centered_energy(const Orbit& orb,
                                                        const EnergySeries& series) {
  const Node r = series.center;
  std::size_t changes = 0;
  for (std::size_t t = 1; t < series.values.size(); ++t) {
    const bool c = two_step_change(orb, r, t);
    changes += c;
    if (series.values[t] - series.values[t - 1] > (c ? Rational(-1) : Rational(0))) {
      std::ostringstream msg;
      msg << "centered energy step at t=" << t << " is " << (series.values[t] - series.values[t - 1])
          << " with c_r^t=" << c;
      return msg.str();
    }
  }
  if (Rational(changes) > series.values.front()) return "two-step changes exceed E_r^0";
  return std::nullopt;
}

struct ChangeStats {
  std::string family;
  std::size_t n = 0;
  std::vector<std::size_t> per_node;  // maximised over the sampled configurations
  std::size_t max_changes = 0;
};

inline ChangeStats change_stats(const Graph& g, const std::vector<Configuration>& xs,
                                std::string family = {}) {
  ChangeStats stats{std::move(family), g.size(), std::vector<std::size_t>(g.size(), 0), 0};
  for (const auto& x : xs) {
    ChangeLog log = two_step_changes(g, x);
    for (Node u = 0; u < g.size(); ++u) stats.per_node[u] = std::max(stats.per_node[u], log.total(u));
  }
  if (!stats.per_node.empty())
    stats.max_changes = *std::max_element(stats.per_node.begin(), stats.per_node.end());
  return stats;
}

// Bits of one (state, time) entry when times range over [0, N^2].
inline std::size_t change_entry_bits(std::uint64_t size_bound) {
  return 1 + ceil_log2(size_bound * size_bound + 1);
}

// Two anchors plus one entry per change.
inline std::size_t honest_certificate_bits(std::size_t changes, std::uint64_t size_bound) {
  return (2 + changes) * change_entry_bits(size_bound);
}

struct GraphFamily {
  std::string name;
  // size parameter -> graph (e.g. side length for tori, node count otherwise)
  std::function<Graph(std::size_t, std::mt19937_64&)> make;
};

inline std::optional<GraphFamily> family_by_name(const std::string& name) {
  if (name == "torus")
    return GraphFamily{name, [](std::size_t s, std::mt19937_64&) { return generators::torus(s, s); }};
  if (name == "grid")
    return GraphFamily{name, [](std::size_t s, std::mt19937_64&) { return generators::grid(s, s); }};
  if (name == "path")
    return GraphFamily{name, [](std::size_t n, std::mt19937_64&) { return generators::path(n); }};
  if (name == "cycle")
    return GraphFamily{name, [](std::size_t n, std::mt19937_64&) { return generators::cycle(n); }};
  if (name == "cubic")
    return GraphFamily{name, [](std::size_t n, std::mt19937_64& rng) {
                         return generators::random_cubic(n, rng);
                       }};
  return std::nullopt;
}

struct ScalingRow {
  std::string family;
  std::size_t n = 0;
  std::size_t sample_count = 0;
  std::size_t max_changes = 0;
  std::size_t honest_cert_bits = 0;
  std::uint64_t seed = 0;
};

inline std::vector<ScalingRow> scaling_experiment(const GraphFamily& family,
                                                  const std::vector<std::size_t>& sizes,
                                                  std::size_t samples, std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
    throw std::invalid_argument("sizes must be strictly increasing");
  SeedSplitter root(seed);
  std::vector<ScalingRow> rows;
  for (std::size_t size : sizes) {
    auto rng = root.split(size).engine();
    Graph g = family.make(size, rng);
    std::vector<Configuration> xs;
    for (std::size_t s = 0; s < samples; ++s) xs.push_back(random_configuration(g.size(), rng));
    ChangeStats stats = change_stats(g, xs, family.name);
    rows.push_back({family.name, g.size(), samples, stats.max_changes,
                    honest_certificate_bits(stats.max_changes, g.size()), seed});
  }
  return rows;
}

inline std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "family,n,sample_count,max_changes,honest_cert_bits,seed\n";
  for (const auto& r : rows)
    out << r.family << ',' << r.n << ',' << r.sample_count << ',' << r.max_changes << ','
        << r.honest_cert_bits << ',' << r.seed << '\n';
  return out.str();
}

}  // namespace majority
