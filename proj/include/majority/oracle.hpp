#pragma once

// Exhaustive ground truth for small graphs. Configurations are integer masks
// (bit i = node i) and the step map is tabulated for all 2^n of them, so
// nothing here shares code with the dynamics engine beyond the Graph type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "majority/graph.hpp"

namespace majority::oracle {

inline constexpr std::size_t kMaxNodes = 22;

using Mask = std::uint32_t;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_budget(const Graph& g) {
  if (g.size() > kMaxNodes)
    throw BudgetExceeded("exhaustive enumeration limited to " + std::to_string(kMaxNodes) +
                         " nodes, graph has " + std::to_string(g.size()));
}

// One synchronous step on a 64-bit mask, for graphs with at most 64 nodes.
class MaskStepper {
 public:
  explicit MaskStepper(const Graph& g) : nbr_mask_(g.size(), 0), degree_(g.size()) {
    if (g.size() > 64) throw BudgetExceeded("mask stepping limited to 64 nodes");
    for (Node u = 0; u < g.size(); ++u) {
      degree_[u] = static_cast<unsigned>(g.degree(u));
      for (Node v : g.neighbors(u)) nbr_mask_[u] |= std::uint64_t{1} << v;
    }
  }

  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t next = 0;
    for (std::size_t u = 0; u < nbr_mask_.size(); ++u) {
      unsigned twice = 2 * static_cast<unsigned>(std::popcount(x & nbr_mask_[u]));
      bool bit = twice > degree_[u] || (twice == degree_[u] && ((x >> u) & 1U));
      next |= std::uint64_t{bit} << u;
    }
    return next;
  }

 private:
  std::vector<std::uint64_t> nbr_mask_;
  std::vector<unsigned> degree_;
};

class StepTable {
 public:
  explicit StepTable(const Graph& g) : n_(g.size()) {
    require_budget(g);
    MaskStepper step(g);
    succ_.resize(std::size_t{1} << n_);
    for (Mask x = 0; x < succ_.size(); ++x) succ_[x] = static_cast<Mask>(step(x));
  }

  std::size_t nodes() const { return n_; }
  std::size_t configurations() const { return succ_.size(); }
  Mask operator()(Mask x) const { return succ_[x]; }

 private:
  std::size_t n_;
  std::vector<Mask> succ_;
};

struct Attractor {
  std::vector<Mask> cycle;  // starts at the smallest mask
  std::size_t basin = 0;    // configurations whose orbit ends here, cycle included
};

struct DynamicsSummary {
  std::string graph_name;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t max_transient = 0;
  std::size_t max_period = 0;
  std::vector<Attractor> attractors;
  // indexed by mask; filled when n <= 20
  std::vector<std::uint16_t> transient;
  std::vector<std::uint8_t> period;

  std::size_t fixed_point_count() const {
    std::size_t c = 0;
    for (const auto& a : attractors) c += a.cycle.size() == 1;
    return c;
  }
  std::vector<const Attractor*> cycles_of_length(std::size_t len) const {
    std::vector<const Attractor*> out;
    for (const auto& a : attractors)
      if (a.cycle.size() == len) out.push_back(&a);
    return out;
  }
};

// Functional-graph decomposition of the step map: every walk ends on a cycle;
// the transient is the distance to it and the period its length.
inline DynamicsSummary enumerate_dynamics(const Graph& g, std::string name = {}) {
  StepTable step(g);
  const std::size_t total = step.configurations();
  constexpr std::uint32_t kUnseen = 0xffffffffU, kOnPath = 0xfffffffeU;
  std::vector<std::uint32_t> transient(total, kUnseen);
  std::vector<std::uint32_t> owner(total, 0);  // attractor index

  DynamicsSummary summary;
  summary.graph_name = std::move(name);
  summary.n = g.size();
  summary.edges = g.edge_count();

  std::vector<Mask> path;
  for (Mask start = 0; start < total; ++start) {
    if (transient[start] != kUnseen) continue;
    path.clear();
    Mask x = start;
    while (transient[x] == kUnseen) {
      transient[x] = kOnPath;
      path.push_back(x);
      x = step(x);
    }
    std::size_t tail = path.size();
    if (transient[x] == kOnPath) {
      // New cycle: it is the suffix of the path beginning at x.
      std::size_t begin = 0;
      while (path[begin] != x) ++begin;
      Attractor a;
      a.cycle.assign(path.begin() + static_cast<long>(begin), path.end());
      std::rotate(a.cycle.begin(), std::min_element(a.cycle.begin(), a.cycle.end()), a.cycle.end());
      const auto id = static_cast<std::uint32_t>(summary.attractors.size());
      for (std::size_t i = begin; i < path.size(); ++i) {
        transient[path[i]] = 0;
        owner[path[i]] = id;
      }
      summary.attractors.push_back(std::move(a));
      tail = begin;
    }
    for (std::size_t i = tail; i-- > 0;) {
      Mask next = step(path[i]);
      transient[path[i]] = transient[next] + 1;
      owner[path[i]] = owner[next];
    }
  }

  for (Mask x = 0; x < total; ++x) {
    auto& a = summary.attractors[owner[x]];
    ++a.basin;
    summary.max_transient = std::max<std::size_t>(summary.max_transient, transient[x]);
    summary.max_period = std::max(summary.max_period, a.cycle.size());
  }
  if (g.size() <= 20) {
    summary.transient.resize(total);
    summary.period.resize(total);
    for (Mask x = 0; x < total; ++x) {
      summary.transient[x] = static_cast<std::uint16_t>(transient[x]);
      summary.period[x] = static_cast<std::uint8_t>(summary.attractors[owner[x]].cycle.size());
    }
  }
  return summary;
}

inline std::vector<Mask> predecessors(const Graph& g, Mask y) {
  StepTable step(g);
  std::vector<Mask> out;
  for (Mask x = 0; x < step.configurations(); ++x)
    if (step(x) == y) out.push_back(x);
  return out;
}

// x^0, x^1, ... up to and including the first repeated configuration.
inline std::vector<Mask> orbit_masks(const StepTable& step, Mask x) {
  std::vector<Mask> seq{x};
  std::map<Mask, std::size_t> seen{{x, 0}};
  while (true) {
    x = step(x);
    seq.push_back(x);
    if (!seen.emplace(x, seq.size() - 1).second) return seq;
  }
}

struct AttractorReport {
  std::vector<Attractor> fixed_points;
  std::vector<Attractor> limit_cycles;
  std::size_t max_period = 0;
};

inline AttractorReport classify_attractors(const Graph& g) {
  auto summary = enumerate_dynamics(g);
  AttractorReport report;
  report.max_period = summary.max_period;
  for (auto& a : summary.attractors)
    (a.cycle.size() == 1 ? report.fixed_points : report.limit_cycles).push_back(std::move(a));
  return report;
}

inline std::string mask_string(Mask x, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if ((x >> i) & 1U) s[i] = '1';
  return s;
}

}  // namespace majority::oracle
