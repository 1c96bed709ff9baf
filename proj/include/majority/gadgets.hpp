#pragma once

// Timer, sequencer and amplifier gadgets, their composition into
// set-disjointness instances, and the degree-2 configurations on paths and
// cycles.
//
// Every gadget is a graph with an initial configuration and a list of ports:
// the only nodes allowed to gain neighbours outside the gadget, each with a
// capacity of 1 or 2 outside neighbours.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "majority/configuration.hpp"
#include "majority/dynamics.hpp"
#include "majority/graph.hpp"

namespace majority::gadgets {

struct Port {
  Node node = 0;
  unsigned capacity = 1;
};

struct GadgetInstance {
  Graph g;
  Configuration init;
  std::map<std::string, Node> distinguished;
  std::vector<Port> ports;

  Node at(const std::string& name) const {
    auto it = distinguished.find(name);
    if (it == distinguished.end()) throw std::out_of_range("no distinguished node " + name);
    return it->second;
  }
};

// Accumulates nodes, edges and initial states while a gadget is being wired.
class Assembly {
 public:
  Node node(bool state) {
    states_.push_back(state);
    return builder_.add_node();
  }
  void edge(Node u, Node v) { builder_.add_edge(u, v); }
  std::array<Node, 3> triangle(bool state) {
    std::array<Node, 3> t{node(state), node(state), node(state)};
    builder_.add_triangle(t[0], t[1], t[2]);
    return t;
  }
  void name(const std::string& key, Node v) {
    if (!names_.emplace(key, v).second) throw std::logic_error("duplicate gadget name " + key);
  }
  Node named(const std::string& key) const {
    auto it = names_.find(key);
    if (it == names_.end()) throw std::out_of_range("no distinguished node " + key);
    return it->second;
  }
  void port(Node v, unsigned capacity) { ports_.push_back({v, capacity}); }

  // Copies `part` in; its names are prefixed and its ports are dropped (the
  // caller decides which of them get wired).
  Node append(const GadgetInstance& part, const std::string& prefix) {
    const Node offset = static_cast<Node>(states_.size());
    for (Node v = 0; v < part.g.size(); ++v) node(part.init[v]);
    for (auto [u, v] : part.g.edges()) edge(offset + u, offset + v);
    for (const auto& [key, v] : part.distinguished) name(prefix + key, offset + v);
    return offset;
  }

  GadgetInstance finish() const {
    Configuration init(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) init.set(i, states_[i]);
    return {builder_.build(), init, names_, ports_};
  }

  std::size_t size() const { return states_.size(); }

 private:
  GraphBuilder builder_;
  std::vector<bool> states_;
  std::map<std::string, Node> names_;
  std::vector<Port> ports_;
};

enum class TimerKind { zero_to_one, one_to_zero };

inline std::string timer_name(std::size_t i, int j) {
  return "v" + std::to_string(i) + "^" + std::to_string(j);
}

// Pairs v_i^1, v_i^2 (i = 1..n) start in the initial state and switch to the
// triggering state at time i. Each has two neighbours in a private triangle in
// the triggering state, and is adjacent to both members of pair i-1 (to two
// nodes of an anchor triangle in the triggering state for i = 1) and of pair
// i+1 (to two nodes of a terminal triangle in the initial state for i = n).
// 8n + 6 nodes.
inline GadgetInstance build_timer(std::size_t n, TimerKind kind = TimerKind::zero_to_one) {
  if (n == 0) throw std::invalid_argument("timer needs n >= 1");
  const bool trigger = kind == TimerKind::zero_to_one;
  const bool initial = !trigger;
  Assembly a;
  auto anchor = a.triangle(trigger);
  std::vector<std::array<Node, 2>> pairs;
  for (std::size_t i = 1; i <= n; ++i) {
    std::array<Node, 2> pair{a.node(initial), a.node(initial)};
    for (int j = 0; j < 2; ++j) {
      auto own = a.triangle(trigger);
      a.edge(pair[j], own[0]);
      a.edge(pair[j], own[1]);
      a.name(timer_name(i, j + 1), pair[j]);
      a.port(pair[j], 1);
      const std::array<Node, 2> below =
          i == 1 ? std::array<Node, 2>{anchor[0], anchor[1]} : pairs.back();
      a.edge(pair[j], below[0]);
      a.edge(pair[j], below[1]);
    }
    pairs.push_back(pair);
  }
  auto terminal = a.triangle(initial);
  for (Node p : pairs.back()) {
    a.edge(p, terminal[0]);
    a.edge(p, terminal[1]);
  }
  return a.finish();
}

// Node "v" follows u: state u_1 at time 0 and u_t at time t for 1 <= t <= |u|,
// then u_|u| forever, whatever its one outside neighbour does.
//
// Working relative to u_1: v is wired to both nodes of pair s of an "up" timer
// for every position s with u_s = u_1 != u_{s+1}, and to both nodes of pair t
// of a "down" timer for every position t with u_t != u_1 = u_{t+1}. With equal
// numbers of up and down switches a triangle in state u_1 is added with two of
// its nodes on v. Timers only contain the pairs that are needed.
inline GadgetInstance build_sequencer(const std::vector<bool>& u) {
  if (u.empty()) throw std::invalid_argument("sequencer needs a non-empty sequence");
  const bool base = u.front();
  std::vector<std::size_t> ups, downs;  // 1-based positions
  for (std::size_t j = 1; j < u.size(); ++j) {
    if (u[j - 1] == base && u[j] != base) ups.push_back(j);
    if (u[j - 1] != base && u[j] == base) downs.push_back(j);
  }

  const TimerKind up_kind = base ? TimerKind::one_to_zero : TimerKind::zero_to_one;
  const TimerKind down_kind = base ? TimerKind::zero_to_one : TimerKind::one_to_zero;

  Assembly a;
  const Node v = a.node(base);
  a.name("v", v);
  a.port(v, 1);
  auto wire = [&](const std::vector<std::size_t>& positions, TimerKind kind,
                  const std::string& prefix) {
    if (positions.empty()) return;
    GadgetInstance timer = build_timer(positions.back(), kind);
    a.append(timer, prefix);
    for (std::size_t s : positions) {
      a.edge(v, a.named(prefix + timer_name(s, 1)));
      a.edge(v, a.named(prefix + timer_name(s, 2)));
    }
  };
  wire(ups, up_kind, "up.");
  wire(downs, down_kind, "down.");
  if (ups.size() == downs.size()) {
    auto extra = a.triangle(base);
    a.edge(v, extra[0]);
    a.edge(v, extra[1]);
  }
  return a.finish();
}

inline std::vector<bool> parse_bits(const std::string& s) {
  std::vector<bool> bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string must consist of 0 and 1");
    bits.push_back(c == '1');
  }
  return bits;
}

// alpha = 4/7 (1 - eps) with eps = 1/16.
inline constexpr std::int64_t kAmplifierAlphaNum = 15;
inline constexpr std::int64_t kAmplifierAlphaDen = 28;
// Least strip count whose initial share of 0s, (8s+1)/(14s+4), reaches alpha.
inline constexpr std::size_t kAmplifierMinStrips = 3;
inline constexpr std::size_t kAmplifierStripNodes = 14;

inline std::size_t amplifier_size(std::size_t strips) { return kAmplifierStripNodes * strips + 4; }

// Node "v" (state 0) sits on one node of a pendant triangle of 1s and on both
// rails of strip 1. Strip i has two adjacent rail nodes in state 0, each joined
// to the same-side rail of strips i-1 and i+1 and to two base nodes of its own
// triangle of 1s; the apex of that triangle touches the apex of a triangle of
// 0s. Two outside neighbours of v in state 1 flip v, which then flips the
// rails strip by strip.
inline GadgetInstance build_amplifier(std::size_t strips) {
  if (strips < kAmplifierMinStrips)
    throw std::invalid_argument("amplifier needs at least " + std::to_string(kAmplifierMinStrips) +
                                " strips");
  Assembly a;
  const Node v = a.node(false);
  a.name("v", v);
  a.port(v, 2);
  auto pendant = a.triangle(true);
  a.edge(v, pendant[0]);

  std::array<Node, 2> previous{v, v};
  for (std::size_t i = 1; i <= strips; ++i) {
    std::array<Node, 2> rail{a.node(false), a.node(false)};
    a.edge(rail[0], rail[1]);
    for (int side = 0; side < 2; ++side) {
      a.name("rail" + std::to_string(i) + (side == 0 ? "L" : "R"), rail[side]);
      a.edge(rail[side], previous[side]);
      auto ones = a.triangle(true);
      auto zeros = a.triangle(false);
      a.edge(rail[side], ones[0]);
      a.edge(rail[side], ones[1]);
      a.edge(ones[2], zeros[2]);
    }
    previous = rail;
  }
  return a.finish();
}

struct DisjInstance {
  std::vector<bool> a;
  std::vector<bool> b;
  GadgetInstance h;
  std::size_t sequencer_a_nodes = 0;
  std::size_t sequencer_b_nodes = 0;
  std::size_t strips = 0;
  std::uint64_t T = 0;

  // 1 iff some coordinate has a_i = b_i = 1.
  bool intersects() const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && b[i]) return true;
    return false;
  }
};

// alpha*M > (1-alpha)*M + extra, with M the amplifier node count.
inline bool amplifier_dominates(std::size_t strips, std::size_t extra) {
  const auto m = static_cast<std::int64_t>(amplifier_size(strips));
  return (2 * kAmplifierAlphaNum - kAmplifierAlphaDen) * m >
         kAmplifierAlphaDen * static_cast<std::int64_t>(extra);
}

inline constexpr std::uint64_t kDisjConvergenceFactor = 1;

inline DisjInstance build_disj_instance(const std::vector<bool>& a, const std::vector<bool>& b) {
  if (a.empty() || a.size() != b.size())
    throw std::invalid_argument("a and b must be non-empty and of equal length");
  GadgetInstance seq_a = build_sequencer(a);
  GadgetInstance seq_b = build_sequencer(b);
  std::size_t strips = kAmplifierMinStrips;
  while (!amplifier_dominates(strips, seq_a.g.size() + seq_b.g.size())) ++strips;
  GadgetInstance amp = build_amplifier(strips);

  Assembly asm_h;
  const Node off_a = asm_h.append(seq_a, "A.");
  const Node off_b = asm_h.append(seq_b, "B.");
  const Node off_amp = asm_h.append(amp, "amp.");
  asm_h.edge(off_amp + amp.at("v"), off_a + seq_a.at("v"));
  asm_h.edge(off_amp + amp.at("v"), off_b + seq_b.at("v"));

  DisjInstance inst{a, b, asm_h.finish(), seq_a.g.size(), seq_b.g.size(), strips, 0};
  inst.T = kDisjConvergenceFactor * inst.h.g.size();
  return inst;
}

// Host graph = gadget plus one driver node per unit of port capacity. Driver
// states come from `script(t, driver_index)` at every step instead of the
// majority rule. Returns the gadget part of x^0..x^horizon.
template <class Script>
std::vector<Configuration> simulate_with_drivers(const GadgetInstance& gadget, std::size_t horizon,
                                                 Script&& script) {
  const std::size_t n = gadget.g.size();
  GraphBuilder host;
  host.add_nodes(n);
  for (auto [u, v] : gadget.g.edges()) host.add_edge(u, v);
  std::vector<Node> drivers;
  for (const auto& p : gadget.ports)
    for (unsigned c = 0; c < p.capacity; ++c) {
      Node d = host.add_node();
      host.add_edge(p.node, d);
      drivers.push_back(d);
    }
  Graph hg = host.build();

  Configuration x(hg.size());
  for (Node v = 0; v < n; ++v) x.set(v, gadget.init[v]);
  auto drive = [&](Configuration& cfg, std::size_t t) {
    for (std::size_t i = 0; i < drivers.size(); ++i) cfg.set(drivers[i], script(t, i));
  };
  drive(x, 0);

  auto restrict = [n](const Configuration& cfg) {
    Configuration part(n);
    for (Node v = 0; v < n; ++v) part.set(v, cfg[v]);
    return part;
  };
  std::vector<Configuration> trajectory{restrict(x)};
  for (std::size_t t = 1; t <= horizon; ++t) {
    x = majority_step(hg, x);
    drive(x, t);
    trajectory.push_back(restrict(x));
  }
  return trajectory;
}

inline std::size_t driver_count(const GadgetInstance& gadget) {
  std::size_t total = 0;
  for (const auto& p : gadget.ports) total += p.capacity;
  return total;
}

// On C_n: the pattern 1,1,0,1,0,1,... rotated so that its adjacent 1s sit at
// positions k and k+1 (1-based, cyclic). n = 4, k = 1 gives 1101.
inline Configuration path_sweep_config(std::size_t n, std::size_t k) {
  if (n < 3) throw std::invalid_argument("path sweep configuration needs n >= 3");
  if (k < 1 || k > n) throw std::invalid_argument("k must lie in [1, n]");
  Configuration x(n);
  for (std::size_t j = 0; j < n; ++j) {
    const bool bit = j < 2 || j % 2 == 1;
    x.set((k - 1 + j) % n, bit);
  }
  return x;
}

// 0101... on C_n for even n.
inline Configuration alternating_config(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("alternating configuration needs even n");
  Configuration y(n);
  for (std::size_t i = 1; i < n; i += 2) y.set(i, true);
  return y;
}

}  // namespace majority::gadgets
