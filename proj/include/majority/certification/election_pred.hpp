#pragma once

// Change-list certification of "x reaches y after T steps".
//
// Each node carries two lists of (state, time) entries, one per time parity.
// An entry (q, t) says the node is in state q from time t on, at every time of
// t's parity, until the next entry of that parity. The even list starts with
// (x_v, 0) and the odd list with (x_v^1, 1).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "majority/analysis.hpp"
#include "majority/certification/harness.hpp"
#include "majority/configuration.hpp"
#include "majority/dynamics.hpp"
#include "majority/graph.hpp"

namespace majority::cert {

struct ChangeEntry {
  bool state = false;
  std::uint64_t time = 0;

  friend bool operator==(const ChangeEntry&, const ChangeEntry&) = default;
};

struct ChangeCertificate {
  std::vector<ChangeEntry> even;
  std::vector<ChangeEntry> odd;

  std::size_t entry_count() const { return even.size() + odd.size(); }
  friend bool operator==(const ChangeCertificate&, const ChangeCertificate&) = default;
};

struct PredInstance {
  Graph g;
  Configuration x;
  Configuration y;
  std::uint64_t T = 1;
};

inline std::size_t certificate_bits(const ChangeCertificate& c, std::uint64_t size_bound) {
  return c.entry_count() * change_entry_bits(size_bound);
}

// Empty if the lists are well formed: sorted, of the right parity, alternating
// in state, anchored at times 0 and 1, and within [0, N^2].
inline std::optional<std::string> malformation(const ChangeCertificate& c,
                                               std::uint64_t size_bound) {
  const std::uint64_t max_time = size_bound * size_bound;
  auto check = [&](const std::vector<ChangeEntry>& list, std::uint64_t anchor,
                   const char* name) -> std::optional<std::string> {
    if (list.empty() || list.front().time != anchor)
      return std::string("missing-anchor:") + name;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].time % 2 != anchor) return std::string("wrong-parity:") + name;
      if (list[i].time > max_time) return std::string("time-out-of-range:") + name;
      if (i > 0 && list[i].time <= list[i - 1].time) return std::string("unsorted:") + name;
      if (i > 0 && list[i].state == list[i - 1].state)
        return std::string("non-alternating:") + name;
    }
    return std::nullopt;
  };
  if (auto bad = check(c.even, 0, "even")) return bad;
  return check(c.odd, 1, "odd");
}

// State at time t: the entry of t's parity with the largest time <= t.
// Requires a well-formed certificate.
inline bool orbit_bit(const ChangeCertificate& c, std::uint64_t t) {
  const auto& list = t % 2 == 0 ? c.even : c.odd;
  auto it = std::upper_bound(list.begin(), list.end(), t,
                             [](std::uint64_t value, const ChangeEntry& e) { return value < e.time; });
  return std::prev(it)->state;
}

inline std::vector<bool> reconstruct_orbit(const ChangeCertificate& c, std::uint64_t horizon) {
  std::vector<bool> bits;
  bits.reserve(horizon + 1);
  for (std::uint64_t t = 0; t <= horizon; ++t) bits.push_back(orbit_bit(c, t));
  return bits;
}

inline std::vector<ChangeCertificate> certificates_from_orbit(const Orbit& orb) {
  const auto& x0 = orb.attractor_state(0);
  const auto& x1 = orb.attractor_state(1);
  ChangeLog log = two_step_changes(orb);
  std::vector<ChangeCertificate> certs(x0.size());
  for (Node v = 0; v < x0.size(); ++v) {
    certs[v].even.push_back({x0[v], 0});
    certs[v].odd.push_back({x1[v], 1});
    for (const auto& e : log.even[v]) certs[v].even.push_back({e.state, e.time});
    for (const auto& e : log.odd[v]) certs[v].odd.push_back({e.state, e.time});
  }
  return certs;
}

// In dishonest mode the certificates describe the true orbit of x whatever y
// is, which is what a cheating prover would most plausibly send.
inline std::vector<ChangeCertificate> prove_election_pred(const PredInstance& inst,
                                                          std::uint64_t size_bound,
                                                          ProverMode mode = ProverMode::honest) {
  require_matching(inst.g, inst.x);
  require_matching(inst.g, inst.y);
  if (size_bound < inst.g.size()) throw std::invalid_argument("N must be at least n");
  Orbit orb = orbit(inst.g, inst.x);
  if (mode == ProverMode::honest && orb.attractor_state(inst.T) != inst.y)
    throw ProverRefusal("x does not reach y at time T");
  return certificates_from_orbit(orb);
}

struct PredInput {
  bool x = false;
  bool y = false;
  std::uint64_t T = 1;
  std::uint64_t size_bound = 1;  // N, known to every node
};

using PredView = NodeView<ChangeCertificate, PredInput>;

inline NodeVerdict verify_election_pred_node(const PredView& view) {
  const auto& in = *view.input;
  const auto& own = *view.cert;
  if (auto bad = malformation(own, in.size_bound)) return NodeVerdict::reject("malformed:" + *bad);
  for (const auto& nb : view.neighbors)
    if (auto bad = malformation(*nb.cert, in.size_bound))
      return NodeVerdict::reject("malformed-neighbor:" + *bad);

  if (orbit_bit(own, 0) != in.x) return NodeVerdict::reject("bad-anchor");

  // The check at time t only depends on own state at t and neighbour states
  // at t-1, all of which repeat with period 2 between entries. Times outside
  // this set give the same outcome as t-2.
  std::set<std::uint64_t> times{1, 2};
  for (const auto& e : own.even) times.insert({e.time, e.time + 1});
  for (const auto& e : own.odd) times.insert({e.time, e.time + 1});
  for (const auto& nb : view.neighbors) {
    for (const auto& e : nb.cert->even) times.insert(e.time + 1);
    for (const auto& e : nb.cert->odd) times.insert(e.time + 1);
  }
  times.erase(0);

  for (std::uint64_t t : times) {
    std::size_t ones = 0;
    for (const auto& nb : view.neighbors) ones += orbit_bit(*nb.cert, t - 1);
    const bool previous = orbit_bit(own, t - 1);
    bool expected = false;
    if (2 * ones > view.degree)
      expected = true;
    else if (2 * ones == view.degree)
      expected = previous;
    if (orbit_bit(own, t) != expected)
      return NodeVerdict::reject("majority-mismatch:t=" + std::to_string(t));
  }

  if (orbit_bit(own, in.T) != in.y) return NodeVerdict::reject("target-mismatch");
  return NodeVerdict::accept();
}

inline std::vector<PredInput> pred_inputs(const PredInstance& inst, std::uint64_t size_bound) {
  std::vector<PredInput> inputs(inst.g.size());
  for (Node v = 0; v < inst.g.size(); ++v) inputs[v] = {inst.x[v], inst.y[v], inst.T, size_bound};
  return inputs;
}

inline Verdict verify_election_pred(const PredInstance& inst, std::uint64_t size_bound,
                                    const std::vector<ChangeCertificate>& certs) {
  auto inputs = pred_inputs(inst, size_bound);
  return run_one_round<ChangeCertificate, PredInput>(inst.g, inputs, certs,
                                                     verify_election_pred_node);
}

}  // namespace majority::cert
