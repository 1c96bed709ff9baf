#pragma once

// Adversarial certificate generators. Every strategy produces a certificate
// assignment for a NO instance; any global accept is a soundness violation and
// is reported with enough data to replay it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "majority/certification/count_ones.hpp"
#include "majority/certification/election_pred.hpp"
#include "majority/certification/election_prediction.hpp"
#include "majority/rng.hpp"

namespace majority::cert {

struct FuzzViolation {
  std::string strategy;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
};

struct FuzzReport {
  std::size_t trials = 0;
  std::size_t global_accepts = 0;
  std::map<std::string, std::size_t> trials_per_strategy;
  std::vector<FuzzViolation> violations;

  bool clean() const { return global_accepts == 0; }
  void merge(const FuzzReport& other) {
    trials += other.trials;
    global_accepts += other.global_accepts;
    for (const auto& [k, v] : other.trials_per_strategy) trials_per_strategy[k] += v;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

namespace detail {

template <class Rng>
std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <class Rng>
std::vector<ChangeEntry>& pick_list(ChangeCertificate& c, Rng& rng) {
  return pick(rng, 2) == 0 ? c.even : c.odd;
}

template <class Rng>
void shift_time(std::vector<ChangeCertificate>& certs, Rng& rng) {
  auto& list = pick_list(certs[pick(rng, certs.size())], rng);
  if (list.empty()) return;
  auto& e = list[pick(rng, list.size())];
  if (e.time >= 2 && pick(rng, 2) == 0)
    e.time -= 2;
  else
    e.time += 2;
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.time < b.time; });
}

template <class Rng>
void flip_state(std::vector<ChangeCertificate>& certs, Rng& rng) {
  auto& list = pick_list(certs[pick(rng, certs.size())], rng);
  if (!list.empty()) list[pick(rng, list.size())].state ^= true;
}

template <class Rng>
void insert_entry(std::vector<ChangeCertificate>& certs, std::uint64_t max_time, Rng& rng) {
  auto& list = pick_list(certs[pick(rng, certs.size())], rng);
  if (list.empty()) return;
  const std::uint64_t parity = list.front().time % 2;
  std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(1, max_time / 2 + 2)(rng) * 2 + parity;
  auto at = std::upper_bound(list.begin(), list.end(), t,
                             [](std::uint64_t value, const ChangeEntry& e) { return value < e.time; });
  if (at != list.begin() && std::prev(at)->time == t) return;
  bool state = at == list.begin() ? false : !std::prev(at)->state;
  list.insert(at, {state, t});
}

template <class Rng>
void delete_entry(std::vector<ChangeCertificate>& certs, Rng& rng) {
  auto& list = pick_list(certs[pick(rng, certs.size())], rng);
  if (list.size() > 1)
    list.erase(list.begin() + 1 + static_cast<long>(pick(rng, list.size() - 1)));
  else if (!list.empty())
    list.front().state ^= true;
}

template <class Rng>
void copy_neighbor(const Graph& g, std::vector<ChangeCertificate>& certs, Rng& rng) {
  Node v = static_cast<Node>(pick(rng, g.size()));
  auto nbrs = g.neighbors(v);
  certs[v] = certs[nbrs[pick(rng, nbrs.size())]];
}

// Rewrites each node's list so that its reconstructed state at T equals y_v.
inline void patch_target(std::vector<ChangeCertificate>& certs, const Configuration& y,
                         std::uint64_t T) {
  for (Node v = 0; v < certs.size(); ++v) {
    auto& c = certs[v];
    if (malformation(c, ~std::uint32_t{0})) continue;
    if (orbit_bit(c, T) == y[v]) continue;
    auto& list = T % 2 == 0 ? c.even : c.odd;
    if (T <= 1) {
      list.front().state = y[v];
      continue;
    }
    while (list.size() > 1 && list.back().time >= T) list.pop_back();
    if (list.back().state != y[v]) list.push_back({y[v], T});
  }
}

template <class Rng>
std::vector<ChangeCertificate> random_change_certificates(std::size_t n, std::uint64_t max_time,
                                                          Rng& rng) {
  std::vector<ChangeCertificate> certs(n);
  for (auto& c : certs) {
    for (std::uint64_t parity : {0, 1}) {
      auto& list = parity == 0 ? c.even : c.odd;
      bool state = pick(rng, 2);
      std::uint64_t t = parity;
      list.push_back({state, t});
      for (std::size_t extra = pick(rng, 4); extra > 0; --extra) {
        t += 2 * std::uniform_int_distribution<std::uint64_t>(1, std::max<std::uint64_t>(1, max_time / 4))(rng);
        state = !state;
        list.push_back({state, t});
      }
    }
  }
  return certs;
}

}  // namespace detail

// ---------------------------------------------------------------- pred

enum class PredAttack {
  honest_orbit,
  random_entries,
  time_shift,
  state_flip,
  insert_entry,
  delete_entry,
  target_patch,
  foreign_orbit,
  neighbor_copy,
  multi_mutation,
};

inline constexpr std::array kPredAttacks{
    PredAttack::honest_orbit, PredAttack::random_entries, PredAttack::time_shift,
    PredAttack::state_flip,   PredAttack::insert_entry,   PredAttack::delete_entry,
    PredAttack::target_patch, PredAttack::foreign_orbit,  PredAttack::neighbor_copy,
    PredAttack::multi_mutation};

inline const char* name(PredAttack a) {
  switch (a) {
    case PredAttack::honest_orbit: return "honest-orbit";
    case PredAttack::random_entries: return "random-entries";
    case PredAttack::time_shift: return "time-shift";
    case PredAttack::state_flip: return "state-flip";
    case PredAttack::insert_entry: return "insert-entry";
    case PredAttack::delete_entry: return "delete-entry";
    case PredAttack::target_patch: return "target-patch";
    case PredAttack::foreign_orbit: return "foreign-orbit";
    case PredAttack::neighbor_copy: return "neighbor-copy";
    case PredAttack::multi_mutation: return "multi-mutation";
  }
  return "?";
}

template <class Rng>
std::vector<ChangeCertificate> forge_pred(const PredInstance& inst, PredAttack attack, Rng& rng) {
  using namespace detail;
  const std::uint64_t max_time = 2 * (inst.g.edge_count() + inst.T) + 4;
  auto honest = certificates_from_orbit(orbit(inst.g, inst.x));
  switch (attack) {
    case PredAttack::honest_orbit:
      return honest;
    case PredAttack::random_entries:
      return random_change_certificates(inst.g.size(), max_time, rng);
    case PredAttack::time_shift:
      shift_time(honest, rng);
      return honest;
    case PredAttack::state_flip:
      flip_state(honest, rng);
      return honest;
    case PredAttack::insert_entry:
      insert_entry(honest, max_time, rng);
      return honest;
    case PredAttack::delete_entry:
      delete_entry(honest, rng);
      return honest;
    case PredAttack::target_patch:
      patch_target(honest, inst.y, inst.T);
      return honest;
    case PredAttack::foreign_orbit: {
      Configuration start = pick(rng, 2) == 0 ? inst.y : random_configuration(inst.g.size(), rng);
      auto certs = certificates_from_orbit(orbit(inst.g, start));
      if (pick(rng, 2) == 0) patch_target(certs, inst.y, inst.T);
      return certs;
    }
    case PredAttack::neighbor_copy:
      copy_neighbor(inst.g, honest, rng);
      return honest;
    case PredAttack::multi_mutation: {
      if (pick(rng, 2) == 0) patch_target(honest, inst.y, inst.T);
      for (std::size_t steps = 2 + pick(rng, 4); steps > 0; --steps) {
        switch (pick(rng, 5)) {
          case 0: shift_time(honest, rng); break;
          case 1: flip_state(honest, rng); break;
          case 2: insert_entry(honest, max_time, rng); break;
          case 3: delete_entry(honest, rng); break;
          default: copy_neighbor(inst.g, honest, rng); break;
        }
      }
      return honest;
    }
  }
  return honest;
}

// `inst` must be a NO instance (x^T != y).
inline FuzzReport fuzz_election_pred(const PredInstance& inst, std::uint64_t size_bound,
                                     std::size_t trials_per_strategy, std::uint64_t seed) {
  FuzzReport report;
  SeedSplitter root(seed);
  for (PredAttack attack : kPredAttacks) {
    auto rng = root.split(static_cast<std::uint64_t>(attack)).engine();
    for (std::size_t trial = 0; trial < trials_per_strategy; ++trial) {
      auto certs = forge_pred(inst, attack, rng);
      ++report.trials;
      ++report.trials_per_strategy[name(attack)];
      if (verify_election_pred(inst, size_bound, certs).accepted()) {
        ++report.global_accepts;
        report.violations.push_back({name(attack), trial, seed});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- count-ones

enum class CountAttack {
  honest_tree,
  root_count_forge,
  path_forge,
  leaf_inflate,
  two_roots,
  parent_rewire,
  distance_shift,
  random_fields,
  uniform_counts,
  multi_mutation,
};

inline constexpr std::array kCountAttacks{
    CountAttack::honest_tree,   CountAttack::root_count_forge, CountAttack::path_forge,
    CountAttack::leaf_inflate,  CountAttack::two_roots,        CountAttack::parent_rewire,
    CountAttack::distance_shift, CountAttack::random_fields,   CountAttack::uniform_counts,
    CountAttack::multi_mutation};

inline const char* name(CountAttack a) {
  switch (a) {
    case CountAttack::honest_tree: return "honest-tree";
    case CountAttack::root_count_forge: return "root-count-forge";
    case CountAttack::path_forge: return "path-forge";
    case CountAttack::leaf_inflate: return "leaf-inflate";
    case CountAttack::two_roots: return "two-roots";
    case CountAttack::parent_rewire: return "parent-rewire";
    case CountAttack::distance_shift: return "distance-shift";
    case CountAttack::random_fields: return "random-fields";
    case CountAttack::uniform_counts: return "uniform-counts";
    case CountAttack::multi_mutation: return "multi-mutation";
  }
  return "?";
}

namespace detail {

inline Node node_of(const Graph& g, NodeId id) {
  for (Node v = 0; v < g.size(); ++v)
    if (g.id(v) == id) return v;
  return 0;
}

// Adds `delta` to the counts on the tree path from `start` to the root.
inline void shift_path(const Graph& g, std::vector<TreeCertificate>& certs, Node start,
                       std::int64_t delta) {
  Node v = start;
  for (std::size_t guard = 0; guard <= g.size(); ++guard) {
    auto& c = certs[v];
    c.count = static_cast<std::uint64_t>(std::max<std::int64_t>(0, static_cast<std::int64_t>(c.count) + delta));
    if (c.parent == g.id(v)) break;
    v = node_of(g, c.parent);
  }
}

template <class Rng>
void mutate_tree(const Graph& g, std::vector<TreeCertificate>& certs, CountAttack attack,
                 std::int64_t delta, std::uint64_t k, Rng& rng) {
  const Node root = node_of(g, certs.front().root);
  switch (attack) {
    case CountAttack::honest_tree:
      break;
    case CountAttack::root_count_forge:
      certs[root].count = k;
      break;
    case CountAttack::path_forge:
      shift_path(g, certs, static_cast<Node>(pick(rng, g.size())), delta);
      break;
    case CountAttack::leaf_inflate: {
      std::vector<Node> leaves;
      for (Node v = 0; v < g.size(); ++v) {
        bool has_child = false;
        for (Node u : g.neighbors(v)) has_child |= certs[u].parent == g.id(v);
        if (!has_child) leaves.push_back(v);
      }
      // earlier mutations may leave no leaf at all
      if (leaves.empty()) leaves.push_back(static_cast<Node>(pick(rng, g.size())));
      Node leaf = leaves[pick(rng, leaves.size())];
      certs[leaf].count = static_cast<std::uint64_t>(
          std::max<std::int64_t>(0, static_cast<std::int64_t>(certs[leaf].count) + delta));
      break;
    }
    case CountAttack::two_roots: {
      Node w = static_cast<Node>(pick(rng, g.size()));
      auto& c = certs[w];
      c.root = g.id(w);
      c.parent = g.id(w);
      c.distance = 0;
      c.count = k;
      break;
    }
    case CountAttack::parent_rewire: {
      Node w = static_cast<Node>(pick(rng, g.size()));
      auto nbrs = g.neighbors(w);
      Node p = nbrs[pick(rng, nbrs.size())];
      certs[w].parent = g.id(p);
      certs[w].distance = certs[p].distance + 1;
      certs[root].count = k;
      break;
    }
    case CountAttack::distance_shift: {
      Node w = static_cast<Node>(pick(rng, g.size()));
      certs[w].distance = certs[w].distance > 0 && pick(rng, 2) ? certs[w].distance - 1
                                                                : certs[w].distance + 1;
      shift_path(g, certs, w, delta);
      break;
    }
    case CountAttack::random_fields:
      for (Node v = 0; v < g.size(); ++v) {
        auto nbrs = g.neighbors(v);
        certs[v].root = g.id(static_cast<Node>(pick(rng, g.size())));
        certs[v].parent = pick(rng, 4) == 0 ? g.id(v) : g.id(nbrs[pick(rng, nbrs.size())]);
        certs[v].distance = pick(rng, g.size());
        certs[v].count = pick(rng, g.size() + 1);
      }
      break;
    case CountAttack::uniform_counts:
      for (auto& c : certs) c.count = k;
      break;
    case CountAttack::multi_mutation:
      for (std::size_t steps = 2 + pick(rng, 3); steps > 0; --steps)
        mutate_tree(g, certs, kCountAttacks[1 + pick(rng, 8)], delta, k, rng);
      break;
  }
}

}  // namespace detail

// `k` must differ from the number of ones in z.
inline FuzzReport fuzz_count_ones(const Graph& g, const Configuration& z, std::uint64_t k,
                                  std::uint64_t size_bound, std::size_t trials_per_strategy,
                                  std::uint64_t seed) {
  FuzzReport report;
  SeedSplitter root(seed);
  const auto delta = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(z.count_ones());
  const auto honest = spanning_tree_certificates(g, z);
  for (CountAttack attack : kCountAttacks) {
    auto rng = root.split(static_cast<std::uint64_t>(attack)).engine();
    for (std::size_t trial = 0; trial < trials_per_strategy; ++trial) {
      auto certs = honest;
      detail::mutate_tree(g, certs, attack, delta, k, rng);
      ++report.trials;
      ++report.trials_per_strategy[name(attack)];
      if (verify_count_ones(g, z, k, size_bound, certs).accepted()) {
        ++report.global_accepts;
        report.violations.push_back({name(attack), trial, seed});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- composite

enum class PredictionAttack {
  honest_bundle,
  inflate_ones,
  inflate_ones_forged_tree,
  forge_y,
  forge_y_patch_pred,
  deflate_node_count,
  count_disagreement,
  random_bundle,
  pred_mutation,
  multi_mutation,
};

inline constexpr std::array kPredictionAttacks{
    PredictionAttack::honest_bundle,      PredictionAttack::inflate_ones,
    PredictionAttack::inflate_ones_forged_tree, PredictionAttack::forge_y,
    PredictionAttack::forge_y_patch_pred, PredictionAttack::deflate_node_count,
    PredictionAttack::count_disagreement, PredictionAttack::random_bundle,
    PredictionAttack::pred_mutation,      PredictionAttack::multi_mutation};

inline const char* name(PredictionAttack a) {
  switch (a) {
    case PredictionAttack::honest_bundle: return "honest-bundle";
    case PredictionAttack::inflate_ones: return "inflate-ones";
    case PredictionAttack::inflate_ones_forged_tree: return "inflate-ones-forged-tree";
    case PredictionAttack::forge_y: return "forge-y";
    case PredictionAttack::forge_y_patch_pred: return "forge-y-patch-pred";
    case PredictionAttack::deflate_node_count: return "deflate-node-count";
    case PredictionAttack::count_disagreement: return "count-disagreement";
    case PredictionAttack::random_bundle: return "random-bundle";
    case PredictionAttack::pred_mutation: return "pred-mutation";
    case PredictionAttack::multi_mutation: return "multi-mutation";
  }
  return "?";
}

namespace detail {

inline std::vector<CompositeCertificate> bundle(const Graph& g, const Configuration& y,
                                                std::vector<ChangeCertificate> pred,
                                                std::uint64_t node_count, std::uint64_t ones) {
  auto all = spanning_tree_certificates(g, Configuration(g.size(), true));
  auto by_y = spanning_tree_certificates(g, y);
  std::vector<CompositeCertificate> certs(g.size());
  for (Node v = 0; v < g.size(); ++v)
    certs[v] = {y[v], node_count, ones, std::move(pred[v]), all[v], by_y[v]};
  return certs;
}

// Turns 0s of y into 1s until 1 holds a strict majority.
template <class Rng>
Configuration majority_forgery(const Configuration& y, Rng& rng) {
  Configuration forged = y;
  std::vector<Node> zeros;
  for (Node v = 0; v < y.size(); ++v)
    if (!y[v]) zeros.push_back(v);
  std::shuffle(zeros.begin(), zeros.end(), rng);
  for (Node v : zeros) {
    if (2 * forged.count_ones() > forged.size()) break;
    forged.set(v, true);
  }
  return forged;
}

template <class Rng>
std::vector<CompositeCertificate> forge_prediction(const PredictionInstance& inst,
                                                   PredictionAttack attack, Rng& rng) {
  const Graph& g = inst.g;
  const std::size_t n = g.size();
  Orbit orb = orbit(g, inst.x);
  const Configuration y = orb.attractor_state(inst.T);
  const std::uint64_t ones = y.count_ones();
  const std::uint64_t wanted = n / 2 + 1;
  auto pred = certificates_from_orbit(orb);

  switch (attack) {
    case PredictionAttack::honest_bundle:
      return bundle(g, y, pred, n, ones);
    case PredictionAttack::inflate_ones:
      return bundle(g, y, pred, n, wanted);
    case PredictionAttack::inflate_ones_forged_tree: {
      auto certs = bundle(g, y, pred, n, wanted);
      std::vector<TreeCertificate> tree(n);
      for (Node v = 0; v < n; ++v) tree[v] = certs[v].ones_y;
      shift_path(g, tree, static_cast<Node>(pick(rng, n)),
                 static_cast<std::int64_t>(wanted) - static_cast<std::int64_t>(ones));
      for (Node v = 0; v < n; ++v) certs[v].ones_y = tree[v];
      return certs;
    }
    case PredictionAttack::forge_y: {
      Configuration forged = majority_forgery(y, rng);
      return bundle(g, forged, pred, n, forged.count_ones());
    }
    case PredictionAttack::forge_y_patch_pred: {
      Configuration forged = majority_forgery(y, rng);
      patch_target(pred, forged, inst.T);
      return bundle(g, forged, pred, n, forged.count_ones());
    }
    case PredictionAttack::deflate_node_count: {
      const std::uint64_t node_count = std::max<std::uint64_t>(1, 2 * ones - (ones > 0 ? 1 : 0));
      auto certs = bundle(g, y, pred, node_count, ones);
      std::vector<TreeCertificate> tree(n);
      for (Node v = 0; v < n; ++v) tree[v] = certs[v].ones_all;
      if (pick(rng, 2) == 0)
        shift_path(g, tree, static_cast<Node>(pick(rng, n)),
                   static_cast<std::int64_t>(node_count) - static_cast<std::int64_t>(n));
      else
        tree[node_of(g, tree.front().root)].count = node_count;
      for (Node v = 0; v < n; ++v) certs[v].ones_all = tree[v];
      return certs;
    }
    case PredictionAttack::count_disagreement: {
      Configuration forged = majority_forgery(y, rng);
      patch_target(pred, forged, inst.T);
      auto certs = bundle(g, forged, pred, n, forged.count_ones());
      // Nodes far from the root claim the forged count, the rest the true one.
      for (auto& c : certs)
        if (c.ones_y.distance <= 1) c.ones = ones;
      return certs;
    }
    case PredictionAttack::random_bundle: {
      Configuration forged = random_configuration(n, rng);
      auto rand_pred = random_change_certificates(n, 2 * (g.edge_count() + inst.T) + 4, rng);
      auto certs = bundle(g, forged, rand_pred, n, wanted);
      for (auto& c : certs) c.y = pick(rng, 2);
      return certs;
    }
    case PredictionAttack::pred_mutation: {
      Configuration forged = majority_forgery(y, rng);
      patch_target(pred, forged, inst.T);
      for (std::size_t steps = 1 + pick(rng, 3); steps > 0; --steps) {
        switch (pick(rng, 4)) {
          case 0: shift_time(pred, rng); break;
          case 1: flip_state(pred, rng); break;
          case 2: delete_entry(pred, rng); break;
          default: insert_entry(pred, 2 * (g.edge_count() + inst.T) + 4, rng); break;
        }
      }
      return bundle(g, forged, pred, n, forged.count_ones());
    }
    case PredictionAttack::multi_mutation: {
      auto certs = forge_prediction(inst, kPredictionAttacks[1 + pick(rng, 8)], rng);
      for (std::size_t steps = 1 + pick(rng, 3); steps > 0; --steps) {
        auto& c = certs[pick(rng, n)];
        switch (pick(rng, 4)) {
          case 0: c.y ^= true; break;
          case 1: c.ones = wanted; break;
          case 2: c.node_count = std::max<std::uint64_t>(1, c.node_count - 1); break;
          default: c.ones_y.count += 1; break;
        }
      }
      return certs;
    }
  }
  return bundle(g, y, pred, n, ones);
}

}  // namespace detail

// `inst` must be a NO instance (1 has no strict majority at time T).
inline FuzzReport fuzz_election_prediction(const PredictionInstance& inst,
                                           std::uint64_t size_bound,
                                           std::size_t trials_per_strategy, std::uint64_t seed) {
  FuzzReport report;
  SeedSplitter root(seed);
  for (PredictionAttack attack : kPredictionAttacks) {
    auto rng = root.split(static_cast<std::uint64_t>(attack)).engine();
    for (std::size_t trial = 0; trial < trials_per_strategy; ++trial) {
      auto certs = detail::forge_prediction(inst, attack, rng);
      ++report.trials;
      ++report.trials_per_strategy[name(attack)];
      if (verify_election_prediction(inst, size_bound, certs).accepted()) {
        ++report.global_accepts;
        report.violations.push_back({name(attack), trial, seed});
      }
    }
  }
  return report;
}

}  // namespace majority::cert
