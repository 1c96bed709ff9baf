#pragma once

// Spanning-tree certification of "exactly k nodes hold 1".

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "majority/analysis.hpp"
#include "majority/certification/harness.hpp"
#include "majority/configuration.hpp"
#include "majority/graph.hpp"

namespace majority::cert {

struct TreeCertificate {
  NodeId root = 0;
  NodeId parent = 0;
  std::uint64_t distance = 0;
  std::uint64_t count = 0;  // ones in the subtree below and including this node

  friend bool operator==(const TreeCertificate&, const TreeCertificate&) = default;
};

inline std::size_t field_bits(std::uint64_t size_bound) { return ceil_log2(size_bound + 1); }

inline std::size_t certificate_bits(const TreeCertificate&, std::uint64_t size_bound,
                                    unsigned id_exponent = 1) {
  return (2 * id_exponent + 2) * field_bits(size_bound);
}

// BFS tree rooted at the minimum identifier; a node's parent is its
// minimum-identifier neighbour one level up.
inline std::vector<TreeCertificate> spanning_tree_certificates(const Graph& g,
                                                               const Configuration& z) {
  require_matching(g, z);
  Node root = 0;
  for (Node v = 1; v < g.size(); ++v)
    if (g.id(v) < g.id(root)) root = v;
  auto dist = g.distances_from(root);

  std::vector<Node> parent(g.size(), root);
  for (Node v = 0; v < g.size(); ++v) {
    if (v == root) continue;
    NodeId best = std::numeric_limits<NodeId>::max();
    for (Node u : g.neighbors(v))
      if (dist[u] + 1 == dist[v] && g.id(u) < best) {
        best = g.id(u);
        parent[v] = u;
      }
  }

  std::vector<Node> order(g.size());
  for (Node v = 0; v < g.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Node a, Node b) { return dist[a] > dist[b]; });
  std::vector<std::uint64_t> count(g.size(), 0);
  for (Node v : order) {
    count[v] += z[v];
    if (v != root) count[parent[v]] += count[v];
  }

  std::vector<TreeCertificate> certs(g.size());
  for (Node v = 0; v < g.size(); ++v)
    certs[v] = {g.id(root), g.id(parent[v]), dist[v], count[v]};
  return certs;
}

inline std::vector<TreeCertificate> prove_count_ones(const Graph& g, const Configuration& z,
                                                     std::uint64_t k,
                                                     ProverMode mode = ProverMode::honest) {
  require_matching(g, z);
  if (mode == ProverMode::honest && z.count_ones() != k)
    throw ProverRefusal("configuration does not have exactly k ones");
  return spanning_tree_certificates(g, z);
}

struct CountInput {
  bool z = false;
  std::uint64_t k = 0;
  std::uint64_t size_bound = 0;  // N; counts and distances are fields of N+1 values
};

using CountView = NodeView<TreeCertificate, CountInput>;

inline NodeVerdict verify_count_ones_node(const CountView& view) {
  const auto& own = *view.cert;
  const std::uint64_t bound = view.input->size_bound;
  if (own.count > bound || own.distance > bound) return NodeVerdict::reject("field-out-of-range");
  for (const auto& nb : view.neighbors) {
    if (nb.cert->count > bound || nb.cert->distance > bound)
      return NodeVerdict::reject("field-out-of-range");
    if (nb.cert->root != own.root) return NodeVerdict::reject("root-mismatch");
  }

  if (own.root == view.id) {
    if (own.distance != 0 || own.parent != view.id) return NodeVerdict::reject("bad-root-fields");
  } else {
    if (own.distance == 0) return NodeVerdict::reject("bad-distance");
    auto parent = std::find_if(view.neighbors.begin(), view.neighbors.end(),
                               [&](const auto& nb) { return nb.id == own.parent; });
    if (parent == view.neighbors.end()) return NodeVerdict::reject("parent-not-neighbor");
    if (parent->cert->distance + 1 != own.distance) return NodeVerdict::reject("bad-distance");
  }

  std::uint64_t sum = view.input->z;
  for (const auto& nb : view.neighbors)
    if (nb.cert->parent == view.id) sum += nb.cert->count;
  if (sum != own.count) return NodeVerdict::reject("count-sum-mismatch");

  if (own.root == view.id && own.count != view.input->k)
    return NodeVerdict::reject("root-count-mismatch");
  return NodeVerdict::accept();
}

inline Verdict verify_count_ones(const Graph& g, const Configuration& z, std::uint64_t k,
                                 std::uint64_t size_bound,
                                 const std::vector<TreeCertificate>& certs) {
  require_matching(g, z);
  std::vector<CountInput> inputs(g.size());
  for (Node v = 0; v < g.size(); ++v) inputs[v] = {z[v], k, size_bound};
  return run_one_round<TreeCertificate, CountInput>(g, inputs, certs, verify_count_ones_node);
}

}  // namespace majority::cert
