#pragma once

// Immutable undirected simple connected graphs, distance balls and the
// generator families used throughout the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majority {

using Node = std::uint32_t;
using NodeId = std::uint64_t;
using Edge = std::pair<Node, Node>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
 public:
  Graph() = default;

  // Throws GraphError on out-of-range endpoints, loops, duplicate edges or a
  // disconnected result. Ids default to 1..n.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<NodeId> ids = {},
        unsigned id_exponent = 1)
      : n_(n), ids_(std::move(ids)), id_exponent_(id_exponent) {
    if (n == 0) throw GraphError("graph must have at least one node");
    adjacency_.resize(n);
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " +
                         std::to_string(v));
      if (u == v) throw GraphError("self-loop at node " + std::to_string(u));
      Edge key = u < v ? Edge{u, v} : Edge{v, u};
      if (!seen.insert(key).second)
        throw GraphError("duplicate edge " + std::to_string(key.first) + " " +
                         std::to_string(key.second));
      edges_.push_back(key);
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    if (ids_.empty()) {
      ids_.resize(n);
      std::iota(ids_.begin(), ids_.end(), NodeId{1});
    }
    if (ids_.size() != n) throw GraphError("id map size does not match node count");
    std::vector<NodeId> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GraphError("node identifiers are not pairwise distinct");

    for (const auto& nbrs : adjacency_) max_degree_ = std::max(max_degree_, nbrs.size());
    if (!connected()) throw GraphError("graph is disconnected");
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Node> neighbors(Node v) const { return adjacency_[v]; }
  std::size_t degree(Node v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const { return max_degree_; }
  NodeId id(Node v) const { return ids_[v]; }
  const std::vector<NodeId>& ids() const { return ids_; }
  unsigned id_exponent() const { return id_exponent_; }

  bool adjacent(Node u, Node v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  // Breadth-first distances from `source`; every entry is finite (connected).
  std::vector<std::size_t> distances_from(Node source) const {
    constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n_, kUnset);
    std::vector<Node> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Node u = queue[head];
      for (Node w : adjacency_[u]) {
        if (dist[w] == kUnset) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  std::size_t eccentricity(Node v) const {
    auto dist = distances_from(v);
    return *std::max_element(dist.begin(), dist.end());
  }

 private:
  bool connected() const {
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
      return d == std::numeric_limits<std::size_t>::max();
    });
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;
  std::vector<NodeId> ids_;
  unsigned id_exponent_ = 1;
  std::size_t max_degree_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

struct BallProfile {
  Node center = 0;
  // boundary_sizes[k] = |{u : d(center, u) = k}|
  std::vector<std::size_t> boundary_sizes;
};

inline BallProfile growth_profile(const Graph& g, Node v, std::size_t radius) {
  if (v >= g.size()) throw GraphError("node out of range");
  BallProfile profile{v, std::vector<std::size_t>(radius + 1, 0)};
  for (std::size_t d : g.distances_from(v))
    if (d <= radius) ++profile.boundary_sizes[d];
  return profile;
}

// Incremental edge collection used by generators and gadget composition.
class GraphBuilder {
 public:
  Node add_node() { return static_cast<Node>(n_++); }
  Node add_nodes(std::size_t count) {
    Node first = static_cast<Node>(n_);
    n_ += count;
    return first;
  }
  void add_edge(Node u, Node v) { edges_.emplace_back(u, v); }
  void add_triangle(Node a, Node b, Node c) {
    add_edge(a, b);
    add_edge(b, c);
    add_edge(a, c);
  }
  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Graph build() const { return Graph(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

namespace generators {

inline Graph single_edge() { return Graph(2, {{0, 1}}); }

inline Graph path(std::size_t n) {
  GraphBuilder b;
  b.add_nodes(n);
  for (Node i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 nodes");
  GraphBuilder b;
  b.add_nodes(n);
  for (Node i = 0; i < n; ++i) b.add_edge(i, static_cast<Node>((i + 1) % n));
  return b.build();
}

inline Graph grid(std::size_t rows, std::size_t cols) {
  GraphBuilder b;
  b.add_nodes(rows * cols);
  auto at = [cols](std::size_t r, std::size_t c) { return static_cast<Node>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.add_edge(at(r, c), at(r, c + 1));
      if (r + 1 < rows) b.add_edge(at(r, c), at(r + 1, c));
    }
  return b.build();
}

// side >= 3 keeps the wrap-around edges simple.
inline Graph torus(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw GraphError("torus sides must be at least 3");
  GraphBuilder b;
  b.add_nodes(rows * cols);
  auto at = [cols](std::size_t r, std::size_t c) { return static_cast<Node>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      b.add_edge(at(r, c), at(r, (c + 1) % cols));
      b.add_edge(at(r, c), at((r + 1) % rows, c));
    }
  return b.build();
}

// Random spanning tree plus extra random edges, all degrees <= max_degree.
template <class Rng>
Graph random_bounded_degree(std::size_t n, std::size_t max_degree, std::size_t extra_edges,
                            Rng& rng) {
  if (max_degree < 2 && n > 2) throw GraphError("max degree too small for a connected graph");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::size_t> deg(n, 0);
    std::set<Edge> edges;
    std::vector<Node> order(n);
    std::iota(order.begin(), order.end(), Node{0});
    std::shuffle(order.begin(), order.end(), rng);
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) {
      std::vector<Node> candidates;
      for (std::size_t j = 0; j < i; ++j)
        if (deg[order[j]] < max_degree) candidates.push_back(order[j]);
      if (candidates.empty()) {
        ok = false;
        break;
      }
      Node parent = candidates[std::uniform_int_distribution<std::size_t>(
          0, candidates.size() - 1)(rng)];
      Node child = order[i];
      edges.insert({std::min(parent, child), std::max(parent, child)});
      ++deg[parent];
      ++deg[child];
    }
    if (!ok) continue;
    std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
    for (std::size_t tries = 0, added = 0; added < extra_edges && tries < 50 * extra_edges + 50;
         ++tries) {
      Node u = pick(rng), v = pick(rng);
      if (u == v || deg[u] >= max_degree || deg[v] >= max_degree) continue;
      if (!edges.insert({std::min(u, v), std::max(u, v)}).second) continue;
      ++deg[u];
      ++deg[v];
      ++added;
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(n, list);
  }
  throw GraphError("could not generate bounded-degree graph");
}

// Random 3-regular graph by the pairing model, rejecting loops, multi-edges
// and disconnected outcomes.
template <class Rng>
Graph random_cubic(std::size_t n, Rng& rng) {
  if (n < 4 || n % 2 != 0) throw GraphError("cubic graphs need an even n >= 4");
  std::vector<Node> points(3 * n);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Node>(i / 3);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Node u = points[i], v = points[i + 1];
      if (u == v || !edges.insert({std::min(u, v), std::max(u, v)}).second) simple = false;
    }
    if (!simple) continue;
    std::vector<Edge> list(edges.begin(), edges.end());
    try {
      return Graph(n, list);
    } catch (const GraphError&) {
      // disconnected; retry
    }
  }
  throw GraphError("could not generate a simple connected cubic graph");
}

}  // namespace generators
}  // namespace majority
