#pragma once

// One-round local verification. A node's decision function receives a
// NodeView and nothing else: its own input, identifier, degree and
// certificate, and the identifiers and certificates of its neighbours. The
// harness is the only code that touches the global graph.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "majority/graph.hpp"

namespace majority::cert {

template <class Cert>
struct Neighbor {
  NodeId id;
  const Cert* cert;
};

template <class Cert, class Input>
struct NodeView {
  NodeId id;
  std::size_t degree;
  const Input* input;
  const Cert* cert;
  std::vector<Neighbor<Cert>> neighbors;
};

// Re-targets a view at a sub-certificate of each record, keeping the
// neighbourhood structure.
template <class Sub, class Input, class Cert, class OuterInput, class Proj>
NodeView<Sub, Input> project(const NodeView<Cert, OuterInput>& view, const Input* input,
                             Proj proj) {
  NodeView<Sub, Input> out{view.id, view.degree, input, &proj(*view.cert), {}};
  out.neighbors.reserve(view.neighbors.size());
  for (const auto& nb : view.neighbors) out.neighbors.push_back({nb.id, &proj(*nb.cert)});
  return out;
}

struct NodeVerdict {
  bool accepted = true;
  std::string reason;  // machine-readable code, empty on accept

  static NodeVerdict accept() { return {}; }
  static NodeVerdict reject(std::string why) { return {false, std::move(why)}; }
};

struct Verdict {
  std::vector<NodeVerdict> nodes;

  bool accepted() const {
    for (const auto& v : nodes)
      if (!v.accepted) return false;
    return true;
  }
  std::vector<Node> rejecting() const {
    std::vector<Node> out;
    for (Node v = 0; v < nodes.size(); ++v)
      if (!nodes[v].accepted) out.push_back(v);
    return out;
  }
};

template <class Cert, class Input, class NodeFn>
Verdict run_one_round(const Graph& g, std::span<const Input> inputs, std::span<const Cert> certs,
                      NodeFn&& decide) {
  if (inputs.size() != g.size() || certs.size() != g.size())
    throw std::invalid_argument("one input and one certificate per node required");
  Verdict verdict;
  verdict.nodes.reserve(g.size());
  for (Node v = 0; v < g.size(); ++v) {
    NodeView<Cert, Input> view{g.id(v), g.degree(v), &inputs[v], &certs[v], {}};
    view.neighbors.reserve(g.degree(v));
    for (Node u : g.neighbors(v)) view.neighbors.push_back({g.id(u), &certs[u]});
    verdict.nodes.push_back(decide(static_cast<const NodeView<Cert, Input>&>(view)));
  }
  return verdict;
}

class ProverRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ProverMode { honest, dishonest };

}  // namespace majority::cert
