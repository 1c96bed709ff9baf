#pragma once

// Certification of "1 holds a strict global majority at time T", composed
// from the change-list scheme and two spanning-tree counts.

#include <cstdint>
#include <vector>

#include "majority/certification/count_ones.hpp"
#include "majority/certification/election_pred.hpp"
#include "majority/certification/harness.hpp"

namespace majority::cert {

struct PredictionInstance {
  Graph g;
  Configuration x;
  std::uint64_t T = 1;
};

struct CompositeCertificate {
  bool y = false;               // claimed state at time T
  std::uint64_t node_count = 0;  // n_v
  std::uint64_t ones = 0;        // p_v
  ChangeCertificate pred;
  TreeCertificate ones_all;  // counts the all-ones input against n_v
  TreeCertificate ones_y;    // counts y against p_v

  friend bool operator==(const CompositeCertificate&, const CompositeCertificate&) = default;
};

inline std::size_t certificate_bits(const CompositeCertificate& c, std::uint64_t size_bound,
                                    unsigned id_exponent = 1) {
  return 1 + 2 * field_bits(size_bound) + certificate_bits(c.pred, size_bound) +
         certificate_bits(c.ones_all, size_bound, id_exponent) +
         certificate_bits(c.ones_y, size_bound, id_exponent);
}

inline std::vector<CompositeCertificate> prove_election_prediction(
    const PredictionInstance& inst, std::uint64_t size_bound,
    ProverMode mode = ProverMode::honest) {
  require_matching(inst.g, inst.x);
  if (size_bound < inst.g.size()) throw std::invalid_argument("N must be at least n");
  const std::size_t n = inst.g.size();
  Orbit orb = orbit(inst.g, inst.x);
  const Configuration& y = orb.attractor_state(inst.T);
  const std::uint64_t ones = y.count_ones();
  if (mode == ProverMode::honest && 2 * ones <= n)
    throw ProverRefusal("1 does not hold a strict majority at time T");

  auto pred = certificates_from_orbit(orb);
  auto all = spanning_tree_certificates(inst.g, Configuration(n, true));
  auto by_y = spanning_tree_certificates(inst.g, y);
  std::vector<CompositeCertificate> certs(n);
  for (Node v = 0; v < n; ++v) certs[v] = {y[v], n, ones, pred[v], all[v], by_y[v]};
  return certs;
}

struct PredictionInput {
  bool x = false;
  std::uint64_t T = 1;
  std::uint64_t size_bound = 1;
};

using PredictionView = NodeView<CompositeCertificate, PredictionInput>;

inline NodeVerdict verify_election_prediction_node(const PredictionView& view) {
  const auto& own = *view.cert;
  const auto& in = *view.input;
  for (const auto& nb : view.neighbors)
    if (nb.cert->node_count != own.node_count || nb.cert->ones != own.ones)
      return NodeVerdict::reject("count-disagreement");
  if (own.node_count == 0 || own.ones > own.node_count)
    return NodeVerdict::reject("count-out-of-range");

  const PredInput pred_in{in.x, own.y, in.T, in.size_bound};
  auto pred_view = project<ChangeCertificate>(
      view, &pred_in, [](const CompositeCertificate& c) -> const ChangeCertificate& { return c.pred; });
  if (auto v = verify_election_pred_node(pred_view); !v.accepted)
    return NodeVerdict::reject("pred:" + v.reason);

  const CountInput all_in{true, own.node_count, in.size_bound};
  auto all_view = project<TreeCertificate>(
      view, &all_in, [](const CompositeCertificate& c) -> const TreeCertificate& { return c.ones_all; });
  if (auto v = verify_count_ones_node(all_view); !v.accepted)
    return NodeVerdict::reject("ones-all:" + v.reason);

  const CountInput y_in{own.y, own.ones, in.size_bound};
  auto y_view = project<TreeCertificate>(
      view, &y_in, [](const CompositeCertificate& c) -> const TreeCertificate& { return c.ones_y; });
  if (auto v = verify_count_ones_node(y_view); !v.accepted)
    return NodeVerdict::reject("ones-y:" + v.reason);

  if (2 * own.ones <= own.node_count) return NodeVerdict::reject("no-majority");
  return NodeVerdict::accept();
}

inline Verdict verify_election_prediction(const PredictionInstance& inst, std::uint64_t size_bound,
                                          const std::vector<CompositeCertificate>& certs) {
  require_matching(inst.g, inst.x);
  std::vector<PredictionInput> inputs(inst.g.size());
  for (Node v = 0; v < inst.g.size(); ++v) inputs[v] = {inst.x[v], inst.T, size_bound};
  return run_one_round<CompositeCertificate, PredictionInput>(inst.g, inputs, certs,
                                                              verify_election_prediction_node);
}

}  // namespace majority::cert
