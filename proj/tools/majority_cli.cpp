// majority: simulate, certify and enumerate majority dynamics from the shell.
//
// Exit codes: 0 success / global accept, 1 verifier reject (or fuzzing found
// an accepted forgery), 2 input error, 3 honest prover refused, 4 exhaustive
// budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "majority/majority.hpp"

namespace {

using namespace majority;
using majority::io::json;

enum Exit { kOk = 0, kReject = 1, kInput = 2, kRefused = 3, kBudget = 4 };

struct Options {
  std::string graph, config, target, certs, out, problem = "pred", kind = "zero_to_one";
  std::string family, table, u, a, b;
  std::vector<std::size_t> sizes;
  std::uint64_t T = 1, N = 0, seed = 1;
  std::size_t steps = 0, samples = 10, trials = 100, n = 1, strips = gadgets::kAmplifierMinStrips;
  bool until_attractor = false, trace = false, check = false;
  std::optional<std::uint64_t> k_given;
};

struct Instance {
  Graph g;
  Configuration x;
  std::uint64_t N = 0;
};

Instance load_instance(const Options& o) {
  if (o.graph.empty()) throw io::FormatError("--graph is required");
  if (o.config.empty()) throw io::FormatError("--config is required");
  Graph g = io::load_graph(o.graph);
  Configuration x = io::parse_configuration(io::config_text(o.config), g.size());
  std::uint64_t N = o.N == 0 ? g.size() : o.N;
  if (N < g.size()) throw io::FormatError("-N must be at least the node count");
  return {std::move(g), std::move(x), N};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    io::write_file(o.out, text);
}

// ------------------------------------------------------------------ simulate

int cmd_simulate(const Options& o) {
  Instance in = load_instance(o);
  Orbit orb = orbit(in.g, in.x);
  std::ostringstream text;
  if (o.steps > 0 || o.trace) {
    const std::size_t last = o.steps > 0 ? o.steps : orb.transient + orb.period;
    for (std::size_t t = 0; t <= last; ++t) text << orb.attractor_state(t).to_string() << '\n';
  }
  text << "transient=" << orb.transient << " period=" << orb.period << '\n';
  emit(o, text.str());
  return kOk;
}

// ------------------------------------------------------------ prove / verify

template <class Cert, class SizeFn>
void size_report(const std::vector<Cert>& certs, SizeFn bits) {
  std::size_t total = 0, max_bits = 0;
  for (const auto& c : certs) {
    total += bits(c);
    max_bits = std::max(max_bits, bits(c));
  }
  std::cout << "total_bits=" << total << " max_node_bits=" << max_bits << '\n';
}

std::uint64_t require_k(const Options& o) {
  if (!o.k_given) throw io::FormatError("-k is required for count-ones");
  return *o.k_given;
}

Configuration require_target(const Options& o, std::size_t n) {
  if (o.target.empty()) throw io::FormatError("--target is required for pred");
  return io::parse_configuration(io::config_text(o.target), n);
}

int cmd_prove(const Options& o) {
  Instance in = load_instance(o);
  json bundle;
  if (o.problem == "pred") {
    cert::PredInstance inst{in.g, in.x, require_target(o, in.g.size()), o.T};
    auto certs = cert::prove_election_pred(inst, in.N);
    bundle = io::bundle_json(o.problem, in.N, certs);
    size_report(certs, [&](const auto& c) { return cert::certificate_bits(c, in.N); });
  } else if (o.problem == "prediction") {
    cert::PredictionInstance inst{in.g, in.x, o.T};
    auto certs = cert::prove_election_prediction(inst, in.N);
    bundle = io::bundle_json(o.problem, in.N, certs);
    size_report(certs, [&](const auto& c) { return cert::certificate_bits(c, in.N); });
  } else {
    auto certs = cert::prove_count_ones(in.g, in.x, require_k(o));
    bundle = io::bundle_json(o.problem, in.N, certs);
    size_report(certs, [&](const auto& c) { return cert::certificate_bits(c, in.N); });
  }
  const std::string text = bundle.dump(1) + "\n";
  if (o.out.empty())
    std::cout << text;
  else
    io::write_file(o.out, text);
  return kOk;
}

int report_verdict(const cert::Verdict& v) {
  for (Node u = 0; u < v.nodes.size(); ++u) {
    std::cout << "node " << u << ": ";
    if (v.nodes[u].accepted)
      std::cout << "accept\n";
    else
      std::cout << "reject " << v.nodes[u].reason << '\n';
  }
  std::cout << "global: " << (v.accepted() ? "accept" : "reject") << '\n';
  return v.accepted() ? kOk : kReject;
}

int cmd_verify(const Options& o) {
  Instance in = load_instance(o);
  if (o.certs.empty()) throw io::FormatError("--certs is required");
  json bundle = io::parse_json(io::read_file(o.certs));
  const std::size_t n = in.g.size();
  if (o.problem == "pred") {
    cert::PredInstance inst{in.g, in.x, require_target(o, n), o.T};
    return report_verdict(
        cert::verify_election_pred(inst, in.N, io::bundle_records<cert::ChangeCertificate>(bundle, n)));
  }
  if (o.problem == "prediction") {
    cert::PredictionInstance inst{in.g, in.x, o.T};
    return report_verdict(cert::verify_election_prediction(
        inst, in.N, io::bundle_records<cert::CompositeCertificate>(bundle, n)));
  }
  return report_verdict(cert::verify_count_ones(
      in.g, in.x, require_k(o), in.N, io::bundle_records<cert::TreeCertificate>(bundle, n)));
}

// ---------------------------------------------------------------------- fuzz

int cmd_fuzz(const Options& o) {
  Instance in = load_instance(o);
  cert::FuzzReport report;
  if (o.problem == "pred") {
    cert::PredInstance inst{in.g, in.x, require_target(o, in.g.size()), o.T};
    if (state_at(inst.g, inst.x, inst.T) == inst.y)
      throw io::FormatError("fuzzing needs a NO instance");
    report = cert::fuzz_election_pred(inst, in.N, o.trials, o.seed);
  } else if (o.problem == "prediction") {
    cert::PredictionInstance inst{in.g, in.x, o.T};
    if (2 * state_at(inst.g, inst.x, inst.T).count_ones() > inst.g.size())
      throw io::FormatError("fuzzing needs a NO instance");
    report = cert::fuzz_election_prediction(inst, in.N, o.trials, o.seed);
  } else {
    const std::uint64_t k = require_k(o);
    if (in.x.count_ones() == k) throw io::FormatError("fuzzing needs a NO instance");
    report = cert::fuzz_count_ones(in.g, in.x, k, in.N, o.trials, o.seed);
  }
  std::cout << "seed=" << o.seed << " trials=" << report.trials
            << " global_accepts=" << report.global_accepts << '\n';
  for (const auto& [name, count] : report.trials_per_strategy)
    std::cout << "  " << name << ": " << count << '\n';
  for (const auto& v : report.violations)
    std::cout << "VIOLATION strategy=" << v.strategy << " trial=" << v.trial << " seed=" << v.seed
              << '\n';
  return report.clean() ? kOk : kReject;
}

// -------------------------------------------------------------------- gadget

void write_bundle(const Options& o, const std::string& kind, const gadgets::GadgetInstance& gad,
                  const json& params) {
  if (o.out.empty()) return;
  io::write_file(o.out + ".graph", io::format_graph(gad.g));
  io::write_file(o.out + ".config", gad.init.to_string() + "\n");
  io::write_file(o.out + ".json", io::manifest_json(kind, gad, params).dump(2) + "\n");
  std::cout << "wrote " << o.out << ".graph, " << o.out << ".config, " << o.out << ".json\n";
}

void print_trace(const std::vector<Configuration>& traj) {
  for (const auto& c : traj) std::cout << c.to_string() << '\n';
}

// Drivers alternate pseudo-randomly; the seed is part of the output.
auto driver_script(std::uint64_t seed) {
  return [seed](std::size_t t, std::size_t i) {
    SeedSplitter s(seed);
    return (s.split(t).split(i).next() & 1) != 0;
  };
}

int gadget_timer(const Options& o) {
  if (o.kind != "zero_to_one" && o.kind != "one_to_zero")
    throw io::FormatError("--kind must be zero_to_one or one_to_zero");
  const auto kind =
      o.kind == "zero_to_one" ? gadgets::TimerKind::zero_to_one : gadgets::TimerKind::one_to_zero;
  auto gad = gadgets::build_timer(o.n, kind);
  write_bundle(o, "timer", gad, {{"n", o.n}, {"kind", o.kind}});
  std::cout << "timer n=" << o.n << " nodes=" << gad.g.size() << '\n';
  auto traj = gadgets::simulate_with_drivers(gad, o.n + 5, driver_script(o.seed));
  if (o.trace) print_trace(traj);
  if (!o.check) return kOk;
  const bool trigger = kind == gadgets::TimerKind::zero_to_one;
  std::size_t matching = 0;
  std::vector<bool> distinguished(gad.g.size(), false);
  for (std::size_t k = 1; k <= o.n; ++k)
    for (int j = 1; j <= 2; ++j) {
      Node v = gad.at(gadgets::timer_name(k, j));
      distinguished[v] = true;
      bool ok = true;
      for (std::size_t t = 0; t < traj.size(); ++t) ok &= traj[t][v] == ((t >= k) == trigger);
      matching += ok;
    }
  bool internal = true;
  for (Node v = 0; v < gad.g.size(); ++v)
    if (!distinguished[v])
      for (const auto& c : traj) internal &= c[v] == gad.init[v];
  std::cout << matching << "/" << 2 * o.n << " distinguished trajectories match [t >= k]"
            << (internal ? ", internal nodes constant" : ", internal node changed") << '\n';
  return matching == 2 * o.n && internal ? kOk : kReject;
}

int gadget_sequencer(const Options& o) {
  auto u = gadgets::parse_bits(o.u);
  auto gad = gadgets::build_sequencer(u);
  write_bundle(o, "sequencer", gad, {{"u", o.u}});
  std::cout << "sequencer u=" << o.u << " nodes=" << gad.g.size() << '\n';
  auto traj = gadgets::simulate_with_drivers(gad, u.size() + 5, driver_script(o.seed));
  std::string got, want(1, u[0] ? '1' : '0');
  for (const auto& c : traj) got += c[gad.at("v")] ? '1' : '0';
  for (std::size_t t = 1; t < traj.size(); ++t) want += u[std::min(t, u.size()) - 1] ? '1' : '0';
  if (o.trace) print_trace(traj);
  std::cout << "v: " << got << '\n';
  if (!o.check) return kOk;
  std::cout << (got == want ? "trajectory matches u then constant" : "trajectory mismatch, expected " + want)
            << '\n';
  return got == want ? kOk : kReject;
}

int gadget_amplifier(const Options& o) {
  auto gad = gadgets::build_amplifier(o.strips);
  write_bundle(o, "amplifier", gad, {{"strips", o.strips}});
  const std::size_t n = gad.g.size();
  std::cout << "amplifier strips=" << o.strips << " nodes=" << n << '\n';
  if (!o.check) return kOk;
  const std::size_t horizon = 3 * o.strips + 10;
  auto quiet = gadgets::simulate_with_drivers(
      gad, horizon, [](std::size_t t, std::size_t i) { return i == 0 && t % 2 == 0; });
  bool fixed = true;
  for (const auto& c : quiet) fixed &= c == gad.init;
  auto fired = gadgets::simulate_with_drivers(gad, horizon, [](std::size_t, std::size_t) { return true; });
  const std::size_t zeros_before = n - gad.init.count_ones();
  const std::size_t zeros_after = n - fired.back().count_ones();
  // alpha = 15/28
  const bool before_ok = 28 * zeros_before >= gadgets::kAmplifierAlphaNum * n;
  const bool after_ok = 28 * zeros_after <= (28 - gadgets::kAmplifierAlphaNum) * n;
  std::cout << "untriggered: " << (fixed ? "fixed point" : "moved") << ", zero share "
            << zeros_before << "/" << n << (before_ok ? " >= alpha" : " < alpha") << '\n';
  std::cout << "triggered: zero share " << zeros_after << "/" << n
            << (after_ok ? " <= 1-alpha" : " > 1-alpha") << " after " << horizon << " steps\n";
  return fixed && before_ok && after_ok ? kOk : kReject;
}

int gadget_disj(const Options& o) {
  auto inst = gadgets::build_disj_instance(gadgets::parse_bits(o.a), gadgets::parse_bits(o.b));
  write_bundle(o, "disj", inst.h, {{"a", o.a}, {"b", o.b}, {"strips", inst.strips}, {"T", inst.T}});
  std::cout << "disj nodes=" << inst.h.g.size() << " strips=" << inst.strips << " T=" << inst.T
            << '\n';
  if (!o.check) return kOk;
  Orbit orb = orbit(inst.h.g, inst.h.init);
  const auto& final_state = orb.states[orb.transient];
  const bool majority = 2 * final_state.count_ones() > inst.h.g.size();
  std::cout << "majority=" << majority;
  for (std::size_t i = 0; i < inst.a.size(); ++i)
    if (inst.a[i] && inst.b[i]) {
      std::cout << " (intersection at i=" << i << ")";
      break;
    }
  std::cout << " fixed_point=" << (orb.period == 1) << " converged_at=" << orb.transient << '\n';
  return majority == inst.intersects() && orb.period == 1 && orb.transient <= inst.T ? kOk : kReject;
}

// -------------------------------------------------------- bounds / bruteforce

int cmd_bounds(const Options& o) {
  auto family = family_by_name(o.family);
  if (!family) throw io::FormatError("unknown family " + o.family);
  if (o.sizes.empty()) throw io::FormatError("--sizes must list at least one size");
  emit(o, scaling_csv(scaling_experiment(*family, o.sizes, o.samples, o.seed)));
  return kOk;
}

int cmd_bruteforce(const Options& o) {
  if (o.graph.empty()) throw io::FormatError("--graph is required");
  Graph g = io::load_graph(o.graph);
  auto summary = oracle::enumerate_dynamics(g, o.graph);
  emit(o, io::summary_json(summary).dump(2) + "\n");
  if (!o.table.empty()) io::write_file(o.table, io::summary_table_csv(summary));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majority dynamics: simulation, certification, gadgets and exhaustive checks"};
  app.require_subcommand(1);
  Options o;

  auto graph_flags = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "graph file: \"n m\" then m lines \"u v\"");
    c->add_option("--config", o.config, "configuration: 0/1 string or file holding one");
  };
  auto problem_flags = [&](CLI::App* c) {
    graph_flags(c);
    c->add_option("--problem", o.problem, "pred | prediction | count-ones")
        ->check(CLI::IsMember({"pred", "prediction", "count-ones"}));
    c->add_option("--target", o.target, "target configuration y (pred)");
    c->add_option("-T", o.T, "time horizon T >= 1")->check(CLI::PositiveNumber);
    c->add_option("-N", o.N, "size bound N >= n (default n)");
    c->add_option("-k", o.k_given, "claimed number of ones (count-ones)");
  };

  auto* sim = app.add_subcommand("simulate", "iterate the majority rule");
  graph_flags(sim);
  sim->add_option("--steps", o.steps, "print x^0..x^steps");
  sim->add_flag("--until-attractor", o.until_attractor, "stop once the attractor is reached");
  sim->add_flag("--trace", o.trace, "print every configuration up to the attractor");
  sim->add_option("--out", o.out, "write output here instead of stdout");

  auto* prove = app.add_subcommand("prove", "honest prover: write a certificate bundle");
  problem_flags(prove);
  prove->add_option("--out", o.out, "bundle path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "one-round verifier over a certificate bundle");
  problem_flags(verify);
  verify->add_option("--certs", o.certs, "bundle path")->required();

  auto* fuzz = app.add_subcommand("fuzz", "adversarial soundness campaign on a NO instance");
  problem_flags(fuzz);
  fuzz->add_option("--trials", o.trials, "trials per strategy");
  fuzz->add_option("--seed", o.seed, "root seed");

  auto* gadget = app.add_subcommand("gadget", "build a gadget bundle");
  gadget->require_subcommand(1);
  auto gadget_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "bundle prefix: writes PREFIX.graph, .config, .json");
    c->add_flag("--check", o.check, "run the behavioural checks");
    c->add_flag("--trace", o.trace, "print the simulated trajectory");
    c->add_option("--seed", o.seed, "driver seed");
  };
  auto* timer = gadget->add_subcommand("timer", "timer with 2n distinguished nodes");
  timer->add_option("--n", o.n, "number of pairs")->check(CLI::PositiveNumber);
  timer->add_option("--kind", o.kind, "zero_to_one | one_to_zero");
  gadget_common(timer);
  auto* seq = gadget->add_subcommand("sequencer", "sequencer emitting u");
  seq->add_option("--u", o.u, "bit string")->required();
  gadget_common(seq);
  auto* amp = gadget->add_subcommand("amplifier", "amplifier with the given strip count");
  amp->add_option("--strips", o.strips, "strip count");
  gadget_common(amp);
  auto* disj = gadget->add_subcommand("disj", "set-disjointness instance");
  disj->add_option("--a", o.a, "bit string")->required();
  disj->add_option("--b", o.b, "bit string")->required();
  gadget_common(disj);

  auto* bounds = app.add_subcommand("bounds", "two-step change scaling experiment (CSV)");
  bounds->add_option("--family", o.family, "torus | grid | path | cycle | cubic")->required();
  bounds->add_option("--sizes", o.sizes, "increasing sizes (side length for torus/grid)")
      ->delimiter(',');
  bounds->add_option("--samples", o.samples, "random configurations per size");
  bounds->add_option("--seed", o.seed, "root seed");
  bounds->add_option("--out", o.out, "CSV path (stdout if omitted)");

  auto* brute = app.add_subcommand("bruteforce", "exhaustive enumeration of all configurations");
  brute->add_option("--graph", o.graph, "graph file")->required();
  brute->add_option("--out", o.out, "JSON path (stdout if omitted)");
  brute->add_option("--table", o.table, "per-configuration CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*sim) return cmd_simulate(o);
    if (*prove) return cmd_prove(o);
    if (*verify) return cmd_verify(o);
    if (*fuzz) return cmd_fuzz(o);
    if (*timer) return gadget_timer(o);
    if (*seq) return gadget_sequencer(o);
    if (*amp) return gadget_amplifier(o);
    if (*disj) return gadget_disj(o);
    if (*bounds) return cmd_bounds(o);
    if (*brute) return cmd_bruteforce(o);
  } catch (const cert::ProverRefusal& e) {
    std::cerr << "prover refused: " << e.what() << '\n';
    return kRefused;
  } catch (const oracle::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
