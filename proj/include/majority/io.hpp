#pragma once

// Text and JSON formats: graphs, configurations, certificate bundles, oracle
// summaries and gadget manifests.

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "majority/certification/count_ones.hpp"
#include "majority/certification/election_pred.hpp"
#include "majority/certification/election_prediction.hpp"
#include "majority/configuration.hpp"
#include "majority/gadgets.hpp"
#include "majority/graph.hpp"
#include "majority/oracle.hpp"

namespace majority::io {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

// "n m" then m lines "u v"; '#' starts a comment running to end of line.
inline Graph parse_graph(const std::string& text) {
  std::string stripped;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    stripped += line.substr(0, line.find('#'));
    stripped += '\n';
  }
  std::istringstream in(stripped);
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n <= 0 || m < 0) throw FormatError("graph header must be \"n m\"");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw FormatError("expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw FormatError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
  }
  std::string extra;
  if (in >> extra) throw FormatError("trailing data after edge list");
  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

// Surrounding whitespace is ignored.
inline Configuration parse_configuration(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) throw FormatError("empty configuration");
  const auto end = text.find_last_not_of(" \t\r\n");
  const std::string bits = text.substr(begin, end - begin + 1);
  for (char c : bits)
    if (c != '0' && c != '1') throw FormatError("configuration must consist of '0' and '1'");
  return Configuration::from_string(bits);
}

inline Configuration parse_configuration(const std::string& text, std::size_t n) {
  Configuration x = parse_configuration(text);
  if (x.size() != n)
    throw FormatError("configuration has " + std::to_string(x.size()) + " entries, graph has " +
                      std::to_string(n) + " nodes");
  return x;
}

// A literal bit string, or a path to a file holding one.
inline std::string config_text(const std::string& arg) {
  if (!arg.empty() && arg.find_first_not_of("01") == std::string::npos) return arg;
  return read_file(arg);
}

// --- certificate records -------------------------------------------------

inline json to_json(const cert::ChangeCertificate& c) {
  auto list = [](const std::vector<cert::ChangeEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back({{"state", e.state ? 1 : 0}, {"time", e.time}});
    return arr;
  };
  return {{"even", list(c.even)}, {"odd", list(c.odd)}};
}

inline json to_json(const cert::TreeCertificate& c) {
  return {{"root", c.root}, {"parent", c.parent}, {"distance", c.distance}, {"count", c.count}};
}

inline json to_json(const cert::CompositeCertificate& c) {
  return {{"y", c.y ? 1 : 0},        {"node_count", c.node_count}, {"ones", c.ones},
          {"pred", to_json(c.pred)}, {"ones_all", to_json(c.ones_all)},
          {"ones_y", to_json(c.ones_y)}};
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field ") + key);
  return j.at(key);
}

inline std::uint64_t unsigned_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw FormatError(std::string("field ") + key + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

inline bool bit_field(const json& j, const char* key) {
  const std::uint64_t v = unsigned_field(j, key);
  if (v > 1) throw FormatError(std::string("field ") + key + " must be 0 or 1");
  return v == 1;
}

}  // namespace detail

template <class Cert>
Cert from_json(const json& j);

template <>
inline cert::ChangeCertificate from_json<cert::ChangeCertificate>(const json& j) {
  auto list = [](const json& arr) {
    if (!arr.is_array()) throw FormatError("change list must be an array");
    std::vector<cert::ChangeEntry> out;
    for (const auto& e : arr)
      out.push_back({detail::bit_field(e, "state"), detail::unsigned_field(e, "time")});
    return out;
  };
  return {list(detail::field(j, "even")), list(detail::field(j, "odd"))};
}

template <>
inline cert::TreeCertificate from_json<cert::TreeCertificate>(const json& j) {
  return {detail::unsigned_field(j, "root"), detail::unsigned_field(j, "parent"),
          detail::unsigned_field(j, "distance"), detail::unsigned_field(j, "count")};
}

template <>
inline cert::CompositeCertificate from_json<cert::CompositeCertificate>(const json& j) {
  return {detail::bit_field(j, "y"),
          detail::unsigned_field(j, "node_count"),
          detail::unsigned_field(j, "ones"),
          from_json<cert::ChangeCertificate>(detail::field(j, "pred")),
          from_json<cert::TreeCertificate>(detail::field(j, "ones_all")),
          from_json<cert::TreeCertificate>(detail::field(j, "ones_y"))};
}

// {"problem": ..., "size_bound": N, "records": {"0": {...}, "1": {...}, ...}}
template <class Cert>
json bundle_json(const std::string& problem, std::uint64_t size_bound,
                 const std::vector<Cert>& certs) {
  json records = json::object();
  for (std::size_t v = 0; v < certs.size(); ++v) records[std::to_string(v)] = to_json(certs[v]);
  return {{"problem", problem}, {"size_bound", size_bound}, {"records", records}};
}

template <class Cert>
std::vector<Cert> bundle_records(const json& bundle, std::size_t n) {
  const json& records = detail::field(bundle, "records");
  if (!records.is_object()) throw FormatError("records must be an object keyed by node index");
  if (records.size() != n)
    throw FormatError("bundle has " + std::to_string(records.size()) + " records, graph has " +
                      std::to_string(n) + " nodes");
  std::vector<Cert> certs(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = records.find(std::to_string(v));
    if (it == records.end()) throw FormatError("no record for node " + std::to_string(v));
    certs[v] = from_json<Cert>(*it);
  }
  return certs;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

// --- oracle summaries ---------------------------------------------------

inline json summary_json(const oracle::DynamicsSummary& s) {
  json fixed = json::array(), cycles = json::array();
  for (const auto& a : s.attractors) {
    json states = json::array();
    for (auto m : a.cycle) states.push_back(oracle::mask_string(m, s.n));
    json entry = {{"states", states}, {"basin", a.basin}};
    (a.cycle.size() == 1 ? fixed : cycles).push_back(entry);
  }
  return {{"graph", s.graph_name},
          {"n", s.n},
          {"edges", s.edges},
          {"configurations", std::size_t{1} << s.n},
          {"max_transient", s.max_transient},
          {"max_period", s.max_period},
          {"fixed_points", fixed},
          {"two_cycles", cycles}};
}

// config,transient,period for every mask (only when the tables were kept).
inline std::string summary_table_csv(const oracle::DynamicsSummary& s) {
  std::ostringstream out;
  out << "config,transient,period\n";
  for (std::size_t x = 0; x < s.transient.size(); ++x)
    out << oracle::mask_string(static_cast<oracle::Mask>(x), s.n) << ',' << s.transient[x] << ','
        << unsigned{s.period[x]} << '\n';
  return out.str();
}

// --- gadget manifests ---------------------------------------------------

inline json manifest_json(const std::string& kind, const gadgets::GadgetInstance& gadget,
                          const json& parameters) {
  json names = json::object();
  for (const auto& [key, v] : gadget.distinguished) names[key] = v;
  json ports = json::array();
  for (const auto& p : gadget.ports) ports.push_back({{"node", p.node}, {"capacity", p.capacity}});
  return {{"kind", kind},
          {"parameters", parameters},
          {"nodes", gadget.g.size()},
          {"edges", gadget.g.edge_count()},
          {"distinguished", names},
          {"ports", ports}};
}

}  // namespace majority::io
