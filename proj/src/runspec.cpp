#include "spingraph/runspec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spingraph {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw SpecError(origin + ": " + message);
}

Spin spin_field(const json& j, const std::string& origin,
                const std::string& key) {
  if (j.is_string()) return parse_spin(j.get<std::string>());
  if (j.is_number_integer()) {
    long v = j.get<long>();
    if (v < 0) fail(origin, key + ": spin must be nonnegative");
    return Spin{static_cast<int>(2 * v)};
  }
  fail(origin, key + ": expected a spin such as \"1/2\" or 1");
}

VertexColor parse_color(const json& j, const std::string& origin,
                        const std::string& vertex_id) {
  if (!j.is_object()) fail(origin, "color for " + vertex_id + " must be an object");
  std::string gauge = j.value("gauge", std::string("full"));
  VertexColor color;
  if (gauge == "full") {
    color.gauge = GaugeGroupKind::Full;
    color.sigma_spin = j.contains("sigma")
                           ? spin_field(j.at("sigma"), origin, "sigma")
                           : Spin{0};
  } else if (gauge == "torus") {
    color.gauge = GaugeGroupKind::Torus;
    color.sigma_weight = TorusWeight{j.value("weight", 0)};
  } else if (gauge == "trivial") {
    color.gauge = GaugeGroupKind::Trivial;
  } else {
    fail(origin, "unknown gauge kind \"" + gauge + "\" for vertex " + vertex_id);
  }
  return color;
}

std::vector<Spin> spin_list(const json& j, const std::string& origin,
                            const std::string& key) {
  if (!j.is_array()) fail(origin, key + " must be an array of spins");
  std::vector<Spin> spins;
  for (const auto& item : j) spins.push_back(spin_field(item, origin, key));
  return spins;
}

ChainData parse_chain(const json& j, const std::string& origin) {
  ChainData chain;
  chain.kind = j.value("kind", std::string());
  if (chain.kind != "trace" && chain.kind != "spherical") {
    fail(origin, "chain.kind must be \"trace\" or \"spherical\"");
  }
  if (!j.contains("edge_spins")) fail(origin, "chain.edge_spins is required");
  chain.edge_spins = spin_list(j.at("edge_spins"), origin, "chain.edge_spins");
  if (chain.edge_spins.empty()) fail(origin, "chain.edge_spins must be nonempty");
  if (chain.kind == "trace") {
    if (j.contains("vertex_spins")) {
      chain.vertex_spins = spin_list(j.at("vertex_spins"), origin, "chain.vertex_spins");
    } else {
      chain.vertex_spins.assign(chain.edge_spins.size(), Spin{0});
    }
    if (chain.vertex_spins.size() != chain.edge_spins.size()) {
      fail(origin, "chain.vertex_spins must list one spin per site");
    }
  } else {
    if (j.contains("bulk_spins")) {
      chain.vertex_spins = spin_list(j.at("bulk_spins"), origin, "chain.bulk_spins");
    } else {
      chain.vertex_spins.assign(chain.edge_spins.size() - 1, Spin{0});
    }
    if (chain.vertex_spins.size() + 1 != chain.edge_spins.size()) {
      fail(origin, "chain.bulk_spins must list one spin per interior vertex");
    }
    chain.left_weight = j.value("left_weight", 0);
    chain.right_weight = j.value("right_weight", 0);
  }
  return chain;
}

}  // namespace

std::vector<VertexColor> RunSpec::resolved_colors(const OrientedGraph& g) const {
  std::vector<VertexColor> out(g.vertices.size());
  std::vector<bool> seen(g.vertices.size(), false);
  for (const auto& [id, color] : colors) {
    std::size_t idx = g.vertex_index(id);
    if (seen[idx]) throw SpecError("duplicate color for vertex " + id);
    out[idx] = color;
    seen[idx] = true;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!seen[v]) throw SpecError("missing color for vertex " + g.vertices[v]);
  }
  return out;
}

RunSpec parse_run_spec(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(origin, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");

  RunSpec spec;
  try {
    if (j.contains("graph")) {
      const json& jg = j.at("graph");
      GraphSpec gs;
      for (const auto& v : jg.value("vertices", json::array())) {
        gs.vertices.push_back(v.get<std::string>());
      }
      for (const auto& e : jg.value("edges", json::array())) {
        gs.edges.push_back({e.at("id").get<std::string>(),
                            e.at("source").get<std::string>(),
                            e.at("target").get<std::string>()});
      }
      spec.graph = gs;
    }
    if (j.contains("colors")) {
      const json& jc = j.at("colors");
      if (!jc.is_object()) fail(origin, "colors must be an object keyed by vertex id");
      for (const auto& [key, value] : jc.items()) {
        spec.colors.emplace_back(key, parse_color(value, origin, key));
      }
    }
    if (j.contains("sector")) {
      spec.sector = Sector{spin_list(j.at("sector"), origin, "sector")};
    }
    if (j.contains("max_spin")) {
      spec.max_spin = spin_field(j.at("max_spin"), origin, "max_spin");
    }
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) spec.samples = j.at("samples").get<int>();
    if (j.contains("degree_cap")) spec.degree_cap = j.at("degree_cap").get<int>();
    if (j.contains("quadrature_order")) {
      spec.quadrature_order = j.at("quadrature_order").get<int>();
    }
    if (j.contains("grid")) spec.grid = j.at("grid").get<int>();
    if (j.contains("tolerances")) {
      const json& jt = j.at("tolerances");
      spec.tolerances.equivariance =
          jt.value("equivariance", spec.tolerances.equivariance);
      spec.tolerances.casimir = jt.value("casimir", spec.tolerances.casimir);
      spec.tolerances.finite_difference =
          jt.value("finite_difference", spec.tolerances.finite_difference);
      spec.tolerances.orthogonality =
          jt.value("orthogonality", spec.tolerances.orthogonality);
    }
    if (j.contains("chain")) spec.chain = parse_chain(j.at("chain"), origin);
    if (j.contains("points")) {
      const json& jp = j.at("points");
      if (!jp.is_array()) fail(origin, "points must be an array");
      for (const auto& row : jp) {
        std::vector<EulerAngles> point;
        if (!row.is_array()) fail(origin, "each point must be an array of Euler triples");
        for (const auto& triple : row) {
          if (!triple.is_array() || triple.size() != 3) {
            fail(origin, "each Euler triple must have three numbers");
          }
          point.push_back(EulerAngles{triple[0].get<double>(),
                                      triple[1].get<double>(),
                                      triple[2].get<double>()});
        }
        spec.points.push_back(std::move(point));
      }
    }
  } catch (const json::exception& e) {
    fail(origin, std::string("schema error: ") + e.what());
  }

  if (spec.samples < 0) fail(origin, "samples must be nonnegative");
  if (spec.degree_cap < 0) fail(origin, "degree_cap must be nonnegative");
  if (spec.quadrature_order < 1) fail(origin, "quadrature_order must be positive");
  if (spec.grid < 0) fail(origin, "grid must be nonnegative");
  return spec;
}

RunSpec parse_run_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_spec(buffer.str(), path);
}

}  // namespace spingraph
