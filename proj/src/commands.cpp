#include "spingraph/commands.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>

#include "spingraph/chains.hpp"
#include "spingraph/hamiltonians.hpp"
#include "spingraph/invariants.hpp"
#include "spingraph/spin_functions.hpp"
#include "spingraph/superintegrability.hpp"

namespace spingraph {

namespace {

std::string sector_label(const Sector& sector) {
  std::string out = "(";
  for (std::size_t e = 0; e < sector.edge_spins.size(); ++e) {
    if (e > 0) out += ",";
    out += format_spin(sector.edge_spins[e]);
  }
  return out + ")";
}

OrientedGraph require_graph(const RunSpec& spec) {
  if (!spec.graph) throw SpecError("spec needs a graph section for this command");
  return build_graph(*spec.graph, false);
}

ColoredGraph build_colored(const OrientedGraph& graph,
                           const std::vector<VertexColor>& colors,
                           const Sector& sector) {
  ColoredGraph cg{graph, colors, sector};
  validate_colored_graph(cg);
  return cg;
}

std::vector<Sector> sectors_for(const RunSpec& spec, const OrientedGraph& graph) {
  if (spec.sector) {
    if (spec.sector->edge_spins.size() != graph.edges.size()) {
      throw SpecError("sector must list one spin per edge");
    }
    return {*spec.sector};
  }
  return enumerate_sectors(graph, spec.max_spin);
}

// Scale so the largest-modulus entry becomes exactly 1 (first such entry in
// row-major order), which pins the overall phase of SVD-produced bases.
Matrix canonical_scale(const Matrix& m) {
  Complex pivot = 0;
  double best = 0;
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) {
      double a = std::abs(m(r, c));
      if (a > best) {
        best = a;
        pivot = m(r, c);
      }
    }
  }
  if (best == 0) return m;
  return m / pivot;
}

// Explicit points from the spec, else a beta-grid on the first edge with all
// other edges at the identity.  `betas` receives the first-edge beta of each
// point for the value tables.
std::vector<std::vector<GroupElement>> evaluation_points(const RunSpec& spec,
                                                         std::size_t n_edges,
                                                         std::vector<double>& betas) {
  std::vector<std::vector<GroupElement>> points;
  betas.clear();
  if (!spec.points.empty()) {
    for (const auto& row : spec.points) {
      if (row.size() != n_edges) {
        throw SpecError("each point must give one Euler triple per edge");
      }
      std::vector<GroupElement> gs;
      for (const auto& angles : row) {
        gs.push_back(GroupElement::from_euler(angles.alpha, angles.beta, angles.gamma));
      }
      betas.push_back(n_edges > 0 ? row[0].beta : 0.0);
      points.push_back(std::move(gs));
    }
    return points;
  }
  for (int k = 0; k < spec.grid; ++k) {
    double beta = spec.grid > 1 ? std::numbers::pi * k / (spec.grid - 1) : 0.0;
    std::vector<GroupElement> gs(n_edges, GroupElement::identity());
    if (n_edges > 0) gs[0] = GroupElement::from_euler(0.0, beta, 0.0);
    betas.push_back(beta);
    points.push_back(std::move(gs));
  }
  return points;
}

std::string combo_label(const std::vector<int>& combo) {
  std::string out;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(combo[i]);
  }
  return out;
}

// Odometer over per-slot family sizes, last slot fastest.  Returns false when
// any family is empty or after the last combination.
bool advance_combo(std::vector<int>& combo, const std::vector<int>& sizes) {
  for (std::size_t k = combo.size(); k-- > 0;) {
    if (++combo[k] < sizes[k]) return true;
    combo[k] = 0;
  }
  return false;
}

void add_value_rows(Table& table, long point, double beta, const std::string& combo,
                    const Vector& value) {
  for (long t = 0; t < value.size(); ++t) {
    table.rows.push_back({int_cell(point), num_cell(beta), text_cell(combo),
                          int_cell(t), num_cell(value(t).real()),
                          num_cell(value(t).imag())});
  }
}

}  // namespace

Report cmd_sectors(const RunSpec& spec) {
  Report report;
  report.command = "sectors";
  OrientedGraph graph = require_graph(spec);
  auto colors = spec.resolved_colors(graph);
  auto sectors = sectors_for(spec, graph);

  Table table;
  table.name = "sectors";
  table.columns = {"sector"};
  for (const auto& v : graph.vertices) table.columns.push_back("dim(" + v + ")");
  table.columns.push_back("dim");
  for (const auto& e : graph.edges) table.columns.push_back("casimir(" + e.id + ")");

  long total = 0;
  for (const auto& sector : sectors) {
    ColoredGraph cg = build_colored(graph, colors, sector);
    SectorReport sr = sector_dimension(cg);
    std::vector<Cell> row{text_cell(sector_label(sector))};
    for (int d : sr.vertex_dims) row.push_back(int_cell(d));
    row.push_back(int_cell(sr.total_dim));
    for (Spin s : sector.edge_spins) row.push_back(num_cell(central_character(s)));
    table.rows.push_back(std::move(row));
    total += sr.total_dim;
  }
  report.tables.push_back(std::move(table));
  report.add_meta("sectors", int_cell(long(sectors.size())));
  report.add_meta("total_dim", int_cell(total));
  return report;
}

Report cmd_check(const RunSpec& spec, bool corrupt, bool& failed) {
  Report report;
  report.command = "check";
  OrientedGraph graph = require_graph(spec);
  auto colors = spec.resolved_colors(graph);
  auto sectors = sectors_for(spec, graph);
  const Tolerances& tol = spec.tolerances;

  int twice_max = 0;
  for (const auto& sector : sectors) {
    for (Spin s : sector.edge_spins) twice_max = std::max(twice_max, s.twice_j);
  }
  HaarMoments moments(std::max(spec.quadrature_order, twice_max + 1));

  Table residuals{"sector residuals",
                  {"sector", "dim", "equivariance", "casimir", "finite_difference"},
                  {}};
  Table gram{"sector gram", {"sector", "dim", "rank", "condition"}, {}};

  struct SectorFunctions {
    Sector sector;
    std::vector<SpinGraphFunction> basis;
  };
  std::vector<SectorFunctions> kept;

  failed = false;
  bool corrupted = false;
  long counter = 0;
  std::mt19937_64 point_rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);

  for (const auto& sector : sectors) {
    ColoredGraph cg = build_colored(graph, colors, sector);
    auto basis = sector_basis(cg);
    if (basis.empty()) continue;

    if (corrupt && !corrupted) {
      // Bump the first function along the coefficient direction farthest from
      // the invariant subspace, so the defect is visible to the residuals.
      long dim = basis[0].coeffs.size();
      long best_i = -1;
      double best = 0;
      for (long i = 0; i < dim; ++i) {
        double inside = 0;
        for (const auto& b : basis) inside += std::norm(b.coeffs(i));
        double outside = 1.0 - inside;
        if (outside > best) {
          best = outside;
          best_i = i;
        }
      }
      if (best_i >= 0 && best > 1e-6) {
        Vector bump = Vector::Zero(dim);
        bump(best_i) = 1.0;
        for (const auto& b : basis) bump -= std::conj(b.coeffs(best_i)) * b.coeffs;
        basis[0].coeffs += (1e-3 / bump.norm()) * bump;
        corrupted = true;
      }
    }

    std::vector<GroupElement> point;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      point.push_back(random_group_element(point_rng));
    }

    double equiv = 0, cas = 0, fd = 0;
    for (const auto& f : basis) {
      equiv = std::max(equiv, equivariance_residual(cg, f, spec.samples,
                                                    spec.seed + 101 * counter));
      for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        double lambda = central_character(sector.edge_spins[e]);
        SpinGraphFunction omega = apply_edge_casimir(f, int(e));
        cas = std::max(cas, (omega.coeffs - lambda * f.coeffs).cwiseAbs().maxCoeff());
        Vector approx = finite_difference_casimir(f, int(e), point, 1e-3);
        Vector exact = lambda * evaluate(f, point);
        fd = std::max(fd, (approx - exact).cwiseAbs().maxCoeff());
      }
      ++counter;
    }
    if (equiv > tol.equivariance || cas > tol.casimir || fd > tol.finite_difference) {
      failed = true;
    }
    residuals.rows.push_back({text_cell(sector_label(sector)),
                              int_cell(long(basis.size())), num_cell(equiv),
                              num_cell(cas), num_cell(fd)});

    Matrix g = gram_matrix(basis, moments);
    Eigen::JacobiSVD<Matrix> svd(g);
    const auto& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    double smin = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
    int rank = 0;
    for (long i = 0; i < sv.size(); ++i) {
      if (sv(i) > 1e-10 * smax && sv(i) > 1e-14) ++rank;
    }
    if (rank < int(basis.size())) failed = true;
    double cond = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    gram.rows.push_back({text_cell(sector_label(sector)), int_cell(long(basis.size())),
                         int_cell(rank), num_cell(cond)});

    kept.push_back({sector, std::move(basis)});
  }

  double cross = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& f : kept[i].basis) {
        for (const auto& h : kept[j].basis) {
          cross = std::max(cross, std::abs(l2_inner_product(f, h, moments)));
        }
      }
    }
  }
  if (cross > tol.orthogonality) failed = true;

  report.tables.push_back(std::move(residuals));
  report.tables.push_back(std::move(gram));
  report.add_meta("cross_sector_max", num_cell(cross));
  report.add_meta("tolerance_equivariance", num_cell(tol.equivariance));
  report.add_meta("tolerance_casimir", num_cell(tol.casimir));
  report.add_meta("tolerance_finite_difference", num_cell(tol.finite_difference));
  report.add_meta("tolerance_orthogonality", num_cell(tol.orthogonality));
  if (corrupt) report.add_meta("corruption_fixture", text_cell(corrupted ? "applied" : "no effect"));
  report.add_meta("status", text_cell(failed ? "fail" : "pass"));
  return report;
}

Report cmd_superint(const RunSpec& spec, bool leg_casimirs_only) {
  Report report;
  report.command = "superint";
  OrientedGraph graph = require_graph(spec);
  auto colors = spec.resolved_colors(graph);
  auto sectors = sectors_for(spec, graph);

  Table verdicts{"verdicts", {"sector", "dim", "verdict"}, {}};
  Table certs{"certificates",
              {"sector", "vertex", "module_dim", "algebra_dim", "commutant_dim"},
              {}};

  for (const auto& sector : sectors) {
    ColoredGraph cg = build_colored(graph, colors, sector);
    SuperintCertificate cert = certify(cg, spec.degree_cap, leg_casimirs_only);
    SectorReport sr = sector_dimension(cg);
    std::string label = sector_label(sector);
    verdicts.rows.push_back({text_cell(label), int_cell(sr.total_dim),
                             text_cell(verdict_text(cert.verdict, cert.degree_cap))});
    for (const auto& vc : cert.vertices) {
      certs.rows.push_back({text_cell(label), text_cell(graph.vertices[vc.vertex]),
                            int_cell(vc.module_dim), int_cell(vc.algebra_dim),
                            int_cell(vc.commutant_dim)});
    }
    if (cert.verdict == Verdict::Inconclusive) {
      report.warnings.push_back("sector " + label + " inconclusive at cap " +
                                std::to_string(cert.degree_cap));
    }
  }

  report.tables.push_back(std::move(verdicts));
  report.tables.push_back(std::move(certs));
  report.add_meta("generators",
                  text_cell(leg_casimirs_only ? "leg-casimirs-only" : "full"));
  return report;
}

Report cmd_trace(const RunSpec& spec) {
  Report report;
  report.command = "trace";
  if (!spec.chain || spec.chain->kind != "trace") {
    throw SpecError("spec needs a chain section with kind \"trace\"");
  }
  const ChainData& data = *spec.chain;
  int n = int(data.edge_spins.size());

  std::vector<std::vector<Matrix>> bases(n);
  std::vector<int> sizes(n);
  for (int i = 0; i < n; ++i) {
    int prev = (i + n - 1) % n;
    bases[i] = chain_intertwiner_basis(data.edge_spins[i], data.edge_spins[prev],
                                       data.vertex_spins[i]);
    for (auto& m : bases[i]) m = canonical_scale(m);
    sizes[i] = int(bases[i].size());
    report.add_meta("family_dim(site " + std::to_string(i + 1) + ")",
                    int_cell(sizes[i]));
    if (bases[i].empty()) {
      report.warnings.push_back("empty intertwiner family at site " +
                                std::to_string(i + 1));
    }
  }

  std::vector<double> betas;
  auto points = evaluation_points(spec, std::size_t(n), betas);

  Table values{"values", {"point", "beta", "combo", "component", "re", "im"}, {}};
  double assembly_residual = 0;
  bool any_empty = std::any_of(sizes.begin(), sizes.end(),
                               [](int s) { return s == 0; });
  if (!any_empty) {
    std::vector<int> combo(n, 0);
    do {
      TraceChainSpec chain;
      chain.edge_spins = data.edge_spins;
      chain.vertex_spins = data.vertex_spins;
      for (int i = 0; i < n; ++i) chain.intertwiners.push_back(bases[i][combo[i]]);
      SpinGraphFunction f =
          assemble_psi(trace_chain_graph(chain), trace_chain_tensors(chain));
      std::string label = combo_label(combo);
      for (std::size_t p = 0; p < points.size(); ++p) {
        Vector direct = trace_function(chain, points[p]);
        Vector via_psi = evaluate(f, points[p]);
        assembly_residual = std::max(
            assembly_residual, (direct - via_psi).cwiseAbs().maxCoeff());
        add_value_rows(values, long(p), betas[p], label, direct);
      }
    } while (advance_combo(combo, sizes));
  }

  report.tables.push_back(std::move(values));
  report.add_meta("points", int_cell(long(points.size())));
  report.add_meta("assembly_residual", num_cell(assembly_residual));
  return report;
}

Report cmd_spherical(const RunSpec& spec) {
  Report report;
  report.command = "spherical";
  if (!spec.chain || spec.chain->kind != "spherical") {
    throw SpecError("spec needs a chain section with kind \"spherical\"");
  }
  const ChainData& data = *spec.chain;
  int n = int(data.edge_spins.size());

  SphericalChainSpec base;
  base.edge_spins = data.edge_spins;
  base.bulk_spins = data.vertex_spins;
  base.left = VertexColor{GaugeGroupKind::Torus, Spin(0), TorusWeight{data.left_weight}};
  base.right = VertexColor{GaugeGroupKind::Torus, Spin(0), TorusWeight{data.right_weight}};

  // Family slots: theta, the bulk intertwiners, xi.
  std::vector<std::vector<Matrix>> families;
  families.push_back(boundary_hom_basis(data.edge_spins[0], base.left));
  for (int i = 0; i + 1 < n; ++i) {
    families.push_back(chain_intertwiner_basis(data.edge_spins[i + 1],
                                               data.edge_spins[i],
                                               data.vertex_spins[i]));
  }
  families.push_back(boundary_cohom_basis(data.edge_spins[n - 1], base.right));

  std::vector<int> sizes;
  for (std::size_t s = 0; s < families.size(); ++s) {
    for (auto& m : families[s]) m = canonical_scale(m);
    sizes.push_back(int(families[s].size()));
    std::string name = s == 0 ? "theta"
                     : (int(s) == n ? "xi" : "site " + std::to_string(s + 1));
    report.add_meta("family_dim(" + name + ")", int_cell(long(families[s].size())));
    if (families[s].empty()) {
      report.warnings.push_back("empty intertwiner family (" + name + ")");
    }
  }

  std::vector<double> betas;
  auto points = evaluation_points(spec, std::size_t(n), betas);

  Table values{"values", {"point", "beta", "combo", "component", "re", "im"}, {}};
  double assembly_residual = 0;
  bool any_empty = std::any_of(sizes.begin(), sizes.end(),
                               [](int s) { return s == 0; });
  if (!any_empty) {
    std::vector<int> combo(int(families.size()), 0);
    do {
      SphericalChainSpec chain = base;
      chain.theta = families[0][combo[0]];
      for (int i = 0; i + 1 < n; ++i) {
        chain.intertwiners.push_back(families[std::size_t(i) + 1][combo[i + 1]]);
      }
      chain.xi = families[std::size_t(n)][combo[n]];
      SpinGraphFunction f = assemble_psi(spherical_chain_graph(chain),
                                         spherical_chain_tensors(chain));
      std::string label = combo_label(combo);
      for (std::size_t p = 0; p < points.size(); ++p) {
        Vector direct = spherical_function(chain, points[p]);
        Vector via_psi = evaluate(f, points[p]);
        assembly_residual = std::max(
            assembly_residual, (direct - via_psi).cwiseAbs().maxCoeff());
        add_value_rows(values, long(p), betas[p], label, direct);
      }
    } while (advance_combo(combo, sizes));
  }

  report.tables.push_back(std::move(values));
  report.add_meta("points", int_cell(long(points.size())));
  report.add_meta("assembly_residual", num_cell(assembly_residual));
  return report;
}

Report cmd_eval(const RunSpec& spec) {
  Report report;
  report.command = "eval";
  OrientedGraph graph = require_graph(spec);
  auto colors = spec.resolved_colors(graph);
  auto sectors = sectors_for(spec, graph);

  std::vector<double> betas;
  auto points = evaluation_points(spec, graph.edges.size(), betas);

  Table values{"values",
               {"sector", "function", "point", "beta", "component", "re", "im"},
               {}};
  for (const auto& sector : sectors) {
    ColoredGraph cg = build_colored(graph, colors, sector);
    auto basis = sector_basis(cg);
    std::string label = sector_label(sector);
    for (std::size_t fi = 0; fi < basis.size(); ++fi) {
      for (std::size_t p = 0; p < points.size(); ++p) {
        Vector value = evaluate(basis[fi], points[p]);
        for (long t = 0; t < value.size(); ++t) {
          values.rows.push_back({text_cell(label), int_cell(long(fi)),
                                 int_cell(long(p)), num_cell(betas[p]),
                                 int_cell(t), num_cell(value(t).real()),
                                 num_cell(value(t).imag())});
        }
      }
    }
  }
  report.tables.push_back(std::move(values));
  report.add_meta("points", int_cell(long(points.size())));
  return report;
}

int run_command(const std::string& verb, const CommandOptions& options) {
  try {
    if (options.format != "table" && options.format != "json-like") {
      throw SpecError("unknown format: " + options.format);
    }
    RunSpec spec = parse_run_spec_file(options.spec_path);
    if (options.seed) spec.seed = *options.seed;
    if (options.samples) spec.samples = *options.samples;
    if (options.max_spin) spec.max_spin = parse_spin(*options.max_spin);
    if (options.degree_cap) spec.degree_cap = *options.degree_cap;
    if (options.quadrature_order) spec.quadrature_order = *options.quadrature_order;
    if (spec.samples < 0) throw SpecError("samples must be nonnegative");
    if (spec.degree_cap < 0) throw SpecError("degree_cap must be nonnegative");
    if (spec.quadrature_order < 1) throw SpecError("quadrature_order must be positive");

    bool failed = false;
    Report report;
    if (verb == "sectors") {
      report = cmd_sectors(spec);
    } else if (verb == "check") {
      report = cmd_check(spec, options.corrupt, failed);
    } else if (verb == "superint") {
      report = cmd_superint(spec, options.leg_casimirs_only);
    } else if (verb == "trace") {
      report = cmd_trace(spec);
    } else if (verb == "spherical") {
      report = cmd_spherical(spec);
    } else if (verb == "eval") {
      report = cmd_eval(spec);
    } else {
      throw SpecError("unknown command: " + verb);
    }

    std::vector<std::pair<std::string, Cell>> provenance;
    provenance.emplace_back("tool", text_cell(kToolName));
    provenance.emplace_back("version", text_cell(kToolVersion));
    provenance.emplace_back("spec_file", text_cell(options.spec_path));
    provenance.emplace_back("seed", int_cell(long(spec.seed)));
    provenance.emplace_back("samples", int_cell(spec.samples));
    provenance.emplace_back("max_spin", text_cell(format_spin(spec.max_spin)));
    provenance.emplace_back("degree_cap", int_cell(spec.degree_cap));
    provenance.emplace_back("quadrature_order", int_cell(spec.quadrature_order));
    report.meta.insert(report.meta.begin(), provenance.begin(), provenance.end());

    std::string rendered = options.format == "json-like" ? report.render_json()
                                                         : report.render_table();
    if (options.out_path) {
      std::ofstream out(*options.out_path, std::ios::binary);
      if (!out) throw SpecError("cannot write output file: " + *options.out_path);
      out << rendered;
    } else {
      std::cout << rendered;
    }
    return failed ? 1 : 0;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace spingraph
