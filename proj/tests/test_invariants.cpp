#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "spingraph/invariants.hpp"
#include "spingraph/su2.hpp"

using namespace spingraph;

namespace {

ColoredGraph loop_graph(Spin edge, VertexColor color) {
  GraphSpec gs;
  gs.vertices = {"v"};
  gs.edges = {{"e1", "v", "v"}};
  ColoredGraph cg;
  cg.graph = build_graph(gs, true);
  cg.colors = {color};
  cg.sector.edge_spins = {edge};
  return cg;
}

ColoredGraph two_loop_graph(Spin a, Spin b, VertexColor color) {
  GraphSpec gs;
  gs.vertices = {"v"};
  gs.edges = {{"e1", "v", "v"}, {"e2", "v", "v"}};
  ColoredGraph cg;
  cg.graph = build_graph(gs, true);
  cg.colors = {color};
  cg.sector.edge_spins = {a, b};
  return cg;
}

ColoredGraph cycle_graph(Spin a, Spin b, VertexColor c1, VertexColor c2) {
  GraphSpec gs;
  gs.vertices = {"v", "w"};
  gs.edges = {{"e1", "v", "w"}, {"e2", "w", "v"}};
  ColoredGraph cg;
  cg.graph = build_graph(gs, true);
  cg.colors = {c1, c2};
  cg.sector.edge_spins = {a, b};
  return cg;
}

// Group-level star representation at k: kron over legs (duals conjugated)
// followed by the sigma block.  Independent of the Lie-algebra machinery.
Matrix star_rep(const StarSpace& ss, const GroupElement& k) {
  Matrix acc = Matrix::Identity(1, 1);
  for (const auto& leg : ss.legs) {
    Matrix d = evaluate(make_irrep(leg.spin), k);
    if (leg.dual) d = d.conjugate();
    acc = oracles::kron(acc, d);
  }
  return oracles::kron(acc, sigma_matrix(ss.color, k));
}

long oracle_dim(const StarSpace& ss) {
  switch (ss.color.gauge) {
    case GaugeGroupKind::Trivial:
      return ss.dim;
    case GaugeGroupKind::Torus: {
      std::vector<std::pair<int, bool>> legs;
      for (const auto& leg : ss.legs) legs.emplace_back(leg.spin.twice_j, leg.dual);
      return oracles::torus_invariant_count(legs, ss.color.sigma_weight.n);
    }
    case GaugeGroupKind::Full: {
      std::vector<int> twice;
      for (const auto& leg : ss.legs) twice.push_back(leg.spin.twice_j);
      twice.push_back(ss.color.sigma_spin.twice_j);
      return oracles::su2_invariant_count(twice);
    }
  }
  return -1;
}

const VertexColor kFull0{GaugeGroupKind::Full, Spin{0}, {}};
const VertexColor kFullHalf{GaugeGroupKind::Full, Spin{1}, {}};
const VertexColor kFullOne{GaugeGroupKind::Full, Spin{2}, {}};
const VertexColor kTorus0{GaugeGroupKind::Torus, Spin{0}, TorusWeight{0}};
const VertexColor kTorus2{GaugeGroupKind::Torus, Spin{0}, TorusWeight{2}};
const VertexColor kTrivial{GaugeGroupKind::Trivial, Spin{0}, {}};

}  // namespace

TEST_CASE("star spaces list dual legs then plain legs in edge order") {
  ColoredGraph cg = cycle_graph(Spin{1}, Spin{2}, kFullHalf, kFull0);
  StarSpace ss = star_space(cg, 0);
  REQUIRE(ss.legs.size() == 2);
  CHECK(ss.legs[0].edge == 0);
  CHECK(ss.legs[0].dual);
  CHECK(ss.legs[0].spin == Spin{1});
  CHECK(ss.legs[1].edge == 1);
  CHECK(!ss.legs[1].dual);
  CHECK(ss.legs[1].spin == Spin{2});
  CHECK(ss.m_dim == 6);
  CHECK(ss.dim == 12);
  CHECK(ss.sigma_dim() == 2);
  CHECK(ss.m_leg_dims() == std::vector<int>{2, 3});
  CHECK(ss.full_leg_dims() == std::vector<int>{2, 3, 2});

  // Loops contribute one dual and one plain leg.
  ColoredGraph lp = loop_graph(Spin{1}, kFull0);
  StarSpace ls = star_space(lp, 0);
  REQUIRE(ls.legs.size() == 2);
  CHECK(ls.legs[0].dual);
  CHECK(!ls.legs[1].dual);
  CHECK(ls.m_dim == 4);
}

TEST_CASE("star weights negate dual legs and include sigma") {
  ColoredGraph cg = loop_graph(Spin{1}, kTorus2);
  StarSpace ss = star_space(cg, 0);
  REQUIRE(ss.weights.size() == 4);
  // Flat index (dual a, plain b) with a slowest; dual weight -(1-2a),
  // plain weight (1-2b), sigma weight 2 everywhere.
  CHECK(ss.weights[0] == -1 + 1 + 2);
  CHECK(ss.weights[1] == -1 - 1 + 2);
  CHECK(ss.weights[2] == 1 + 1 + 2);
  CHECK(ss.weights[3] == 1 - 1 + 2);
}

TEST_CASE("invariant dimensions match the counting oracles") {
  std::vector<ColoredGraph> cases;
  cases.push_back(loop_graph(Spin{0}, kFull0));
  cases.push_back(loop_graph(Spin{1}, kFull0));
  cases.push_back(loop_graph(Spin{2}, kFull0));
  cases.push_back(loop_graph(Spin{3}, kFull0));
  cases.push_back(loop_graph(Spin{2}, kFullOne));
  cases.push_back(two_loop_graph(Spin{1}, Spin{1}, kFull0));
  cases.push_back(two_loop_graph(Spin{1}, Spin{1}, kFullOne));
  cases.push_back(two_loop_graph(Spin{2}, Spin{2}, kFull0));
  cases.push_back(two_loop_graph(Spin{2}, Spin{1}, kFullHalf));
  cases.push_back(loop_graph(Spin{1}, kTorus0));
  cases.push_back(loop_graph(Spin{2}, kTorus2));
  cases.push_back(two_loop_graph(Spin{1}, Spin{2}, kTorus0));
  cases.push_back(loop_graph(Spin{2}, kTrivial));
  cases.push_back(cycle_graph(Spin{1}, Spin{1}, kFull0, kFull0));
  cases.push_back(cycle_graph(Spin{1}, Spin{1}, kFullHalf, kFullHalf));
  cases.push_back(cycle_graph(Spin{1}, Spin{2}, kFullHalf, kFull0));
  cases.push_back(cycle_graph(Spin{2}, Spin{2}, kTorus0, kFull0));

  for (const auto& cg : cases) {
    for (int v = 0; v < int(cg.graph.vertices.size()); ++v) {
      StarSpace ss = star_space(cg, v);
      InvariantBasis basis = invariant_basis(ss);
      long expect = oracle_dim(ss);
      REQUIRE(expect >= 0);
      CHECK(basis.dim() == expect);
      CHECK(dimension_oracle(ss) == expect);
    }
  }
}

TEST_CASE("invariant vectors are fixed by random gauge elements") {
  std::mt19937_64 rng(2024);
  std::vector<ColoredGraph> cases;
  cases.push_back(loop_graph(Spin{2}, kFull0));
  cases.push_back(two_loop_graph(Spin{1}, Spin{1}, kFull0));
  cases.push_back(two_loop_graph(Spin{2}, Spin{1}, kFullHalf));
  cases.push_back(loop_graph(Spin{2}, kTorus2));
  cases.push_back(cycle_graph(Spin{1}, Spin{1}, kFullHalf, kFullHalf));

  for (const auto& cg : cases) {
    for (int v = 0; v < int(cg.graph.vertices.size()); ++v) {
      StarSpace ss = star_space(cg, v);
      InvariantBasis basis = invariant_basis(ss);
      for (const auto& vec : basis.vectors) {
        for (int trial = 0; trial < 10; ++trial) {
          GroupElement k = random_gauge_element(ss.color, rng);
          Vector moved = star_rep(ss, k) * vec;
          CHECK((moved - vec).cwiseAbs().maxCoeff() < 1e-10);
        }
      }
      // Orthonormality of the returned basis.
      for (int a = 0; a < basis.dim(); ++a)
        for (int b = 0; b < basis.dim(); ++b) {
          Complex ip = basis.vectors[a].dot(basis.vectors[b]);
          CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
    }
  }
}

TEST_CASE("the loop singlet is the normalized identity") {
  for (int t : {1, 2, 3}) {
    ColoredGraph cg = loop_graph(Spin{t}, kFull0);
    StarSpace ss = star_space(cg, 0);
    InvariantBasis basis = invariant_basis(ss);
    REQUIRE(basis.dim() == 1);
    int d = t + 1;
    Vector expect = Vector::Zero(d * d);
    for (int a = 0; a < d; ++a) expect(a * d + a) = 1.0 / std::sqrt(double(d));
    // Phase-align before comparing.
    Complex phase = basis.vectors[0](0) / expect(0);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-10);
    CHECK((basis.vectors[0] - phase * expect).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hom bases intertwine and the reshapes are mutually inverse") {
  std::vector<ColoredGraph> cases;
  cases.push_back(two_loop_graph(Spin{1}, Spin{1}, kFullOne));
  cases.push_back(cycle_graph(Spin{1}, Spin{1}, kFullHalf, kFullHalf));
  cases.push_back(loop_graph(Spin{2}, kTorus2));

  for (const auto& cg : cases) {
    StarSpace ss = star_space(cg, 0);
    HomBasis homs = hom_basis(ss);
    InvariantBasis inv = invariant_basis(ss);
    CHECK(homs.dim() == inv.dim());
    for (const auto& t : homs.maps) {
      CHECK(hom_intertwining_residual(ss, t) < 1e-9);
      Vector vec = tau(ss, t);
      Matrix back = tau_inverse(ss, vec);
      CHECK((back - t).cwiseAbs().maxCoeff() < 1e-12);
      // kiso of the transpose lands on the same tensor.
      Vector via_kiso = kiso(ss, t.transpose());
      CHECK((via_kiso - vec).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("diagonal generators annihilate invariants") {
  ColoredGraph cg = two_loop_graph(Spin{1}, Spin{1}, kFullHalf);
  StarSpace ss = star_space(cg, 0);
  InvariantBasis basis = invariant_basis(ss);
  auto gens = gauge_generators(ss);
  REQUIRE(!gens.empty());
  for (const auto& vec : basis.vectors) {
    for (const auto& gen : gens) {
      CHECK((gen * vec).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}
