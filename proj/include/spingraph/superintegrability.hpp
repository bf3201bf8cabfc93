#pragma once

#include "spingraph/spin_functions.hpp"

namespace spingraph {

// Spanning set of the K_v-invariants inside the degree <= degree_cap
// filtration piece of U(g)^{(x)legs} acting on M^{pi_S(v)} (dual legs act
// through x -> -x^T).  Computed as the joint kernel of the diagonal adjoint
// k_v-action on the span of PBW monomial action matrices; single-leg Casimirs
// and all split Casimirs sum_a x_a^{(p)} x_a^{(q)} are always included up
// front.  Every generator commutes with the diagonal K_v action to < 1e-10.
struct LocalInvariantAlgebra {
  int vertex = 0;
  int degree_cap = 0;
  int span_dim = 0;                // dim of the invariant span at this cap
  std::vector<Matrix> generators;  // m_dim x m_dim action matrices
};

LocalInvariantAlgebra invariant_generators(const StarSpace& ss, int degree_cap);

// Negative-control variant: single-leg Casimirs only (they act as scalars, so
// certificates built from them are never better than inconclusive once the
// multiplicity space has dimension >= 2).
LocalInvariantAlgebra leg_casimirs_only(const StarSpace& ss);

// The multiplicity space Hom_{K_v}(S_v*, M^{pi_S(v)}) as a module: each
// generator A acts by postcomposition T -> A o T, re-expanded in the
// orthonormal Hom basis (re-expansion residual < 1e-9, checked).
struct MultiplicityModule {
  int vertex = 0;
  int dim = 0;                  // Hom basis size
  std::vector<Matrix> actions;  // dim x dim, one per generator
  double closure_residual = 0;
};

MultiplicityModule module_action(const StarSpace& ss, const HomBasis& homs,
                                 const LocalInvariantAlgebra& alg);

// Dimension of { X in End : [X, action] = 0 for all actions }, via the SVD
// nullspace of the stacked commutator maps.  Requires module dim >= 1.
int commutant_dimension(const MultiplicityModule& mod);

// Dimension of the unital algebra generated by the module actions (span of
// words, closed under products).  Never decreases when the cap grows.
int generated_algebra_dimension(const MultiplicityModule& mod);

enum class Verdict { Certified, Inconclusive, Empty };

std::string verdict_text(Verdict v, int degree_cap);

struct VertexCertificate {
  int vertex = 0;
  int module_dim = 0;
  int algebra_dim = 0;
  int commutant_dim = 0;
};

// H^pi is irreducible over the product of the local algebras iff every
// per-vertex multiplicity module is irreducible; a commutant of dimension 1
// at every vertex certifies that at this cap.  The verdict is one-sided:
// a larger commutant at the cap proves nothing about higher degrees.
struct SuperintCertificate {
  Sector sector;
  int degree_cap = 0;
  Verdict verdict = Verdict::Empty;
  std::vector<VertexCertificate> vertices;
};

SuperintCertificate certify(const ColoredGraph& cg, int degree_cap,
                            bool leg_casimirs_only_mode = false);

}  // namespace spingraph
