#pragma once

// The diagonal-torus specialization: mu basis built from the factorial
// polynomials p_i = prod_{j<=i}(X - Y_j), closed-form derivation action,
// equivariant and divisorial Pieri rules, the GKM model of the projective
// space, and GKM checking of operator matrices.

#include "schubert/operators.hpp"

namespace schubert {

struct MuBasis {
  // mu^j = sum_m eps_of_mu[m][j] eps^{m+1}; unit upper triangular (0-based).
  std::vector<std::vector<Poly>> eps_of_mu;
  std::vector<std::vector<Poly>> mu_of_eps;
  // Wedge-level change of basis over the ordered wedge bases:
  // column c of wedge_eps_of_mu holds the epsilon coordinates of the c-th
  // mu wedge.  Unit upper triangular in the weight-then-lex order.
  PolyMatrix wedge_eps_of_mu;
  PolyMatrix wedge_mu_of_eps;
};

const MuBasis& mu_basis(const ContextPtr& ctx);

// Exact basis change on /\^k; identity when the element already carries the
// requested basis tag.
WedgeElement convert(const WedgeElement& w, Basis target);

// D_1 mu^j = mu^{j+1} + Y_j mu^j with mu^{n+1} = 0; requires k = 1.
WedgeElement d1_mu(int j, const ContextPtr& ctx);

// D_i mu^j = sum_{l=0..i} h_{i-l}(Y_j..Y_{j+l}) mu^{j+l}; the closed form is
// used when j + i <= n + 1 (dropping the mu^{n+1} term), beyond that the
// computation goes through the epsilon basis.  Requires k = 1.
WedgeElement di_mu(int i, int j, const ContextPtr& ctx);

// D_l on the mu wedge of I by the equivariant Pieri formula
//   D_l(mu^I) = sum_{u<=l} sum_{M in P(I,l-u)}
//               h_u(Y_{i_1}..Y_{i_1+m_1},...,Y_{i_k}..Y_{i_k+m_k}) mu^{I+M},
// valid verbatim while every produced index stays <= n+1 (mu^{n+1} = 0);
// when i_k + l > n+1 the action is computed through the epsilon basis.
WedgeElement equivariant_pieri(int l, const IndexSeq& I, const ContextPtr& ctx);

// (D_1 - sum_{r<=k} Y_r) on the mu wedge of I: the divisor class product,
// whose expansion is the Knutson-Tao divisorial Pieri rule.
WedgeElement divisorial_pieri(const IndexSeq& I, const ContextPtr& ctx);

// A class on the fixed points of P^{n-1}: one polynomial per fixed point.
struct GkmClass {
  VarSpec spec;
  std::vector<Poly> components;
  bool operator==(const GkmClass&) const = default;
};

// S_i with components S_i^j = prod_{h=1..i}(y_j - y_h); S_0 is the unit.
GkmClass projective_gkm_class(int i, int n);

// Checks S_i = p_i(S_1) componentwise for 1 <= i <= n-1 and p(S_1) = 0.
bool gkm_identities(int n);

// The GKM divisibility condition over the complete fixed-point graph of
// P^{n-1}: (y_j - y_h) divides S^j - S^h for every pair.
bool gkm_condition(const GkmClass& cls);

// G_I(D) = Pi_k^{-1}(mu wedge of I) as a matrix over the ordered mu wedge
// basis, computed by conjugating the epsilon-basis Schur combination with
// the wedge change of basis.  Cached per context.
SchubertOp operator_matrix_mu(const IndexSeq& I, const ContextPtr& ctx);

// Same operator with every derivation applied through the raw Leibniz
// oracle; no matrix conjugation and no Pieri supports on the way.
SchubertOp operator_matrix_mu_via_leibniz(const IndexSeq& I, const ContextPtr& ctx);

struct GkmEdge {
  IndexSeq from, to;
  int a = 0, b = 0;  // the differing entries; edge weight y_a - y_b
  bool pass = false;
};

struct GkmReport {
  std::vector<GkmEdge> edges;
  bool all_pass = true;
};

// For every pair of basis indices differing in a single entry, checks that
// the difference of the corresponding diagonal entries is divisible by the
// edge weight.
GkmReport gkm_check_diagonal(const SchubertOp& op);

}  // namespace schubert
