#pragma once

// The operator ring A*(/\^k M(p)): Schur-determinant operators Delta_I(D),
// the Poincare isomorphism, structure constants and the presentation
// relations, all represented faithfully as C(n,k) x C(n,k) matrices over A.

#include "schubert/wedge.hpp"

namespace schubert {

class SchubertOp {
 public:
  SchubertOp(ContextPtr ctx, Basis basis, PolyMatrix m);
  static SchubertOp identity(ContextPtr ctx, Basis basis);
  static SchubertOp zero(ContextPtr ctx, Basis basis);

  const ContextPtr& context() const { return ctx_; }
  Basis basis() const { return basis_; }
  const PolyMatrix& matrix() const { return mat_; }
  int dim() const { return mat_.n; }
  const Poly& entry(int r, int c) const { return mat_.at(r, c); }

  WedgeElement apply(const WedgeElement& w) const;
  WedgeElement column(const IndexSeq& I) const;  // image of the basis wedge I
  std::vector<Poly> diagonal() const { return mat_.diagonal(); }

  SchubertOp& operator+=(const SchubertOp& o);
  SchubertOp& operator-=(const SchubertOp& o);
  friend SchubertOp operator+(SchubertOp a, const SchubertOp& b) { a += b; return a; }
  friend SchubertOp operator-(SchubertOp a, const SchubertOp& b) { a -= b; return a; }
  SchubertOp operator*(const SchubertOp& o) const;
  SchubertOp scaled(const Poly& c) const;
  bool is_zero() const { return mat_.is_zero(); }
  bool operator==(const SchubertOp& o) const;

 private:
  ContextPtr ctx_;
  Basis basis_;
  PolyMatrix mat_;
};

// Matrix of D_h on the epsilon wedge basis (cached per context).
const PolyMatrix& d_matrix(const ContextPtr& ctx, int h);
std::vector<Poly> apply_d(const ContextPtr& ctx, int h, std::span<const Poly> v);

// Delta_I(D) v by Leibniz expansion of det(D_{i_j - i}) into signed products
// of the pairwise-commuting D_h, applied right to left; D_0 = 1 and
// D_j = 0 for j < 0.  Entries of I may exceed n.
std::vector<Poly> apply_schur(const ContextPtr& ctx, const IndexSeq& I, std::span<const Poly> v);

// Matrix of Delta_I(D) on the epsilon basis (cached per context).
SchubertOp schur_op(const IndexSeq& I, const ContextPtr& ctx);

// Poincare isomorphism: op |-> op(wedge of 1..k); its inverse on basis
// wedges is the Schur operator (Giambelli).
WedgeElement poincare(const SchubertOp& op);
SchubertOp poincare_inv(const IndexSeq& I, const ContextPtr& ctx);

// poincare(schur_op(I)) without materializing the full matrix: the Schur
// expansion applied to the unit wedge alone.
WedgeElement schur_unit_image(const IndexSeq& I, const ContextPtr& ctx);

// Class operator in the basis declared by the context: Delta_I(D) for the
// epsilon basis, G_I(D) = Pi_k^{-1}(wedge of mu^I) for the mu basis.
SchubertOp class_op(const IndexSeq& I, const ContextPtr& ctx);

// Structure constants of the basis declared by the context:
// class(I) * class(J) applied to the unit wedge, expanded over the wedge
// basis; returns {K -> C^K_IJ}.
std::map<IndexSeq, Poly> multiply(const IndexSeq& I, const IndexSeq& J, const ContextPtr& ctx);

// The k operators D~_{n-k+j}(D_k, p), j = 1..k, of the presentation of
// A*(/\^k M(p)); all must be the zero matrix.
std::vector<SchubertOp> presentation_relations(const ContextPtr& ctx);

// Independent evaluation paths, used by --verify and the fixture generator:
// the same Schur expansion but with every D_h applied through the raw
// Leibniz-rule oracle instead of the Pieri support.
WedgeElement leibniz_apply_schur(const IndexSeq& I, const WedgeElement& w);
SchubertOp schur_op_via_leibniz(const IndexSeq& I, const ContextPtr& ctx);

}  // namespace schubert
