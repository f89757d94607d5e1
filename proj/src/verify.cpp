#include "schubert/verify.hpp"

#include "schubert/oracle.hpp"

namespace schubert {

namespace {

WedgeElement to_eps(const WedgeElement& w) { return convert(w, Basis::Epsilon); }

WedgeElement class_apply_leibniz(const IndexSeq& I, const ContextPtr& ctx, const WedgeElement& w) {
  // w in the basis of the context; result in the same basis
  if (ctx->basis() == Basis::Epsilon) return leibniz_apply_schur(I, w);
  const MuBasis& mb = mu_basis(ctx);
  int col = ctx->wedge_index(I);
  WedgeElement weps = to_eps(w);
  WedgeElement img = WedgeElement::zero(ctx, Basis::Epsilon);
  for (int r = 0; r < ctx->dim(); ++r) {
    const Poly& b = mb.wedge_eps_of_mu.at(r, col);
    if (b.is_zero()) continue;
    img += leibniz_apply_schur(ctx->wedge_basis()[r], weps) * b;
  }
  return convert(img, Basis::Mu);
}

}  // namespace

bool verify_pieri(int h, const IndexSeq& I, const ContextPtr& ctx, const WedgeElement& got) {
  if (got.basis() == Basis::Epsilon) {
    WedgeElement expect = leibniz_oracle(h, WedgeElement::basis_element(ctx, Basis::Epsilon, I));
    return expect == got;
  }
  WedgeElement w = to_eps(WedgeElement::basis_element(ctx, Basis::Mu, I));
  WedgeElement expect = convert(leibniz_oracle(h, w), Basis::Mu);
  return expect == got;
}

bool verify_multiply(const IndexSeq& I, const IndexSeq& J, const ContextPtr& ctx,
                     const std::map<IndexSeq, Poly>& got) {
  WedgeElement v = class_apply_leibniz(J, ctx, WedgeElement::unit(ctx, ctx->basis()));
  v = class_apply_leibniz(I, ctx, v);
  if (!(v.terms() == got)) return false;
  if (ctx->mode() == Mode::Classical && ctx->basis() == Basis::Epsilon &&
      weight(I) + weight(J) <= ctx->k() * (ctx->n() - ctx->k())) {
    auto lr = oracle::lr_constants(I, J, ctx->k(), ctx->n());
    std::map<IndexSeq, Int> ints;
    for (const auto& [K, c] : got) ints.emplace(K, c.constant_term());
    if (!(ints == lr)) return false;
  }
  return true;
}

bool verify_matrix(const IndexSeq& I, const ContextPtr& ctx, const SchubertOp& got) {
  SchubertOp expect = ctx->basis() == Basis::Epsilon ? schur_op_via_leibniz(I, ctx)
                                                     : operator_matrix_mu_via_leibniz(I, ctx);
  return expect == got;
}

bool verify_giambelli(const IndexSeq& I, const ContextPtr& ctx, const WedgeElement& got) {
  WedgeElement unit = WedgeElement::unit(ctx, ctx->basis());
  return class_apply_leibniz(I, ctx, unit) == got;
}

}  // namespace schubert
