#pragma once

// Elements of the exterior power /\^k M(p) in a declared basis, the D_h
// action in the epsilon basis (Pieri form), and the raw Leibniz expansion
// used as an independent oracle for it.

#include <map>

#include "schubert/context.hpp"

namespace schubert {

class WedgeElement {
 public:
  WedgeElement(ContextPtr ctx, Basis basis);
  static WedgeElement zero(ContextPtr ctx, Basis basis);
  static WedgeElement basis_element(ContextPtr ctx, Basis basis, const IndexSeq& I);
  static WedgeElement unit(ContextPtr ctx, Basis basis);  // wedge of 1..k

  const ContextPtr& context() const { return ctx_; }
  Basis basis() const { return basis_; }
  const std::map<IndexSeq, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(const IndexSeq& I) const;

  // Adds c * wedge(I) for I already in I^k_n.
  void add_term(const IndexSeq& I, const Poly& c);

  // Adds c * eps^{idx_1} ^ ... ^ eps^{idx_k} for an arbitrary tuple: indices
  // above n are reduced through the rank-1 relation, factors are re-sorted
  // with bubble-sort sign accounting, repeated factors annihilate the term.
  void accumulate_eps_tuple(std::vector<int> idx, const Poly& c);

  WedgeElement& operator+=(const WedgeElement& o);
  WedgeElement& operator-=(const WedgeElement& o);
  friend WedgeElement operator+(WedgeElement a, const WedgeElement& b) { a += b; return a; }
  friend WedgeElement operator-(WedgeElement a, const WedgeElement& b) { a -= b; return a; }
  WedgeElement operator*(const Poly& c) const;
  bool operator==(const WedgeElement& o) const;

  // Coordinates over the wedge basis of the context.
  std::vector<Poly> coords() const;
  static WedgeElement from_coords(ContextPtr ctx, Basis basis, std::span<const Poly> v);

  // Weight of a homogeneous element (deg coeff + wt(I)); -1 if zero,
  // throws if mixed.
  int homogeneous_weight() const;

 private:
  ContextPtr ctx_;
  Basis basis_;
  std::map<IndexSeq, Poly> terms_;
};

// Returns the permutation sign of sorting idx ascending, or 0 if idx has a
// repeated entry; idx is sorted in place.
int sort_with_sign(std::vector<int>& idx);

// D_h on an epsilon-basis element via Pieri's formula: each term I expands
// over the support P(I,h), then indices above n are reduced.
WedgeElement d_pieri(int h, const WedgeElement& w);

// Same operator by raw expansion of the order-h Leibniz rule over all
// compositions of h into k parts, with D_h eps^i = eps^{i+h}.  Independent
// of pieri_support; kept as the cross-validation oracle.
WedgeElement leibniz_oracle(int h, const WedgeElement& w);

}  // namespace schubert
