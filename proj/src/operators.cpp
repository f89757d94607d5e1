#include "schubert/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/torus.hpp"

namespace schubert {

namespace {

std::vector<Poly> unit_coords(const ContextPtr& ctx, int at) {
  std::vector<Poly> v(ctx->dim(), Poly::zero(ctx->vars()));
  v[at] = Poly::constant(ctx->vars(), 1);
  return v;
}

int permutation_sign(std::span<const int> perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

SchubertOp::SchubertOp(ContextPtr ctx, Basis basis, PolyMatrix m)
    : ctx_(std::move(ctx)), basis_(basis), mat_(std::move(m)) {
  if (mat_.n != ctx_->dim()) throw std::invalid_argument("operator matrix has the wrong size");
  if (basis_ == Basis::Mu && ctx_->mode() != Mode::Torus)
    throw std::invalid_argument("the mu basis requires torus mode");
}

SchubertOp SchubertOp::identity(ContextPtr ctx, Basis basis) {
  PolyMatrix m = PolyMatrix::identity(ctx->dim(), ctx->vars());
  return SchubertOp(std::move(ctx), basis, std::move(m));
}

SchubertOp SchubertOp::zero(ContextPtr ctx, Basis basis) {
  PolyMatrix m(ctx->dim(), ctx->vars());
  return SchubertOp(std::move(ctx), basis, std::move(m));
}

WedgeElement SchubertOp::apply(const WedgeElement& w) const {
  if (!ctx_->same_algebra(*w.context()) || basis_ != w.basis())
    throw std::invalid_argument("operator/element basis mismatch");
  return WedgeElement::from_coords(w.context(), basis_, mat_.apply(w.coords()));
}

WedgeElement SchubertOp::column(const IndexSeq& I) const {
  int c = ctx_->wedge_index(I);
  std::vector<Poly> v(dim(), Poly::zero(ctx_->vars()));
  for (int r = 0; r < dim(); ++r) v[r] = mat_.at(r, c);
  return WedgeElement::from_coords(ctx_, basis_, v);
}

SchubertOp& SchubertOp::operator+=(const SchubertOp& o) {
  if (!ctx_->same_algebra(*o.ctx_) || basis_ != o.basis_)
    throw std::invalid_argument("operator add: incompatible operands");
  mat_ += o.mat_;
  return *this;
}

SchubertOp& SchubertOp::operator-=(const SchubertOp& o) {
  if (!ctx_->same_algebra(*o.ctx_) || basis_ != o.basis_)
    throw std::invalid_argument("operator sub: incompatible operands");
  mat_ -= o.mat_;
  return *this;
}

SchubertOp SchubertOp::operator*(const SchubertOp& o) const {
  if (!ctx_->same_algebra(*o.ctx_) || basis_ != o.basis_)
    throw std::invalid_argument("operator mul: incompatible operands");
  return SchubertOp(ctx_, basis_, mat_ * o.mat_);
}

SchubertOp SchubertOp::scaled(const Poly& c) const { return SchubertOp(ctx_, basis_, mat_.scaled(c)); }

bool SchubertOp::operator==(const SchubertOp& o) const {
  return ctx_->same_algebra(*o.ctx_) && basis_ == o.basis_ && mat_ == o.mat_;
}

const PolyMatrix& d_matrix(const ContextPtr& ctx, int h) {
  if (h < 0) throw std::invalid_argument("d_matrix: negative h");
  {
    std::lock_guard<std::mutex> lock(ctx->caches().mu);
    auto it = ctx->caches().d_mats.find(h);
    if (it != ctx->caches().d_mats.end()) return it->second;
  }
  int N = ctx->dim();
  PolyMatrix m(N, ctx->vars());
  for (int c = 0; c < N; ++c) {
    WedgeElement w = d_pieri(h, WedgeElement::basis_element(ctx, Basis::Epsilon, ctx->wedge_basis()[c]));
    for (const auto& [I, p] : w.terms()) m.at(ctx->wedge_index(I), c) = p;
  }
  std::lock_guard<std::mutex> lock(ctx->caches().mu);
  return ctx->caches().d_mats.emplace(h, std::move(m)).first->second;
}

std::vector<Poly> apply_d(const ContextPtr& ctx, int h, std::span<const Poly> v) {
  if (h == 0) return std::vector<Poly>(v.begin(), v.end());
  return d_matrix(ctx, h).apply(v);
}

std::vector<Poly> apply_schur(const ContextPtr& ctx, const IndexSeq& I, std::span<const Poly> v) {
  int k = I.k();
  if (k != ctx->k()) throw std::invalid_argument("apply_schur: index length must equal k");
  std::vector<Poly> out(v.size(), Poly::zero(ctx->vars()));
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  do {
    // row r picks column perm[r]: factor D_{i_{perm[r]} - (r+1)}
    std::vector<int> hs(k);
    bool ok = true;
    for (int r = 0; r < k && ok; ++r) {
      hs[r] = I.at(perm[r]) - (r + 1);
      ok = hs[r] >= 0;
    }
    if (!ok) continue;
    std::vector<Poly> w(v.begin(), v.end());
    for (int r = 0; r < k; ++r)
      if (hs[r] > 0) w = apply_d(ctx, hs[r], w);
    int s = permutation_sign(perm);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (w[i].is_zero()) continue;
      if (s > 0)
        out[i] += w[i];
      else
        out[i] -= w[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SchubertOp schur_op(const IndexSeq& I, const ContextPtr& ctx) {
  {
    std::lock_guard<std::mutex> lock(ctx->caches().mu);
    auto it = ctx->caches().schur_mats.find(I);
    if (it != ctx->caches().schur_mats.end()) return SchubertOp(ctx, Basis::Epsilon, it->second);
  }
  int N = ctx->dim();
  PolyMatrix m(N, ctx->vars());
  for (int c = 0; c < N; ++c) {
    std::vector<Poly> col = apply_schur(ctx, I, unit_coords(ctx, c));
    for (int r = 0; r < N; ++r) m.at(r, c) = std::move(col[r]);
  }
  std::lock_guard<std::mutex> lock(ctx->caches().mu);
  return SchubertOp(ctx, Basis::Epsilon, ctx->caches().schur_mats.emplace(I, std::move(m)).first->second);
}

WedgeElement poincare(const SchubertOp& op) {
  const ContextPtr& ctx = op.context();
  WedgeElement unit = WedgeElement::unit(ctx, op.basis());
  return op.apply(unit);
}

SchubertOp poincare_inv(const IndexSeq& I, const ContextPtr& ctx) { return schur_op(I, ctx); }

WedgeElement schur_unit_image(const IndexSeq& I, const ContextPtr& ctx) {
  std::vector<int> first(ctx->k());
  for (int j = 0; j < ctx->k(); ++j) first[j] = j + 1;
  std::vector<Poly> v = unit_coords(ctx, ctx->wedge_index(IndexSeq(std::move(first))));
  return WedgeElement::from_coords(ctx, Basis::Epsilon, apply_schur(ctx, I, v));
}

SchubertOp class_op(const IndexSeq& I, const ContextPtr& ctx) {
  return ctx->basis() == Basis::Epsilon ? schur_op(I, ctx) : operator_matrix_mu(I, ctx);
}

std::map<IndexSeq, Poly> multiply(const IndexSeq& I, const IndexSeq& J, const ContextPtr& ctx) {
  if (!I.fits(ctx->n()) || !J.fits(ctx->n()) || I.k() != ctx->k() || J.k() != ctx->k())
    throw std::invalid_argument("multiply: indices must lie in I^k_n");
  std::vector<int> first(ctx->k());
  for (int j = 0; j < ctx->k(); ++j) first[j] = j + 1;
  std::vector<Poly> v = unit_coords(ctx, ctx->wedge_index(IndexSeq(std::move(first))));
  if (ctx->basis() == Basis::Epsilon) {
    v = apply_schur(ctx, J, v);
    v = apply_schur(ctx, I, v);
  } else {
    v = operator_matrix_mu(J, ctx).matrix().apply(v);
    v = operator_matrix_mu(I, ctx).matrix().apply(v);
  }
  std::map<IndexSeq, Poly> out;
  for (int i = 0; i < int(v.size()); ++i)
    if (!v[i].is_zero()) out.emplace(ctx->wedge_basis()[i], std::move(v[i]));
  return out;
}

std::vector<SchubertOp> presentation_relations(const ContextPtr& ctx) {
  int n = ctx->n(), k = ctx->k(), N = ctx->dim();
  const VarSpec& vs = ctx->vars();
  // Column indices (2,...,i+1), the weight-i column Schur operators.
  std::vector<IndexSeq> cols;
  for (int i = 1; i <= k; ++i) {
    std::vector<int> e(i);
    for (int j = 0; j < i; ++j) e[j] = j + 2;
    cols.push_back(IndexSeq(std::move(e)));
  }
  std::vector<PolyMatrix> rel(k, PolyMatrix(N, vs));
  for (int c = 0; c < N; ++c) {
    // D~_m e_c via the power-series inversion, with matrix coefficients:
    // D~_0 = 1, D~_m = sum_{i=1..min(m,k)} (-1)^{i+1} Delta_{(2..i+1)}(D) D~_{m-i}.
    std::vector<std::vector<Poly>> dt(n + 1);
    dt[0] = unit_coords(ctx, c);
    for (int m = 1; m <= n; ++m) {
      std::vector<Poly> acc(N, Poly::zero(vs));
      for (int i = 1; i <= std::min(m, k); ++i) {
        // apply Delta with index length i via a k'-independent route: the
        // column operator acts on /\^k as well, only its defining index has
        // length i; expand its determinant directly.
        std::vector<Poly> w(dt[m - i]);
        std::vector<int> perm(i);
        for (int t = 0; t < i; ++t) perm[t] = t;
        std::vector<Poly> term(N, Poly::zero(vs));
        do {
          std::vector<int> hs(i);
          bool ok = true;
          for (int r = 0; r < i && ok; ++r) {
            hs[r] = cols[i - 1].at(perm[r]) - (r + 1);
            ok = hs[r] >= 0;
          }
          if (!ok) continue;
          std::vector<Poly> u(w);
          for (int r = 0; r < i; ++r)
            if (hs[r] > 0) u = apply_d(ctx, hs[r], u);
          int s = permutation_sign(perm);
          for (int t = 0; t < N; ++t) {
            if (u[t].is_zero()) continue;
            if (s > 0)
              term[t] += u[t];
            else
              term[t] -= u[t];
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        int outer = i % 2 == 1 ? 1 : -1;
        for (int t = 0; t < N; ++t) {
          if (term[t].is_zero()) continue;
          if (outer > 0)
            acc[t] += term[t];
          else
            acc[t] -= term[t];
        }
      }
      dt[m] = std::move(acc);
    }
    for (int j = 1; j <= k; ++j) {
      int deg = n - k + j;
      std::vector<Poly> col(dt[deg]);
      for (int i = 1; i <= deg; ++i) {
        const Poly& ci = i <= n ? ctx->p_coeff(i) : Poly::zero(vs);
        if (ci.is_zero()) continue;
        for (int t = 0; t < N; ++t)
          if (!dt[deg - i][t].is_zero()) col[t] += ci * dt[deg - i][t];
      }
      for (int t = 0; t < N; ++t) rel[j - 1].at(t, c) = std::move(col[t]);
    }
  }
  std::vector<SchubertOp> out;
  out.reserve(k);
  for (auto& m : rel) out.push_back(SchubertOp(ctx, Basis::Epsilon, std::move(m)));
  return out;
}

WedgeElement leibniz_apply_schur(const IndexSeq& I, const WedgeElement& w) {
  const ContextPtr& ctx = w.context();
  if (w.basis() != Basis::Epsilon)
    throw std::invalid_argument("leibniz_apply_schur: epsilon basis only");
  int k = I.k();
  WedgeElement out = WedgeElement::zero(ctx, Basis::Epsilon);
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  do {
    std::vector<int> hs(k);
    bool ok = true;
    for (int r = 0; r < k && ok; ++r) {
      hs[r] = I.at(perm[r]) - (r + 1);
      ok = hs[r] >= 0;
    }
    if (!ok) continue;
    WedgeElement u = w;
    for (int r = 0; r < k; ++r)
      if (hs[r] > 0) u = leibniz_oracle(hs[r], u);
    if (permutation_sign(perm) > 0)
      out += u;
    else
      out -= u;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SchubertOp schur_op_via_leibniz(const IndexSeq& I, const ContextPtr& ctx) {
  int N = ctx->dim();
  PolyMatrix m(N, ctx->vars());
  for (int c = 0; c < N; ++c) {
    WedgeElement w = leibniz_apply_schur(
        I, WedgeElement::basis_element(ctx, Basis::Epsilon, ctx->wedge_basis()[c]));
    for (const auto& [K, p] : w.terms()) m.at(ctx->wedge_index(K), c) = p;
  }
  return SchubertOp(ctx, Basis::Epsilon, std::move(m));
}

}  // namespace schubert
