#include "schubert/torus.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace schubert {

namespace {

void require_torus(const ContextPtr& ctx, const char* op) {
  if (ctx->mode() != Mode::Torus)
    throw std::invalid_argument(std::string(op) + ": requires torus mode");
}

void require_rank1(const ContextPtr& ctx, const char* op) {
  if (ctx->k() != 1)
    throw std::invalid_argument(std::string(op) + ": requires a k = 1 context");
}

}  // namespace

const MuBasis& mu_basis(const ContextPtr& ctx) {
  require_torus(ctx, "mu_basis");
  {
    std::lock_guard<std::mutex> lock(ctx->caches().mu);
    if (ctx->caches().mu_basis) return *ctx->caches().mu_basis;
  }
  int n = ctx->n(), k = ctx->k(), N = ctx->dim();
  const VarSpec& vs = ctx->vars();
  auto mb = std::make_shared<MuBasis>();

  // p_{j-1} as univariate coefficient vectors; mu^j = X * p_{j-1}.
  mb->eps_of_mu.assign(n, std::vector<Poly>(n, Poly::zero(vs)));
  std::vector<Poly> px{Poly::constant(vs, 1)};  // p_0
  for (int j = 1; j <= n; ++j) {
    for (std::size_t d = 0; d < px.size(); ++d) mb->eps_of_mu[d][j - 1] = px[d];
    if (j < n) {
      Poly Yj = ctx->torus_Y(j);
      std::vector<Poly> nx(px.size() + 1, Poly::zero(vs));
      for (std::size_t d = 0; d < px.size(); ++d) {
        nx[d + 1] += px[d];
        nx[d] -= px[d] * Yj;
      }
      px = std::move(nx);
    }
  }
  // invert the unit upper triangular rank-1 change
  PolyMatrix c1(n, vs);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) c1.at(r, c) = mb->eps_of_mu[r][c];
  PolyMatrix c1inv = c1.inverse_unit_upper();
  mb->mu_of_eps.assign(n, std::vector<Poly>(n, Poly::zero(vs)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) mb->mu_of_eps[r][c] = c1inv.at(r, c);

  // wedge-level change of basis: expand each mu wedge multilinearly
  mb->wedge_eps_of_mu = PolyMatrix(N, vs);
  for (int c = 0; c < N; ++c) {
    const IndexSeq& J = ctx->wedge_basis()[c];
    WedgeElement acc = WedgeElement::zero(ctx, Basis::Epsilon);
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, const Poly& coeff) -> void {
      if (pos == k) {
        acc.accumulate_eps_tuple(idx, coeff);
        return;
      }
      int j = J.at(pos);
      for (int m = 1; m <= j; ++m) {
        const Poly& e = mb->eps_of_mu[m - 1][j - 1];
        if (e.is_zero()) continue;
        idx[pos] = m;
        self(self, pos + 1, coeff * e);
      }
    };
    rec(rec, 0, Poly::constant(vs, 1));
    for (const auto& [I, p] : acc.terms()) mb->wedge_eps_of_mu.at(ctx->wedge_index(I), c) = p;
  }
  mb->wedge_mu_of_eps = mb->wedge_eps_of_mu.inverse_unit_upper();

  std::lock_guard<std::mutex> lock(ctx->caches().mu);
  if (!ctx->caches().mu_basis) ctx->caches().mu_basis = std::move(mb);
  return *ctx->caches().mu_basis;
}

WedgeElement convert(const WedgeElement& w, Basis target) {
  if (w.basis() == target) return w;
  const MuBasis& mb = mu_basis(w.context());
  std::vector<Poly> v = w.coords();
  v = target == Basis::Epsilon ? mb.wedge_eps_of_mu.apply(v) : mb.wedge_mu_of_eps.apply(v);
  return WedgeElement::from_coords(w.context(), target, v);
}

WedgeElement d1_mu(int j, const ContextPtr& ctx) { return di_mu(1, j, ctx); }

WedgeElement di_mu(int i, int j, const ContextPtr& ctx) {
  require_torus(ctx, "di_mu");
  require_rank1(ctx, "di_mu");
  if (j < 1 || j > ctx->n()) throw std::invalid_argument("di_mu: j out of 1..n");
  if (i < 0) throw std::invalid_argument("di_mu: negative order");
  int n = ctx->n();
  WedgeElement out = WedgeElement::zero(ctx, Basis::Mu);
  if (j + i <= n + 1) {
    for (int l = 0; l <= i; ++l) {
      if (j + l == n + 1) continue;  // mu^{n+1} = 0
      std::vector<Poly> args;
      for (int t = j; t <= j + l; ++t) args.push_back(ctx->torus_Y(t));
      Poly h = complete_h(i - l, args, ctx->vars());
      out.add_term(IndexSeq({j + l}), h);
    }
    return out;
  }
  WedgeElement w = convert(WedgeElement::basis_element(ctx, Basis::Mu, IndexSeq({j})), Basis::Epsilon);
  return convert(d_pieri(i, w), Basis::Mu);
}

WedgeElement equivariant_pieri(int l, const IndexSeq& I, const ContextPtr& ctx) {
  require_torus(ctx, "equivariant_pieri");
  if (l < 0) throw std::invalid_argument("equivariant_pieri: negative l");
  if (I.k() != ctx->k() || !I.fits(ctx->n()))
    throw std::invalid_argument("equivariant_pieri: index must lie in I^k_n");
  int n = ctx->n(), k = ctx->k();
  if (I.back() + l > n + 1) {
    // the closed form would need mu beyond mu^{n+1}; go through epsilon
    WedgeElement w = convert(WedgeElement::basis_element(ctx, Basis::Mu, I), Basis::Epsilon);
    return convert(d_pieri(l, w), Basis::Mu);
  }
  WedgeElement out = WedgeElement::zero(ctx, Basis::Mu);
  for (int u = 0; u <= l; ++u) {
    for (const auto& M : pieri_support(I, l - u)) {
      IndexSeq J = shifted(I, M);
      if (J.back() == n + 1) continue;  // mu^{n+1} = 0
      std::vector<Poly> args;
      for (int r = 0; r < k; ++r)
        for (int t = I.at(r); t <= I.at(r) + M[r]; ++t) args.push_back(ctx->torus_Y(t));
      out.add_term(J, complete_h(u, args, ctx->vars()));
    }
  }
  return out;
}

WedgeElement divisorial_pieri(const IndexSeq& I, const ContextPtr& ctx) {
  require_torus(ctx, "divisorial_pieri");
  WedgeElement out = equivariant_pieri(1, I, ctx);
  Poly s = Poly::zero(ctx->vars());
  for (int r = 1; r <= ctx->k(); ++r) s += ctx->torus_Y(r);
  out.add_term(I, -s);
  return out;
}

GkmClass projective_gkm_class(int i, int n) {
  if (n < 1 || n > VarSpec::kMaxVars) throw std::invalid_argument("projective_gkm_class: bad n");
  if (i < 0 || i >= n) throw std::invalid_argument("projective_gkm_class: need 0 <= i <= n-1");
  VarSpec vs{VarKind::TorusY, n};
  GkmClass cls{vs, {}};
  for (int j = 1; j <= n; ++j) {
    Poly c = Poly::constant(vs, 1);
    for (int h = 1; h <= i; ++h)
      c *= Poly::variable(vs, j - 1) - Poly::variable(vs, h - 1);
    cls.components.push_back(std::move(c));
  }
  return cls;
}

bool gkm_identities(int n) {
  VarSpec vs{VarKind::TorusY, n};
  GkmClass s1 = projective_gkm_class(1, n);
  auto Y = [&](int h) {
    return h == 1 ? Poly::zero(vs) : Poly::variable(vs, h - 1) - Poly::variable(vs, 0);
  };
  // S_i = p_i(S_1) componentwise
  for (int i = 1; i <= n - 1; ++i) {
    GkmClass si = projective_gkm_class(i, n);
    for (int j = 0; j < n; ++j) {
      Poly v = Poly::constant(vs, 1);
      for (int h = 1; h <= i; ++h) v *= s1.components[j] - Y(h);
      if (!(v == si.components[j])) return false;
    }
  }
  // p(S_1) = 0 componentwise
  for (int j = 0; j < n; ++j) {
    Poly v = Poly::constant(vs, 1);
    for (int h = 1; h <= n; ++h) v *= s1.components[j] - Y(h);
    if (!v.is_zero()) return false;
  }
  return true;
}

bool gkm_condition(const GkmClass& cls) {
  int n = int(cls.components.size());
  for (int j = 0; j < n; ++j)
    for (int h = j + 1; h < n; ++h) {
      Poly d = Poly::variable(cls.spec, j) - Poly::variable(cls.spec, h);
      if (!divides(d, cls.components[j] - cls.components[h])) return false;
    }
  return true;
}

SchubertOp operator_matrix_mu(const IndexSeq& I, const ContextPtr& ctx) {
  require_torus(ctx, "operator_matrix_mu");
  if (I.k() != ctx->k() || !I.fits(ctx->n()))
    throw std::invalid_argument("operator_matrix_mu: index must lie in I^k_n");
  {
    std::lock_guard<std::mutex> lock(ctx->caches().mu);
    auto it = ctx->caches().mu_op_mats.find(I);
    if (it != ctx->caches().mu_op_mats.end()) return SchubertOp(ctx, Basis::Mu, it->second);
  }
  const MuBasis& mb = mu_basis(ctx);
  int N = ctx->dim();
  int col = ctx->wedge_index(I);
  // G_I(D) = sum_L b_L Delta_L(D) where mu^I = sum_L b_L eps^L
  PolyMatrix eps_mat(N, ctx->vars());
  for (int r = 0; r < N; ++r) {
    const Poly& b = mb.wedge_eps_of_mu.at(r, col);
    if (b.is_zero()) continue;
    eps_mat += schur_op(ctx->wedge_basis()[r], ctx).matrix().scaled(b);
  }
  PolyMatrix mu_mat = mb.wedge_mu_of_eps * eps_mat * mb.wedge_eps_of_mu;
  std::lock_guard<std::mutex> lock(ctx->caches().mu);
  return SchubertOp(ctx, Basis::Mu, ctx->caches().mu_op_mats.emplace(I, std::move(mu_mat)).first->second);
}

SchubertOp operator_matrix_mu_via_leibniz(const IndexSeq& I, const ContextPtr& ctx) {
  require_torus(ctx, "operator_matrix_mu_via_leibniz");
  const MuBasis& mb = mu_basis(ctx);
  int N = ctx->dim();
  int col = ctx->wedge_index(I);
  PolyMatrix m(N, ctx->vars());
  for (int c = 0; c < N; ++c) {
    WedgeElement w = convert(WedgeElement::basis_element(ctx, Basis::Mu, ctx->wedge_basis()[c]),
                             Basis::Epsilon);
    WedgeElement img = WedgeElement::zero(ctx, Basis::Epsilon);
    for (int r = 0; r < N; ++r) {
      const Poly& b = mb.wedge_eps_of_mu.at(r, col);
      if (b.is_zero()) continue;
      img += leibniz_apply_schur(ctx->wedge_basis()[r], w) * b;
    }
    WedgeElement img_mu = convert(img, Basis::Mu);
    for (const auto& [K, p] : img_mu.terms()) m.at(ctx->wedge_index(K), c) = p;
  }
  return SchubertOp(ctx, Basis::Mu, std::move(m));
}

GkmReport gkm_check_diagonal(const SchubertOp& op) {
  const ContextPtr& ctx = op.context();
  require_torus(ctx, "gkm_check_diagonal");
  GkmReport report;
  const auto& basis = ctx->wedge_basis();
  std::vector<Poly> diag = op.diagonal();
  for (int r = 0; r < int(basis.size()); ++r)
    for (int s = r + 1; s < int(basis.size()); ++s) {
      // an edge of the fixed-point graph: index sets differing in one entry
      std::vector<int> only_r, only_s;
      std::set_difference(basis[r].entries().begin(), basis[r].entries().end(),
                          basis[s].entries().begin(), basis[s].entries().end(),
                          std::back_inserter(only_r));
      std::set_difference(basis[s].entries().begin(), basis[s].entries().end(),
                          basis[r].entries().begin(), basis[r].entries().end(),
                          std::back_inserter(only_s));
      if (only_r.size() != 1 || only_s.size() != 1) continue;
      int a = only_r[0], b = only_s[0];
      Poly w = Poly::variable(ctx->vars(), a - 1) - Poly::variable(ctx->vars(), b - 1);
      bool pass = divides(w, diag[r] - diag[s]);
      report.edges.push_back({basis[r], basis[s], a, b, pass});
      report.all_pass = report.all_pass && pass;
    }
  return report;
}

}  // namespace schubert
