#include "schubert/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

void require_eps(const WedgeElement& w, const char* op) {
  if (w.basis() != Basis::Epsilon)
    throw std::invalid_argument(std::string(op) + ": requires the epsilon basis");
}

}  // namespace

WedgeElement::WedgeElement(ContextPtr ctx, Basis basis) : ctx_(std::move(ctx)), basis_(basis) {
  if (!ctx_) throw std::invalid_argument("wedge element needs a context");
  if (basis_ == Basis::Mu && ctx_->mode() != Mode::Torus)
    throw std::invalid_argument("the mu basis requires torus mode");
}

WedgeElement WedgeElement::zero(ContextPtr ctx, Basis basis) {
  return WedgeElement(std::move(ctx), basis);
}

WedgeElement WedgeElement::basis_element(ContextPtr ctx, Basis basis, const IndexSeq& I) {
  WedgeElement w(ctx, basis);
  ctx->wedge_index(I);  // validates I in I^k_n
  w.add_term(I, Poly::constant(ctx->vars(), 1));
  return w;
}

WedgeElement WedgeElement::unit(ContextPtr ctx, Basis basis) {
  std::vector<int> e(ctx->k());
  for (int j = 0; j < ctx->k(); ++j) e[j] = j + 1;
  return basis_element(std::move(ctx), basis, IndexSeq(std::move(e)));
}

Poly WedgeElement::coeff(const IndexSeq& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? Poly::zero(ctx_->vars()) : it->second;
}

void WedgeElement::add_term(const IndexSeq& I, const Poly& c) {
  if (c.is_zero()) return;
  if (I.k() != ctx_->k() || !I.fits(ctx_->n()))
    throw std::invalid_argument("add_term: index (" + I.to_string() + ") outside the wedge basis");
  auto [it, inserted] = terms_.try_emplace(I, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

void WedgeElement::accumulate_eps_tuple(std::vector<int> idx, const Poly& c) {
  if (basis_ != Basis::Epsilon)
    throw std::invalid_argument("accumulate_eps_tuple: epsilon-basis elements only");
  if (c.is_zero()) return;
  int n = ctx_->n();
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    if (idx[pos] > n) {
      const std::vector<Poly>& rep = ctx_->epsilon_reduction(idx[pos]);
      for (int j = 0; j < n; ++j) {
        if (rep[j].is_zero()) continue;
        std::vector<int> sub(idx);
        sub[pos] = j + 1;
        accumulate_eps_tuple(std::move(sub), c * rep[j]);
      }
      return;
    }
    if (idx[pos] < 1) throw std::invalid_argument("wedge factor index must be >= 1");
  }
  int sign = sort_with_sign(idx);
  if (sign == 0) return;
  add_term(IndexSeq(std::move(idx)), sign > 0 ? c : -c);
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& o) {
  if (!ctx_->same_algebra(*o.ctx_) || basis_ != o.basis_)
    throw std::invalid_argument("wedge add: incompatible elements");
  for (const auto& [I, c] : o.terms_) add_term(I, c);
  return *this;
}

WedgeElement& WedgeElement::operator-=(const WedgeElement& o) {
  if (!ctx_->same_algebra(*o.ctx_) || basis_ != o.basis_)
    throw std::invalid_argument("wedge sub: incompatible elements");
  for (const auto& [I, c] : o.terms_) add_term(I, -c);
  return *this;
}

WedgeElement WedgeElement::operator*(const Poly& c) const {
  WedgeElement r(ctx_, basis_);
  if (c.is_zero()) return r;
  for (const auto& [I, p] : terms_) r.add_term(I, p * c);
  return r;
}

bool WedgeElement::operator==(const WedgeElement& o) const {
  return ctx_->same_algebra(*o.ctx_) && basis_ == o.basis_ && terms_ == o.terms_;
}

std::vector<Poly> WedgeElement::coords() const {
  std::vector<Poly> v(ctx_->dim(), Poly::zero(ctx_->vars()));
  for (const auto& [I, c] : terms_) v[ctx_->wedge_index(I)] = c;
  return v;
}

WedgeElement WedgeElement::from_coords(ContextPtr ctx, Basis basis, std::span<const Poly> v) {
  if (int(v.size()) != ctx->dim())
    throw std::invalid_argument("from_coords: wrong coordinate count");
  WedgeElement w(ctx, basis);
  for (int i = 0; i < int(v.size()); ++i)
    if (!v[i].is_zero()) w.add_term(ctx->wedge_basis()[i], v[i]);
  return w;
}

int WedgeElement::homogeneous_weight() const {
  int w = -1;
  for (const auto& [I, c] : terms_) {
    if (!c.is_homogeneous()) throw std::runtime_error("mixed-weight wedge element");
    int cur = c.degree() + weight(I);
    if (w == -1) w = cur;
    if (cur != w) throw std::runtime_error("mixed-weight wedge element");
  }
  return w;
}

WedgeElement d_pieri(int h, const WedgeElement& w) {
  require_eps(w, "d_pieri");
  if (h < 0) throw std::invalid_argument("d_pieri: negative h");
  WedgeElement out(w.context(), Basis::Epsilon);
  for (const auto& [I, c] : w.terms()) {
    for (const auto& H : pieri_support(I, h)) {
      std::vector<int> idx(I.entries());
      for (int j = 0; j < I.k(); ++j) idx[j] += H[j];
      out.accumulate_eps_tuple(std::move(idx), c);
    }
  }
  return out;
}

WedgeElement leibniz_oracle(int h, const WedgeElement& w) {
  require_eps(w, "leibniz_oracle");
  if (h < 0) throw std::invalid_argument("leibniz_oracle: negative h");
  WedgeElement out(w.context(), Basis::Epsilon);
  for (const auto& [I, c] : w.terms()) {
    int k = I.k();
    std::vector<int> comp(k, 0);
    auto rec = [&](auto&& self, int j, int rem) -> void {
      if (j == k - 1) {
        comp[j] = rem;
        std::vector<int> idx(I.entries());
        for (int t = 0; t < k; ++t) idx[t] += comp[t];
        out.accumulate_eps_tuple(std::move(idx), c);
        return;
      }
      for (int t = 0; t <= rem; ++t) {
        comp[j] = t;
        self(self, j + 1, rem - t);
      }
    };
    rec(rec, 0, h);
  }
  return out;
}

}  // namespace schubert
