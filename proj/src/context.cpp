#include "schubert/context.hpp"

#include <stdexcept>

namespace schubert {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Classical: return "classical";
    case Mode::Generic: return "generic";
    case Mode::Torus: return "torus";
  }
  return "?";
}

std::string to_string(Basis b) { return b == Basis::Epsilon ? "epsilon" : "mu"; }

Mode parse_mode(const std::string& s) {
  if (s == "classical") return Mode::Classical;
  if (s == "generic") return Mode::Generic;
  if (s == "torus") return Mode::Torus;
  throw std::invalid_argument("unknown mode '" + s + "' (classical|generic|torus)");
}

Basis parse_basis(const std::string& s) {
  if (s == "eps" || s == "epsilon") return Basis::Epsilon;
  if (s == "mu") return Basis::Mu;
  throw std::invalid_argument("unknown basis '" + s + "' (eps|mu)");
}

ContextPtr Context::make(int n, int k, Mode mode, Basis basis) {
  if (n < 1) throw std::invalid_argument("context: need n >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("context: need 1 <= k <= n");
  if (n > VarSpec::kMaxVars) throw std::invalid_argument("context: n exceeds the supported maximum (8)");
  if (basis == Basis::Mu && mode != Mode::Torus)
    throw std::invalid_argument("context: the mu basis requires torus mode");

  auto ctx = std::shared_ptr<Context>(new Context());
  ctx->n_ = n;
  ctx->k_ = k;
  ctx->mode_ = mode;
  ctx->basis_ = basis;
  ctx->vars_ = mode == Mode::Generic ? VarSpec{VarKind::GenericC, n} : VarSpec{VarKind::TorusY, n};

  const VarSpec& vs = ctx->vars_;
  switch (mode) {
    case Mode::Classical:
      ctx->p_coeffs_.assign(n, Poly::zero(vs));
      break;
    case Mode::Generic:
      for (int i = 0; i < n; ++i) ctx->p_coeffs_.push_back(Poly::variable(vs, i));
      break;
    case Mode::Torus: {
      // expand prod_{j=1..n} (X - Y_j) with Y_1 = 0; px[d] = coeff of X^d
      std::vector<Poly> px{Poly::constant(vs, 1)};
      for (int j = 1; j <= n; ++j) {
        Poly Yj = j == 1 ? Poly::zero(vs) : Poly::variable(vs, j - 1) - Poly::variable(vs, 0);
        std::vector<Poly> nx(px.size() + 1, Poly::zero(vs));
        for (std::size_t d = 0; d < px.size(); ++d) {
          nx[d + 1] += px[d];
          nx[d] -= px[d] * Yj;
        }
        px = std::move(nx);
      }
      for (int i = 1; i <= n; ++i) ctx->p_coeffs_.push_back(px[n - i]);
      break;
    }
  }

  ctx->wedge_basis_ = index_set(n, k);
  for (int i = 0; i < int(ctx->wedge_basis_.size()); ++i)
    ctx->wedge_index_.emplace(ctx->wedge_basis_[i], i);
  return ctx;
}

const Poly& Context::p_coeff(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("p_coeff: index out of range");
  return p_coeffs_[i - 1];
}

Poly Context::torus_Y(int i) const {
  if (vars_.kind != VarKind::TorusY) throw std::invalid_argument("torus_Y: no y variables");
  if (i < 1 || i > n_ + 1) throw std::invalid_argument("torus_Y: index out of range");
  if (i == 1) return Poly::zero(vars_);
  return Poly::variable(vars_, i - 1) - Poly::variable(vars_, 0);
}

int Context::wedge_index(const IndexSeq& I) const {
  auto it = wedge_index_.find(I);
  if (it == wedge_index_.end())
    throw std::invalid_argument("index (" + I.to_string() + ") is not a wedge basis element");
  return it->second;
}

const std::vector<Poly>& Context::epsilon_reduction(int m) const {
  if (m < 1) throw std::invalid_argument("epsilon_reduction: need m >= 1");
  std::lock_guard<std::mutex> lock(caches_.mu);
  auto& memo = caches_.eps_reductions;
  while (int(memo.size()) < m) {
    int next = int(memo.size()) + 1;
    std::vector<Poly> row(n_, Poly::zero(vars_));
    if (next <= n_) {
      row[next - 1] = Poly::constant(vars_, 1);
    } else {
      for (int i = 1; i <= n_; ++i) {
        const Poly& ci = p_coeffs_[i - 1];
        if (ci.is_zero()) continue;
        const std::vector<Poly>& prev = memo[next - i - 1];
        for (int j = 0; j < n_; ++j)
          if (!prev[j].is_zero()) row[j] -= ci * prev[j];
      }
    }
    memo.push_back(std::move(row));
  }
  return memo[m - 1];
}

}  // namespace schubert
