#include "schubert/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert::oracle {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// lexicographic with x_1 most significant: compare exponent vectors from the
// first variable on
bool lex_less_firstvar(Monomial a, Monomial b, int nvars) {
  for (int i = 0; i < nvars; ++i) {
    int ea = mono_exp(a, i), eb = mono_exp(b, i);
    if (ea != eb) return ea < eb;
  }
  return false;
}

}  // namespace

VarSpec aux_spec(int nvars) {
  if (nvars < 1 || nvars > VarSpec::kMaxVars)
    throw std::invalid_argument("aux_spec: unsupported variable count");
  return VarSpec{VarKind::AuxX, nvars};
}

Poly divide_by_var_diff(const Poly& p, int a, int b) {
  const VarSpec& vs = p.spec();
  if (a == b || a < 0 || b < 0 || a >= vs.count || b >= vs.count)
    throw std::invalid_argument("divide_by_var_diff: bad variable pair");
  if (p.is_zero()) return p;
  int D = p.max_exp(a);
  Poly xb = Poly::variable(vs, b);
  // synthetic division of p, viewed as univariate in x_a, by (x_a - x_b):
  // q_{d} = c_{d+1} + x_b q_{d+1}, remainder c_0 + x_b q_0 must vanish
  std::vector<Poly> q(std::max(D, 1), Poly::zero(vs));
  Poly carry = p.coeff_of(a, D);
  for (int d = D - 1; d >= 0; --d) {
    q[d] = carry;
    carry = p.coeff_of(a, d) + xb * carry;
  }
  if (!carry.is_zero()) throw std::runtime_error("divide_by_var_diff: division is not exact");
  PolyBuilder acc(vs);
  for (int d = 0; d < int(q.size()); ++d) {
    if (q[d].is_zero()) continue;
    std::vector<int> exps(vs.count, 0);
    exps[a] = d;
    acc.add_scaled(q[d], mono_from_exps(exps), 1);
  }
  return acc.build();
}

bool is_symmetric(const Poly& p) {
  for (int a = 0; a + 1 < p.spec().count; ++a)
    if (!(p.swap_vars(a, a + 1) == p)) return false;
  return true;
}

Poly schur_sym_partition(std::vector<int> lambda, int nvars) {
  VarSpec vs = aux_spec(nvars);
  if (int(lambda.size()) > nvars)
    throw std::invalid_argument("schur_sym_partition: more parts than variables");
  lambda.resize(nvars, 0);
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw std::invalid_argument("schur_sym_partition: not a partition");
  if (!lambda.empty() && lambda.back() < 0)
    throw std::invalid_argument("schur_sym_partition: negative part");

  // numerator alternant det(x_i^{lambda_j + N - j})
  std::vector<int> gamma(nvars);
  for (int j = 0; j < nvars; ++j) gamma[j] = lambda[j] + (nvars - 1 - j);
  PolyBuilder num(vs);
  std::vector<int> perm(nvars);
  for (int i = 0; i < nvars; ++i) perm[i] = i;
  do {
    std::vector<int> exps(nvars);
    for (int i = 0; i < nvars; ++i) exps[i] = gamma[perm[i]];
    num.add(mono_from_exps(exps), permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  Poly s = num.build();
  for (int a = 0; a < nvars; ++a)
    for (int b = a + 1; b < nvars; ++b) s = divide_by_var_diff(s, a, b);
  return s;
}

Poly schur_sym(const IndexSeq& I, int nvars) {
  int k = I.k();
  if (k > nvars) throw std::invalid_argument("schur_sym: need k <= N");
  std::vector<int> lambda(k);
  for (int j = 0; j < k; ++j) lambda[j] = I.at(k - 1 - j) - (k - j);
  return schur_sym_partition(std::move(lambda), nvars);
}

std::map<IndexSeq, Int> lr_constants(const IndexSeq& I, const IndexSeq& J, int k, int n) {
  if (I.k() != k || J.k() != k || !I.fits(n) || !J.fits(n))
    throw std::invalid_argument("lr_constants: indices must lie in I^k_n");
  Poly p = schur_sym(I, k) * schur_sym(J, k);
  std::map<IndexSeq, Int> out;
  while (!p.is_zero()) {
    const auto& terms = p.terms();
    Monomial lead = terms.front().mono;
    for (const auto& t : terms)
      if (lex_less_firstvar(lead, t.mono, k)) lead = t.mono;
    std::vector<int> lambda(k);
    for (int i = 0; i < k; ++i) lambda[i] = mono_exp(lead, i);
    for (int i = 0; i + 1 < k; ++i)
      if (lambda[i] < lambda[i + 1])
        throw std::runtime_error("lr_constants: leading monomial is not a partition");
    Int c = p.coeff(lead);
    p -= schur_sym_partition(lambda, k) * c;
    if (lambda[0] <= n - k) {
      std::vector<int> e(k);
      for (int j = 0; j < k; ++j) e[j] = lambda[k - 1 - j] + (j + 1);
      out.emplace(IndexSeq(std::move(e)), std::move(c));
    }
  }
  return out;
}

}  // namespace schubert::oracle
