#pragma once

// The ambient algebra for every operation: the rank-n module M(p) with
// p = X^n + c_1 X^{n-1} + ... + c_n, the exterior power degree k, the
// coefficient mode fixing the c_i, and the working basis tag.

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "schubert/combinatorics.hpp"
#include "schubert/matrix.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class Mode { Classical, Generic, Torus };
enum class Basis { Epsilon, Mu };

std::string to_string(Mode m);
std::string to_string(Basis b);
Mode parse_mode(const std::string& s);
Basis parse_basis(const std::string& s);

class Context;
using ContextPtr = std::shared_ptr<const Context>;
struct MuBasis;

class Context {
 public:
  // classical: all c_i = 0 over Z[y_1..y_n]
  // generic:   c_i is the degree-i variable over Z[c_1..c_n]
  // torus:     p = prod_j (X - Y_j) over Z[y_1..y_n], Y_j = y_j - y_1, Y_1 = 0
  static ContextPtr make(int n, int k, Mode mode, Basis basis = Basis::Epsilon);

  int n() const { return n_; }
  int k() const { return k_; }
  Mode mode() const { return mode_; }
  Basis basis() const { return basis_; }
  const VarSpec& vars() const { return vars_; }
  const Poly& p_coeff(int i) const;  // c_i, 1 <= i <= n
  Poly torus_Y(int i) const;         // Y_i = y_i - y_1 (torus vars only)

  int dim() const { return int(wedge_basis_.size()); }  // C(n,k)
  const std::vector<IndexSeq>& wedge_basis() const { return wedge_basis_; }
  int wedge_index(const IndexSeq& I) const;

  // eps^m expressed in the basis eps^1..eps^n: entry [j] is the coefficient
  // of eps^{j+1}.  For m > n the rank-1 reduction
  //   eps^m = -(c_1 eps^{m-1} + ... + c_n eps^{m-n})
  // is applied recursively; results are memoized.
  const std::vector<Poly>& epsilon_reduction(int m) const;

  bool same_algebra(const Context& o) const {
    return n_ == o.n_ && k_ == o.k_ && mode_ == o.mode_ && vars_ == o.vars_;
  }

  // Shared memo tables, guarded by mu.  Insert-only; the containers keep
  // references to settled entries stable while new ones are added.
  struct Caches {
    std::mutex mu;
    std::deque<std::vector<Poly>> eps_reductions;
    std::shared_ptr<const MuBasis> mu_basis;
    std::map<int, PolyMatrix> d_mats;
    std::map<IndexSeq, PolyMatrix> schur_mats;
    std::map<IndexSeq, PolyMatrix> mu_op_mats;
  };
  Caches& caches() const { return caches_; }

 private:
  Context() = default;
  int n_ = 0, k_ = 0;
  Mode mode_ = Mode::Classical;
  Basis basis_ = Basis::Epsilon;
  VarSpec vars_;
  std::vector<Poly> p_coeffs_;  // c_1..c_n at [0..n-1]
  std::vector<IndexSeq> wedge_basis_;
  std::map<IndexSeq, int> wedge_index_;
  mutable Caches caches_;
};

}  // namespace schubert
