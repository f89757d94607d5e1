#pragma once

// Independent, slow, brute-force cross-validation paths: Schur polynomials
// by the bialternant definition over auxiliary variables x_1..x_N, and
// classical Littlewood-Richardson constants by leading-monomial elimination.
// Shares nothing with the fast operator paths beyond the polynomial ring.

#include <map>

#include "schubert/combinatorics.hpp"
#include "schubert/poly.hpp"

namespace schubert::oracle {

VarSpec aux_spec(int nvars);

// Exact division by (x_a - x_b); throws if the division is not exact.
Poly divide_by_var_diff(const Poly& p, int a, int b);

bool is_symmetric(const Poly& p);

// Schur polynomial of a partition (weakly decreasing, >= 0 entries, at most
// nvars parts) via s_lambda = det(x_i^{lambda_j + N - j}) / det(x_i^{N-j}).
Poly schur_sym_partition(std::vector<int> lambda, int nvars);

// Schur polynomial of the partition (i_k - k, ..., i_1 - 1) attached to I.
Poly schur_sym(const IndexSeq& I, int nvars);

// Expand schur_sym(I) * schur_sym(J) in the Schur basis by repeated
// elimination of the lex-leading monomial (which for s_lambda is x^lambda);
// partitions not fitting the k x (n-k) box are eliminated but dropped from
// the output, mirroring eps^m = 0 for m > n in classical mode.  The
// remainder after elimination must vanish.
std::map<IndexSeq, Int> lr_constants(const IndexSeq& I, const IndexSeq& J, int k, int n);

}  // namespace schubert::oracle
