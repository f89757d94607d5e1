#pragma once

// Dense square matrices over the polynomial ring; exact arithmetic only.

#include <span>
#include <vector>

#include "schubert/poly.hpp"

namespace schubert {

struct PolyMatrix {
  int n = 0;
  std::vector<Poly> a;  // row-major

  PolyMatrix() = default;
  PolyMatrix(int n, const VarSpec& spec) : n(n), a(std::size_t(n) * n, Poly::zero(spec)) {}
  static PolyMatrix identity(int n, const VarSpec& spec);

  Poly& at(int r, int c) { return a[std::size_t(r) * n + c]; }
  const Poly& at(int r, int c) const { return a[std::size_t(r) * n + c]; }

  bool is_zero() const;
  bool operator==(const PolyMatrix&) const = default;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix x, const PolyMatrix& y) { x += y; return x; }
  friend PolyMatrix operator-(PolyMatrix x, const PolyMatrix& y) { x -= y; return x; }
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix scaled(const Poly& c) const;

  // column-vector action: (Mv)_r = sum_c M[r][c] v_c
  std::vector<Poly> apply(std::span<const Poly> v) const;

  // Inverse of a matrix that is unit upper triangular (back substitution;
  // no division ever occurs).
  PolyMatrix inverse_unit_upper() const;

  std::vector<Poly> diagonal() const;
};

}  // namespace schubert
