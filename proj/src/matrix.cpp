#include "schubert/matrix.hpp"

#include <stdexcept>

namespace schubert {

namespace {

const VarSpec& spec_of(const PolyMatrix& m) {
  if (m.a.empty()) throw std::invalid_argument("empty matrix");
  return m.a.front().spec();
}

}  // namespace

PolyMatrix PolyMatrix::identity(int n, const VarSpec& spec) {
  PolyMatrix m(n, spec);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(spec, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (n != o.n) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (n != o.n) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
  return *this;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n != o.n) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix r(n, spec_of(*this));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      const Poly& x = at(i, t);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Poly& y = o.at(t, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& c) const {
  PolyMatrix r(n, spec_of(*this));
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r.a[i] = a[i] * c;
  return r;
}

std::vector<Poly> PolyMatrix::apply(std::span<const Poly> v) const {
  if (int(v.size()) != n) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Poly> out(n, Poly::zero(spec_of(*this)));
  for (int c = 0; c < n; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < n; ++r) {
      const Poly& m = at(r, c);
      if (!m.is_zero()) out[r] += m * v[c];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::inverse_unit_upper() const {
  const VarSpec& spec = spec_of(*this);
  PolyMatrix inv(n, spec);
  for (int c = 0; c < n; ++c) {
    // solve (*this) x = e_c by back substitution
    std::vector<Poly> x(n, Poly::zero(spec));
    for (int r = n - 1; r >= 0; --r) {
      Poly s = r == c ? Poly::constant(spec, 1) : Poly::zero(spec);
      for (int t = r + 1; t < n; ++t) {
        const Poly& m = at(r, t);
        if (!m.is_zero() && !x[t].is_zero()) s -= m * x[t];
      }
      x[r] = std::move(s);
    }
    for (int r = 0; r < n; ++r) inv.at(r, c) = std::move(x[r]);
  }
  return inv;
}

std::vector<Poly> PolyMatrix::diagonal() const {
  std::vector<Poly> d;
  d.reserve(n);
  for (int i = 0; i < n; ++i) d.push_back(at(i, i));
  return d;
}

}  // namespace schubert
