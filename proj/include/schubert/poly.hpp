#pragma once

// Exact sparse multivariate polynomial arithmetic over arbitrary-precision
// integers.  Polynomials are elements of the graded base ring A: either
// Z[y_1..y_d] with deg(y_i) = 1 (torus characters), Z[c_1..c_n] with
// deg(c_i) = i (generic Chern roots of p), or the auxiliary ring
// Z[x_1..x_N] used by the cross-validation oracle.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace schubert {

using Int = boost::multiprecision::cpp_int;

enum class VarKind { TorusY, GenericC, AuxX };

struct VarSpec {
  VarKind kind = VarKind::TorusY;
  int count = 0;

  // Packed-exponent monomials allow at most 8 variables, which covers the
  // whole desk-scale range (n <= 8).
  static constexpr int kMaxVars = 8;

  int degree_of(int var) const { return kind == VarKind::GenericC ? var + 1 : 1; }
  std::string prefix() const;
  std::string name_of(int var) const;  // 0-based var, 1-based display name
  bool operator==(const VarSpec&) const = default;
};

// One exponent per byte, variable i in byte i.  Raw comparison of the packed
// word is then lexicographic with the highest variable most significant.
// Exponents are capped at 127 so that products can never carry across bytes.
using Monomial = std::uint64_t;

inline constexpr Monomial kMonoOne = 0;

int mono_exp(Monomial m, int var);
Monomial mono_from_exps(std::span<const int> exps);
Monomial mono_mul(Monomial a, Monomial b);
int mono_total_degree(Monomial m, const VarSpec& spec);

class Poly {
 public:
  struct Term {
    Monomial mono = kMonoOne;
    Int coeff;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;  // the zero polynomial over the empty variable set
  explicit Poly(const VarSpec& spec) : spec_(spec) {}

  static Poly zero(const VarSpec& spec);
  static Poly constant(const VarSpec& spec, Int c);
  static Poly variable(const VarSpec& spec, int var);  // 0-based
  static Poly monomial(const VarSpec& spec, Monomial m, Int c);

  const VarSpec& spec() const { return spec_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const;  // max graded degree; -1 for the zero polynomial
  bool is_homogeneous() const;
  Int constant_term() const;
  Int coeff(Monomial m) const;
  int max_exp(int var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o);
  Poly operator*(const Int& c) const;
  bool operator==(const Poly& o) const = default;

  // Coefficient of var^d, as a polynomial in which var no longer occurs.
  Poly coeff_of(int var, int d) const;
  Poly substitute_equal(int a, int b) const;  // var a := var b
  Poly set_var_zero(int var) const;
  Poly swap_vars(int a, int b) const;

  std::string to_string() const;
  static Poly parse(const VarSpec& spec, const std::string& text);

  // Terms in canonical display order: graded degree descending, ties broken
  // by the packed monomial descending (lexicographic from the top variable).
  std::vector<const Term*> display_order() const;

 private:
  VarSpec spec_;
  std::vector<Term> terms_;  // sorted by mono ascending, no zero coefficients

  void add_term(Monomial m, const Int& c);
  friend class PolyBuilder;
};

// Accumulates terms out of order, then produces a canonical Poly.
class PolyBuilder {
 public:
  explicit PolyBuilder(const VarSpec& spec) : spec_(spec) {}
  void add(Monomial m, const Int& c);
  void add(const Poly& p, const Int& scale = 1);
  void add_scaled(const Poly& p, Monomial m, const Int& c);  // p * c*m
  Poly build();

 private:
  VarSpec spec_;
  std::vector<Poly::Term> terms_;
};

Poly pow(const Poly& base, int e);

// Complete homogeneous / elementary symmetric polynomials evaluated at
// arbitrary polynomial arguments, with h_0 = e_0 = 1.
Poly complete_h(int m, std::span<const Poly> args, const VarSpec& spec);
Poly elementary_e(int m, std::span<const Poly> args, const VarSpec& spec);

// Exact divisibility test where d is (a multiple of) a difference of two
// variables: substitute one variable for the other and test for zero.
bool divides(const Poly& d, const Poly& p);

}  // namespace schubert
