#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schubert/poly.hpp"

using namespace schubert;

namespace {

const VarSpec Y4{VarKind::TorusY, 4};
const VarSpec C4{VarKind::GenericC, 4};

Poly P(const std::string& s, const VarSpec& spec = Y4) { return Poly::parse(spec, s); }

Poly random_poly(std::mt19937& rng, const VarSpec& spec, int max_terms, int max_exp, int max_coeff) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<int> coeffd(-max_coeff, max_coeff);
  PolyBuilder acc(spec);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<int> exps(spec.count);
    for (int& e : exps) e = expd(rng);
    acc.add(mono_from_exps(exps), coeffd(rng));
  }
  return acc.build();
}

}  // namespace

TEST_CASE("addition collects like terms and cancels") {
  CHECK((P("y2 - y1") + P("y1 - y2")).is_zero());
  CHECK(P("y2") + P("y2") == P("2*y2"));
  CHECK(P("y2*y3") + P("y3*y2") == P("2*y2*y3"));
}

TEST_CASE("multiplication") {
  CHECK(P("y2 - y1") * P("1") == P("y2 - y1"));
  CHECK(P("y3 - y1") * P("y3 - y2") == P("y3^2 - y3*y2 - y3*y1 + y1*y2"));
  CHECK((Poly::zero(Y4) * P("y1 + 3*y2")).is_zero());
}

TEST_CASE("canonical string format") {
  CHECK(P("2*y2*y3 - y1^2 + 1").to_string() == "2*y2*y3 - y1^2 + 1");
  CHECK(Poly::zero(Y4).to_string() == "0");
  CHECK(P("  y3   -  y2 ").to_string() == "y3 - y2");
  CHECK(P("-y1").to_string() == "-y1");
  CHECK(P("y1^1") == P("y1"));
  CHECK(Poly::constant(Y4, -1).to_string() == "-1");
  // generic variables carry their graded degree
  CHECK(Poly::parse(C4, "c2 + c1^2").degree() == 2);
  CHECK(Poly::parse(C4, "c2 + c1^2").to_string() == "c2 + c1^2");
}

TEST_CASE("parse errors carry the offending token") {
  CHECK_THROWS_AS(P("y9"), std::invalid_argument);
  CHECK_THROWS_AS(P("z1"), std::invalid_argument);
  CHECK_THROWS_AS(P("y1 +"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK_THROWS_AS(P("y1 y2"), std::invalid_argument);
  CHECK_THROWS_WITH(P("y1 + q"), doctest::Contains("q"));
}

TEST_CASE("mixing variable sets is rejected") {
  CHECK_THROWS_AS(P("y1") + Poly::parse(C4, "c1"), std::invalid_argument);
  CHECK_THROWS_AS(P("y1") * Poly::parse(C4, "c1"), std::invalid_argument);
}

TEST_CASE("serialize-parse round trip on random polynomials") {
  std::mt19937 rng(20240811);
  for (const VarSpec& spec : {Y4, C4, VarSpec{VarKind::AuxX, 3}}) {
    for (int i = 0; i < 200; ++i) {
      Poly p = random_poly(rng, spec, 6, 3, 9);
      std::string s = p.to_string();
      Poly q = Poly::parse(spec, s);
      CHECK(q == p);
      CHECK(q.to_string() == s);
    }
  }
}

TEST_CASE("ring axioms, exhaustive on tiny operands") {
  // all polynomials with <= 2 terms drawn from a fixed monomial/coeff pool
  std::vector<Poly> pool = {Poly::zero(Y4), P("1"), P("y1"), P("-y2"), P("y1*y2"), P("y3 - y2"),
                            P("2*y4^2 - 1")};
  for (const Poly& a : pool)
    for (const Poly& b : pool) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const Poly& c : pool) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
}

TEST_CASE("ring axioms, randomized") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    Poly a = random_poly(rng, Y4, 5, 3, 9);
    Poly b = random_poly(rng, Y4, 5, 3, 9);
    Poly c = random_poly(rng, Y4, 5, 3, 9);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly::zero(Y4));
  }
}

TEST_CASE("graded structure") {
  std::mt19937 rng(99);
  for (const VarSpec& spec : {Y4, C4}) {
    for (int i = 0; i < 80; ++i) {
      Poly a = random_poly(rng, spec, 4, 2, 5);
      Poly b = random_poly(rng, spec, 4, 2, 5);
      if (a.is_zero() || b.is_zero()) continue;
      // restrict to the top graded part to get homogeneous inputs
      PolyBuilder ha(spec), hb(spec);
      for (const auto& t : a.terms())
        if (mono_total_degree(t.mono, spec) == a.degree()) ha.add(t.mono, t.coeff);
      for (const auto& t : b.terms())
        if (mono_total_degree(t.mono, spec) == b.degree()) hb.add(t.mono, t.coeff);
      Poly pa = ha.build(), pb = hb.build();
      REQUIRE(pa.is_homogeneous());
      REQUIRE(pb.is_homogeneous());
      Poly prod = pa * pb;
      CHECK(prod.degree() == pa.degree() + pb.degree());
      CHECK(prod.is_homogeneous());
    }
  }
}

TEST_CASE("complete homogeneous symmetric polynomials") {
  VarSpec spec{VarKind::TorusY, 8};
  auto Y = [&](int i) {
    return i == 1 ? Poly::zero(spec)
                  : Poly::variable(spec, i - 1) - Poly::variable(spec, 0);
  };
  std::vector<Poly> args;
  CHECK(complete_h(0, args, spec) == Poly::constant(spec, 1));
  // h_1(Y2,Y3,Y5,Y6,Y7) = y2+y3+y5+y6+y7-5y1
  args = {Y(2), Y(3), Y(5), Y(6), Y(7)};
  CHECK(complete_h(1, args, spec) ==
        Poly::parse(spec, "y2 + y3 + y5 + y6 + y7 - 5*y1"));
  // h_2(a,b) = a^2 + ab + b^2
  VarSpec s2{VarKind::AuxX, 2};
  std::vector<Poly> ab = {Poly::variable(s2, 0), Poly::variable(s2, 1)};
  CHECK(complete_h(2, ab, s2) == Poly::parse(s2, "x1^2 + x1*x2 + x2^2"));
}

TEST_CASE("elementary symmetric polynomials") {
  VarSpec spec{VarKind::TorusY, 4};
  Poly Y2 = Poly::variable(spec, 1) - Poly::variable(spec, 0);
  Poly Y3 = Poly::variable(spec, 2) - Poly::variable(spec, 0);
  std::vector<Poly> args = {Y2, Y3};
  CHECK(elementary_e(1, args, spec) == Y2 + Y3);
  CHECK(elementary_e(2, args, spec) == Y2 * Y3);
  CHECK(elementary_e(0, args, spec) == Poly::constant(spec, 1));
  std::vector<Poly> two = {Poly::variable(spec, 0), Poly::variable(spec, 1)};
  CHECK(elementary_e(3, two, spec).is_zero());
}

TEST_CASE("h/e Newton-style duality") {
  // sum_{i+j=m} (-1)^i e_i(v) h_j(v) = 0 for 1 <= m <= 2|v|
  std::mt19937 rng(31337);
  VarSpec spec{VarKind::TorusY, 4};
  for (int nv = 1; nv <= 4; ++nv) {
    std::vector<Poly> v;
    for (int i = 0; i < nv; ++i) v.push_back(random_poly(rng, spec, 2, 1, 3));
    for (int m = 1; m <= 2 * nv; ++m) {
      Poly s = Poly::zero(spec);
      for (int i = 0; i <= m; ++i) {
        Poly t = elementary_e(i, v, spec) * complete_h(m - i, v, spec);
        if (i % 2 == 0)
          s += t;
        else
          s -= t;
      }
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("divisibility by a variable difference") {
  // Y3 - Y4 = y3 - y4
  CHECK(divides(P("y3 - y4"), P("y3 - y4")));
  CHECK_FALSE(divides(P("y2 - y3"), P("y2 - y1")));
  CHECK(divides(P("y2 - y3"), Poly::zero(Y4)));
  CHECK(divides(P("y1 - y2"), P("y1^2 - y2^2")));
  CHECK_THROWS_AS(divides(Poly::zero(Y4), P("y1")), std::invalid_argument);
  CHECK_THROWS_AS(divides(P("y1 + y2"), P("y1")), std::invalid_argument);
}

TEST_CASE("monomial exponent overflow is detected") {
  Poly big = Poly::monomial(Y4, mono_from_exps(std::vector<int>{100, 0, 0, 0}), 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("substitutions") {
  Poly p = P("y1^2*y2 - y3");
  CHECK(p.substitute_equal(0, 1) == P("y2^3 - y3"));
  CHECK(p.set_var_zero(0) == P("-y3"));
  CHECK(p.swap_vars(0, 2) == P("y3^2*y2 - y1"));
  CHECK(p.coeff_of(0, 2) == P("y2"));
  CHECK(p.max_exp(0) == 2);
}
