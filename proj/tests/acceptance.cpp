// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failures.  Everything is checked by exact symbolic equality.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "schubert/json_io.hpp"
#include "schubert/oracle.hpp"
#include "schubert/torus.hpp"

using namespace schubert;

namespace {

int g_failures = 0;

void criterion(const std::string& id, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

Json load_fixture(const std::string& name) {
  std::string path = std::string(FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  Json j;
  in >> j;
  return j;
}

WedgeElement mu_elem(const ContextPtr& ctx, const IndexSeq& I) {
  return WedgeElement::basis_element(ctx, Basis::Mu, I);
}

Poly parse_y(const ContextPtr& ctx, const std::string& s) { return Poly::parse(ctx->vars(), s); }

const std::vector<Mode> kAllModes = {Mode::Classical, Mode::Generic, Mode::Torus};

}  // namespace

int main() {
  // 1. the worked G(2,4) computation
  criterion("01 g24-worked-column: G_13(mu^1^mu^3) = mu^2^mu^3 + mu^1^mu^4 + (Y3-Y2) mu^1^mu^3",
            [](std::string&) {
              auto ctx = Context::make(4, 2, Mode::Torus, Basis::Mu);
              WedgeElement expect(ctx, Basis::Mu);
              expect.add_term(IndexSeq({2, 3}), Poly::constant(ctx->vars(), 1));
              expect.add_term(IndexSeq({1, 4}), Poly::constant(ctx->vars(), 1));
              expect.add_term(IndexSeq({1, 3}), parse_y(ctx, "y3 - y2"));
              SchubertOp g13 = operator_matrix_mu(IndexSeq({1, 3}), ctx);
              return g13.column(IndexSeq({1, 3})) == expect &&
                     g13.apply(mu_elem(ctx, IndexSeq({1, 3}))) == expect;
            });

  // 2. the six G(2,4) matrices: boxed diagonals, corrected fixtures, and the
  //    printed-vs-computed discrepancies
  criterion("02 g24-matrices: diagonals exact, off-diagonals match the corrected fixtures",
            [](std::string& detail) {
              auto ctx = Context::make(4, 2, Mode::Torus, Basis::Mu);
              Poly one = Poly::constant(ctx->vars(), 1), z = Poly::zero(ctx->vars());
              Poly Y2 = ctx->torus_Y(2), Y3 = ctx->torus_Y(3), Y4 = ctx->torus_Y(4);
              // the boxed diagonal entries of the six printed tables
              const std::map<IndexSeq, std::vector<Poly>> boxed = {
                  {IndexSeq({1, 2}), {one, one, one, one, one, one}},
                  {IndexSeq({1, 3}), {z, Y3 - Y2, Y4 - Y2, Y3, Y4, Y4 + Y3 - Y2}},
                  {IndexSeq({1, 4}),
                   {z, z, (Y4 - Y2) * (Y4 - Y3), z, Y4 * (Y4 - Y3), Y4 * (Y4 - Y2)}},
                  {IndexSeq({2, 3}), {z, z, z, Y2 * Y3, Y2 * Y4, Y3 * Y4}},
                  {IndexSeq({2, 4}),
                   {z, z, z, z, Y2 * Y4 * (Y4 - Y3), Y4 * Y3 * (Y4 - Y2)}},
                  {IndexSeq({3, 4}),
                   {z, z, z, z, z, Y3 * (Y4 - Y2) * Y4 * (Y3 - Y2)}},
              };
              Json printed = load_fixture("g24_operators_printed.json");
              Json corrected = load_fixture("g24_operators_corrected.json");
              std::map<IndexSeq, SchubertOp> printed_ops, corrected_ops;
              for (const auto& o : printed.at("operators"))
                printed_ops.emplace(IndexSeq(o.at("index").get<std::vector<int>>()),
                                    op_from_json(ctx, o));
              for (const auto& o : corrected.at("operators"))
                corrected_ops.emplace(IndexSeq(o.at("index").get<std::vector<int>>()),
                                      op_from_json(ctx, o));
              std::vector<std::string> discrepancies;
              for (const IndexSeq& I : ctx->wedge_basis()) {
                SchubertOp computed = operator_matrix_mu(I, ctx);
                if (!(computed == operator_matrix_mu_via_leibniz(I, ctx))) return false;
                if (!(computed == corrected_ops.at(I))) return false;
                const auto& diag = boxed.at(I);
                for (int i = 0; i < 6; ++i)
                  if (!(computed.entry(i, i) == diag[i])) return false;
                const SchubertOp& paper = printed_ops.at(I);
                for (int r = 0; r < 6; ++r)
                  for (int c = 0; c < 6; ++c)
                    if (!(paper.entry(r, c) == computed.entry(r, c)))
                      discrepancies.push_back("G_(" + I.to_string() + ")[" +
                                              ctx->wedge_basis()[r].to_string() + ";" +
                                              ctx->wedge_basis()[c].to_string() + "] printed " +
                                              paper.entry(r, c).to_string() + " vs " +
                                              computed.entry(r, c).to_string());
              }
              // the printed tables differ from the recomputation in exactly
              // the two documented cells of G_13
              if (discrepancies.size() != corrected.at("corrections").size()) return false;
              std::ostringstream os;
              os << discrepancies.size() << " documented printed-table discrepancies: ";
              for (const auto& d : discrepancies) os << "{" << d << "} ";
              detail = os.str();
              return discrepancies ==
                     std::vector<std::string>{
                         "G_(1,3)[2,3;1,3] printed 0 vs 1",
                         "G_(1,3)[2,4;2,3] printed 0 vs 1",
                     };
            });

  // 3. GKM conditions on every edge for G(2,4), G(2,5), G(3,5)
  criterion("03 gkm-diagonals: all operators of G(2,4), G(2,5), G(3,5) pass on every edge",
            [](std::string& detail) {
              int edges = 0;
              for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}}) {
                auto ctx = Context::make(n, k, Mode::Torus, Basis::Mu);
                for (const IndexSeq& I : ctx->wedge_basis()) {
                  GkmReport rep = gkm_check_diagonal(operator_matrix_mu(I, ctx));
                  if (!rep.all_pass) return false;
                  edges += int(rep.edges.size());
                }
              }
              detail = std::to_string(edges) + " edges checked";
              return true;
            });

  // 4. equivariant Pieri equals the independent epsilon path
  criterion("04 equivariant-pieri: closed form equals the epsilon path, k <= n <= 6, l <= n",
            [](std::string& detail) {
              int cases = 0;
              for (int n = 1; n <= 6; ++n)
                for (int k = 1; k <= n; ++k) {
                  auto ctx = Context::make(n, k, Mode::Torus);
                  for (const IndexSeq& I : ctx->wedge_basis())
                    for (int l = 0; l <= n; ++l) {
                      WedgeElement direct = equivariant_pieri(l, I, ctx);
                      WedgeElement via_eps = convert(
                          d_pieri(l, convert(mu_elem(ctx, I), Basis::Epsilon)), Basis::Mu);
                      if (!(direct == via_eps)) return false;
                      ++cases;
                    }
                }
              detail = std::to_string(cases) + " cases";
              return true;
            });

  // 5. the worked coefficient at n = 7
  criterion("05 example-coefficient: [mu^2^mu^3^mu^7] D_3(mu^2^mu^3^mu^5) at n=7",
            [](std::string&) {
              auto ctx = Context::make(7, 3, Mode::Torus);
              WedgeElement w = equivariant_pieri(3, IndexSeq({2, 3, 5}), ctx);
              return w.coeff(IndexSeq({2, 3, 7})) ==
                     parse_y(ctx, "y2 + y3 + y5 + y6 + y7 - 5*y1");
            });

  // 6. divisorial Pieri against the bitstring-move reconstruction
  criterion("06 divisorial-pieri: 01->10 moves plus the diagonal, G(2,4) and G(3,6)",
            [](std::string&) {
              Json fixture = load_fixture("g24_divisorial.json");
              for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 3}}) {
                auto ctx = Context::make(n, k, Mode::Torus, Basis::Mu);
                for (const IndexSeq& I : ctx->wedge_basis()) {
                  Bitstring lam = to_bitstring(I, n);
                  WedgeElement expect(ctx, Basis::Mu);
                  for (int p = 0; p + 1 < n; ++p) {
                    if (lam.bits[p] == 0 && lam.bits[p + 1] == 1) {
                      Bitstring moved = lam;
                      moved.bits[p] = 1;
                      moved.bits[p + 1] = 0;
                      expect.add_term(from_bitstring(moved), Poly::constant(ctx->vars(), 1));
                    }
                  }
                  Poly diag = Poly::zero(ctx->vars());
                  for (int r = 0; r < k; ++r)
                    diag += Poly::variable(ctx->vars(), I.at(r) - 1) -
                            Poly::variable(ctx->vars(), r);
                  expect.add_term(I, diag);
                  if (!(divisorial_pieri(I, ctx) == expect)) return false;
                }
                if (n == 4) {
                  // and the shipped fixture agrees
                  for (const auto& e : fixture.at("entries")) {
                    IndexSeq I(e.at("index").get<std::vector<int>>());
                    WedgeElement product = wedge_from_json(ctx, e.at("product"));
                    if (!(divisorial_pieri(I, ctx) == product)) return false;
                    if (!(to_bitstring(I, 4).to_string() == e.at("bitstring"))) return false;
                  }
                }
              }
              return true;
            });

  // 7. presentation relations vanish in every mode
  criterion("07 presentation-relations: all zero for every mode, 1 <= k <= n <= 6",
            [](std::string& detail) {
              int count = 0;
              for (Mode mode : kAllModes)
                for (int n = 1; n <= 6; ++n)
                  for (int k = 1; k <= n; ++k) {
                    auto ctx = Context::make(n, k, mode);
                    for (const auto& r : presentation_relations(ctx)) {
                      if (!r.is_zero()) return false;
                      ++count;
                    }
                  }
              detail = std::to_string(count) + " relations";
              return true;
            });

  // 8. Giambelli in every mode
  criterion("08 giambelli: Delta_I(D)(unit) equals the basis wedge, n <= 6, all modes",
            [](std::string& detail) {
              int count = 0;
              for (Mode mode : kAllModes)
                for (int n = 1; n <= 6; ++n)
                  for (int k = 1; k <= n; ++k) {
                    auto ctx = Context::make(n, k, mode);
                    for (const IndexSeq& I : ctx->wedge_basis()) {
                      if (!(schur_unit_image(I, ctx) ==
                            WedgeElement::basis_element(ctx, Basis::Epsilon, I)))
                        return false;
                      ++count;
                    }
                  }
              detail = std::to_string(count) + " classes";
              return true;
            });

  // 9. Pieri against the raw Leibniz expansion.  The generic run is the
  //    universal one (every mode specializes it); the torus reduction path
  //    is additionally exercised up to n = 4 where the raw expansion stays
  //    affordable.
  criterion("09 pieri-vs-leibniz: h <= 2n, n <= 6 classical+generic, n <= 4 torus",
            [](std::string& detail) {
              int cases = 0;
              auto run = [&cases](Mode mode, int nmax) {
                for (int n = 1; n <= nmax; ++n)
                  for (int k = 1; k <= n; ++k) {
                    auto ctx = Context::make(n, k, mode);
                    for (const IndexSeq& I : ctx->wedge_basis()) {
                      auto w = WedgeElement::basis_element(ctx, Basis::Epsilon, I);
                      for (int h = 0; h <= 2 * n; ++h) {
                        if (!(d_pieri(h, w) == leibniz_oracle(h, w))) return false;
                        ++cases;
                      }
                    }
                  }
                return true;
              };
              if (!run(Mode::Classical, 6)) return false;
              if (!run(Mode::Generic, 6)) return false;
              if (!run(Mode::Torus, 4)) return false;
              detail = std::to_string(cases) + " cases";
              return true;
            });

  // 10. classical structure constants are the LR numbers
  criterion("10 classical-lr: multiply equals the bialternant oracle inside the box, n <= 5",
            [](std::string& detail) {
              auto g24 = Context::make(4, 2, Mode::Classical);
              auto spot = multiply(IndexSeq({1, 3}), IndexSeq({1, 3}), g24);
              if (spot.size() != 2 || spot.at(IndexSeq({1, 4})).constant_term() != 1 ||
                  spot.at(IndexSeq({2, 3})).constant_term() != 1)
                return false;
              int pairs = 0;
              for (int n = 1; n <= 5; ++n)
                for (int k = 1; k <= n; ++k) {
                  auto ctx = Context::make(n, k, Mode::Classical);
                  for (const IndexSeq& I : ctx->wedge_basis())
                    for (const IndexSeq& J : ctx->wedge_basis()) {
                      if (weight(I) + weight(J) > k * (n - k)) continue;
                      std::map<IndexSeq, Int> fast;
                      for (const auto& [K, c] : multiply(I, J, ctx))
                        fast.emplace(K, c.constant_term());
                      if (!(fast == oracle::lr_constants(I, J, k, n))) return false;
                      ++pairs;
                    }
                }
              detail = std::to_string(pairs) + " pairs";
              return true;
            });

  // 11. the rank-1 GKM model identities
  criterion("11 rank1-gkm: S_i = p_i(S_1) and p(S_1) = 0 for 2 <= n <= 8", [](std::string&) {
    for (int n = 2; n <= 8; ++n)
      if (!gkm_identities(n)) return false;
    return true;
  });

  // 12. commutativity and symmetry, exhaustive for n <= 5
  criterion("12 commutativity-symmetry: operators commute and C^K_IJ = C^K_JI, n <= 5",
            [](std::string& detail) {
              int checked = 0;
              for (Mode mode : kAllModes)
                for (int n = 1; n <= 5; ++n)
                  for (int k = 1; k <= n; ++k) {
                    auto ctx = Context::make(n, k, mode);
                    const auto& basis = ctx->wedge_basis();
                    for (std::size_t i = 0; i < basis.size(); ++i)
                      for (std::size_t j = i; j < basis.size(); ++j) {
                        SchubertOp a = schur_op(basis[i], ctx);
                        SchubertOp b = schur_op(basis[j], ctx);
                        if (!(a * b == b * a)) return false;
                        if (!(multiply(basis[i], basis[j], ctx) ==
                              multiply(basis[j], basis[i], ctx)))
                          return false;
                        ++checked;
                      }
                    if (mode == Mode::Torus) {
                      auto mctx = Context::make(n, k, Mode::Torus, Basis::Mu);
                      const auto& mbasis = mctx->wedge_basis();
                      for (std::size_t i = 0; i < mbasis.size(); ++i)
                        for (std::size_t j = i; j < mbasis.size(); ++j) {
                          SchubertOp a = operator_matrix_mu(mbasis[i], mctx);
                          SchubertOp b = operator_matrix_mu(mbasis[j], mctx);
                          if (!(a * b == b * a)) return false;
                          if (!(multiply(mbasis[i], mbasis[j], mctx) ==
                                multiply(mbasis[j], mbasis[i], mctx)))
                            return false;
                          ++checked;
                        }
                    }
                  }
              detail = std::to_string(checked) + " pairs";
              return true;
            });

  if (g_failures == 0)
    std::cout << "acceptance: all 12 criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
  return g_failures;
}
