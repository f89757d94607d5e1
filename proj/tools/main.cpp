// Command-line front end for the equivariant Schubert calculus engine.
// Talks to the shared library exclusively through the C interface.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "schubert/schubert_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;

struct Common {
  int n = 4;
  int k = 2;
  std::string mode = "torus";
  std::string basis;  // defaults to mu in torus mode, eps otherwise
  std::string format = "text";
  bool verify = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_verify = true) {
  cmd->set_help_flag("--help", "print help and exit");
  cmd->add_option("--n,-n", c.n, "rank of M(p)")->check(CLI::Range(1, 8));
  cmd->add_option("--k,-k", c.k, "exterior power degree")->check(CLI::Range(1, 8));
  cmd->add_option("--mode", c.mode, "coefficient mode: classical|generic|torus");
  cmd->add_option("--basis", c.basis, "working basis: eps|mu (mu requires torus mode)");
  cmd->add_option("--format", c.format, "output format: json|text|latex");
  if (with_verify)
    cmd->add_flag("--verify", c.verify, "re-run the request through the oracle path and compare");
}

struct CtxHandle {
  schub_ctx* ptr = nullptr;
  ~CtxHandle() { schub_ctx_free(ptr); }
};

int open_context(const Common& c, CtxHandle& h) {
  std::string basis = c.basis.empty() ? (c.mode == "torus" ? "mu" : "eps") : c.basis;
  schub_status st = schub_ctx_new(c.n, c.k, c.mode.c_str(), basis.c_str(), &h.ptr);
  if (st != SCHUB_OK) {
    std::cerr << "error: " << schub_last_error() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int finish(schub_status st, char* out, int flag_ok = 1) {
  std::unique_ptr<char, void (*)(char*)> guard(out, schub_free);
  if (st == SCHUB_OK && out) {
    std::string_view s(out);
    std::cout << s;
    if (!s.empty() && s.back() != '\n') std::cout << "\n";
  }
  if (st == SCHUB_OK && !flag_ok) {
    std::cerr << "error: consistency check failed\n";
    return kExitInconsistent;
  }
  if (st == SCHUB_ERR_ARG) {
    std::cerr << "error: " << schub_last_error() << "\n";
    return kExitUsage;
  }
  if (st != SCHUB_OK) {
    std::cerr << "error: " << schub_last_error() << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int table_limit() {
  const char* env = std::getenv("SCHUBERT_MAX_N");
  if (!env) return 8;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    return 8;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Schubert calculus on Grassmannians via derivations on /\\ M(p)"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit");

  Common c;
  std::string index = "1,2", index_j = "1,2";
  int h = 1;
  std::string fixtures;
  bool force = false;

  auto* pieri = app.add_subcommand("pieri", "expand D_h on a basis wedge");
  add_common(pieri, c);
  pieri->add_option("--h", h, "order of the derivation")->check(CLI::Range(0, 127));
  pieri->add_option("--index", index, "comma-separated index sequence, e.g. 1,3")->required();

  auto* mult = app.add_subcommand("multiply", "structure constants of class(I)*class(J)");
  add_common(mult, c);
  mult->add_option("--I", index, "left index sequence")->required();
  mult->add_option("--J", index_j, "right index sequence")->required();

  auto* matrix = app.add_subcommand("matrix", "operator matrix over the wedge basis");
  add_common(matrix, c);
  matrix->add_option("--index", index, "index sequence of the class")->required();

  auto* relations = app.add_subcommand("relations", "presentation relations (must all vanish)");
  add_common(relations, c, false);

  auto* gkm = app.add_subcommand("gkm-check", "GKM divisibility for operator diagonals");
  add_common(gkm, c, false);
  gkm->add_option("--index", index, "restrict to one class (default: every basis index)");
  gkm->add_option("--fixtures", fixtures, "check matrices from a JSON fixture file instead");

  auto* giambelli = app.add_subcommand("giambelli", "apply a class operator to the unit wedge");
  add_common(giambelli, c);
  giambelli->add_option("--index", index, "index sequence of the class")->required();

  auto* table = app.add_subcommand("table", "full structure-constant table");
  add_common(table, c);
  table->add_flag("--force", force, "ignore the size limit");

  auto* divisorial =
      app.add_subcommand("divisorial", "divisorial Pieri product for a class (torus mode)");
  add_common(divisorial, c, false);
  divisorial->add_option("--index", index, "index sequence of the class")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  char* out = nullptr;
  if (pieri->parsed()) {
    CtxHandle ctx;
    if (int rc = open_context(c, ctx)) return rc;
    schub_status st = schub_pieri(ctx.ptr, h, index.c_str(), c.format.c_str(), c.verify, &out);
    return finish(st, out);
  }
  if (mult->parsed()) {
    CtxHandle ctx;
    if (int rc = open_context(c, ctx)) return rc;
    schub_status st =
        schub_multiply(ctx.ptr, index.c_str(), index_j.c_str(), c.format.c_str(), c.verify, &out);
    return finish(st, out);
  }
  if (matrix->parsed()) {
    CtxHandle ctx;
    if (int rc = open_context(c, ctx)) return rc;
    schub_status st = schub_matrix(ctx.ptr, index.c_str(), c.format.c_str(), c.verify, &out);
    return finish(st, out);
  }
  if (relations->parsed()) {
    CtxHandle ctx;
    if (int rc = open_context(c, ctx)) return rc;
    int all_zero = 0;
    schub_status st = schub_relations(ctx.ptr, c.format.c_str(), &out, &all_zero);
    return finish(st, out, all_zero);
  }
  if (gkm->parsed()) {
    int all_pass = 0;
    schub_status st;
    if (!fixtures.empty()) {
      std::ifstream in(fixtures);
      if (!in) {
        std::cerr << "error: cannot open fixture file '" << fixtures << "'\n";
        return kExitUsage;
      }
      std::ostringstream body;
      body << in.rdbuf();
      st = schub_gkm_check_matrix_json(body.str().c_str(), c.format.c_str(), &out, &all_pass);
    } else {
      CtxHandle ctx;
      if (int rc = open_context(c, ctx)) return rc;
      const char* idx = gkm->count("--index") ? index.c_str() : nullptr;
      st = schub_gkm_check(ctx.ptr, idx, c.format.c_str(), &out, &all_pass);
    }
    return finish(st, out, all_pass);
  }
  if (giambelli->parsed()) {
    CtxHandle ctx;
    if (int rc = open_context(c, ctx)) return rc;
    int match = 0;
    schub_status st =
        schub_giambelli(ctx.ptr, index.c_str(), c.format.c_str(), c.verify, &out, &match);
    return finish(st, out, match);
  }
  if (table->parsed()) {
    int limit = table_limit();
    if (c.n > limit && !force) {
      std::cerr << "error: n=" << c.n << " exceeds the table limit " << limit
                << " (set SCHUBERT_MAX_N or pass --force)\n";
      return kExitUsage;
    }
    CtxHandle ctx;
    if (int rc = open_context(c, ctx)) return rc;
    schub_status st = schub_table(ctx.ptr, c.format.c_str(), c.verify, &out);
    return finish(st, out);
  }
  if (divisorial->parsed()) {
    CtxHandle ctx;
    if (int rc = open_context(c, ctx)) return rc;
    schub_status st = schub_divisorial(ctx.ptr, index.c_str(), c.format.c_str(), &out);
    return finish(st, out);
  }
  return kExitUsage;
}
