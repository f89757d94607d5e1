#include "schubert/schubert_c.h"

#include <cstring>
#include <string>

#include "schubert/render.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

struct schub_ctx {
  ContextPtr impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

schub_status fail(schub_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
schub_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(SCHUB_ERR_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(SCHUB_ERR_INTERNAL, e.what());
  }
}

const ContextPtr& ctx_of(schub_ctx* ctx) {
  if (!ctx || !ctx->impl) throw std::invalid_argument("null context");
  return ctx->impl;
}

}  // namespace

extern "C" {

const char* schub_version(void) { return "1.0.0"; }

const char* schub_last_error(void) { return g_last_error.c_str(); }

void schub_free(char* s) { delete[] s; }

schub_status schub_ctx_new(int n, int k, const char* mode, const char* basis, schub_ctx** out) {
  return guarded([&]() -> schub_status {
    if (!out) throw std::invalid_argument("null output pointer");
    if (!mode || !basis) throw std::invalid_argument("null mode/basis");
    ContextPtr ctx = Context::make(n, k, parse_mode(mode), parse_basis(basis));
    *out = new schub_ctx{std::move(ctx)};
    return SCHUB_OK;
  });
}

void schub_ctx_free(schub_ctx* ctx) { delete ctx; }

schub_status schub_pieri(schub_ctx* ctx, int h, const char* index, const char* format, int verify,
                         char** out) {
  return guarded([&]() -> schub_status {
    if (!index || !format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    IndexSeq I = IndexSeq::parse(index);
    if (!I.fits(c->n()) || I.k() != c->k())
      throw std::invalid_argument("index (" + I.to_string() + ") is not in I^k_n");
    Format fmt = parse_format(format);
    WedgeElement w =
        c->basis() == Basis::Epsilon
            ? d_pieri(h, WedgeElement::basis_element(c, Basis::Epsilon, I))
            : equivariant_pieri(h, I, c);
    if (verify && !verify_pieri(h, I, c, w))
      return fail(SCHUB_ERR_VERIFY, "pieri: Leibniz-oracle recomputation disagreed");
    *out = dup_string(render_wedge(w, fmt));
    return SCHUB_OK;
  });
}

schub_status schub_multiply(schub_ctx* ctx, const char* index_i, const char* index_j,
                            const char* format, int verify, char** out) {
  return guarded([&]() -> schub_status {
    if (!index_i || !index_j || !format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    IndexSeq I = IndexSeq::parse(index_i), J = IndexSeq::parse(index_j);
    Format fmt = parse_format(format);
    auto product = multiply(I, J, c);
    if (verify && !verify_multiply(I, J, c, product))
      return fail(SCHUB_ERR_VERIFY, "multiply: oracle recomputation disagreed");
    *out = dup_string(render_multiply(I, J, product, c->mode(), fmt));
    return SCHUB_OK;
  });
}

schub_status schub_matrix(schub_ctx* ctx, const char* index, const char* format, int verify,
                          char** out) {
  return guarded([&]() -> schub_status {
    if (!index || !format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    IndexSeq I = IndexSeq::parse(index);
    Format fmt = parse_format(format);
    SchubertOp op = class_op(I, c);
    if (verify && !verify_matrix(I, c, op))
      return fail(SCHUB_ERR_VERIFY, "matrix: Leibniz-oracle recomputation disagreed");
    *out = dup_string(render_matrix(op, fmt));
    return SCHUB_OK;
  });
}

schub_status schub_relations(schub_ctx* ctx, const char* format, char** out, int* all_zero) {
  return guarded([&]() -> schub_status {
    if (!format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    Format fmt = parse_format(format);
    auto rels = presentation_relations(c);
    bool zero = true;
    for (const auto& r : rels) zero = zero && r.is_zero();
    if (all_zero) *all_zero = zero ? 1 : 0;
    *out = dup_string(render_relations(rels, fmt));
    return SCHUB_OK;
  });
}

schub_status schub_giambelli(schub_ctx* ctx, const char* index, const char* format, int verify,
                             char** out, int* match) {
  return guarded([&]() -> schub_status {
    if (!index || !format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    IndexSeq I = IndexSeq::parse(index);
    if (!I.fits(c->n()) || I.k() != c->k())
      throw std::invalid_argument("index (" + I.to_string() + ") is not in I^k_n");
    Format fmt = parse_format(format);
    WedgeElement w = poincare(class_op(I, c));
    bool ok = w == WedgeElement::basis_element(c, c->basis(), I);
    if (verify && !verify_giambelli(I, c, w))
      return fail(SCHUB_ERR_VERIFY, "giambelli: Leibniz-oracle recomputation disagreed");
    if (match) *match = ok ? 1 : 0;
    *out = dup_string(render_giambelli(I, w, ok, fmt));
    return SCHUB_OK;
  });
}

schub_status schub_gkm_check(schub_ctx* ctx, const char* index, const char* format, char** out,
                             int* all_pass) {
  return guarded([&]() -> schub_status {
    if (!format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    Format fmt = parse_format(format);
    std::vector<std::pair<IndexSeq, GkmReport>> reports;
    if (index) {
      IndexSeq I = IndexSeq::parse(index);
      reports.emplace_back(I, gkm_check_diagonal(class_op(I, c)));
    } else {
      for (const IndexSeq& I : c->wedge_basis())
        reports.emplace_back(I, gkm_check_diagonal(class_op(I, c)));
    }
    bool all = true;
    for (const auto& [I, r] : reports) all = all && r.all_pass;
    if (all_pass) *all_pass = all ? 1 : 0;
    *out = dup_string(render_gkm(reports, c->mode(), fmt));
    return SCHUB_OK;
  });
}

schub_status schub_gkm_check_matrix_json(const char* matrix_json, const char* format, char** out,
                                         int* all_pass) {
  return guarded([&]() -> schub_status {
    if (!matrix_json || !format || !out) throw std::invalid_argument("null argument");
    Format fmt = parse_format(format);
    Json doc;
    try {
      doc = Json::parse(matrix_json);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
    }
    std::vector<Json> ops;
    if (doc.contains("operators"))
      for (const auto& o : doc.at("operators")) ops.push_back(o);
    else
      ops.push_back(doc);
    std::vector<std::pair<IndexSeq, GkmReport>> reports;
    bool all = true;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      ContextPtr c = context_for_op_json(ops[i]);
      SchubertOp op = op_from_json(c, ops[i]);
      GkmReport rep = gkm_check_diagonal(op);
      IndexSeq label = ops[i].contains("index")
                           ? IndexSeq(ops[i].at("index").get<std::vector<int>>())
                           : c->wedge_basis().front();
      all = all && rep.all_pass;
      reports.emplace_back(label, std::move(rep));
    }
    if (all_pass) *all_pass = all ? 1 : 0;
    *out = dup_string(render_gkm(reports, Mode::Torus, fmt));
    return SCHUB_OK;
  });
}

schub_status schub_table(schub_ctx* ctx, const char* format, int verify, char** out) {
  return guarded([&]() -> schub_status {
    if (!format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    Format fmt = parse_format(format);
    std::string body;
    try {
      body = render_table(c, fmt, verify != 0);
    } catch (const std::runtime_error& e) {
      return fail(SCHUB_ERR_VERIFY, e.what());
    }
    *out = dup_string(body);
    return SCHUB_OK;
  });
}

schub_status schub_divisorial(schub_ctx* ctx, const char* index, const char* format, char** out) {
  return guarded([&]() -> schub_status {
    if (!index || !format || !out) throw std::invalid_argument("null argument");
    const ContextPtr& c = ctx_of(ctx);
    IndexSeq I = IndexSeq::parse(index);
    Format fmt = parse_format(format);
    *out = dup_string(render_wedge(divisorial_pieri(I, c), fmt));
    return SCHUB_OK;
  });
}

}  // extern "C"
