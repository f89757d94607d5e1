#include "schubert/json_io.hpp"

#include <stdexcept>

namespace schubert {

namespace {

IndexSeq index_from_json(const Json& j) {
  std::vector<int> e;
  for (const auto& v : j) e.push_back(v.get<int>());
  return IndexSeq(std::move(e));
}

Json index_to_json(const IndexSeq& I) {
  Json a = Json::array();
  for (int v : I.entries()) a.push_back(v);
  return a;
}

}  // namespace

Json wedge_to_json(const WedgeElement& w) {
  const ContextPtr& ctx = w.context();
  Json terms = Json::array();
  // deterministic: wedge basis order
  for (const IndexSeq& I : ctx->wedge_basis()) {
    auto it = w.terms().find(I);
    if (it == w.terms().end()) continue;
    Json t;
    t["index"] = index_to_json(I);
    t["coeff"] = it->second.to_string();
    terms.push_back(std::move(t));
  }
  Json j;
  j["basis"] = to_string(w.basis());
  j["terms"] = std::move(terms);
  return j;
}

WedgeElement wedge_from_json(const ContextPtr& ctx, const Json& j) {
  Basis basis = parse_basis(j.at("basis").get<std::string>());
  WedgeElement w(ctx, basis);
  for (const auto& t : j.at("terms")) {
    IndexSeq I = index_from_json(t.at("index"));
    w.add_term(I, Poly::parse(ctx->vars(), t.at("coeff").get<std::string>()));
  }
  return w;
}

Json op_to_json(const SchubertOp& op) {
  const ContextPtr& ctx = op.context();
  Json indices = Json::array();
  for (const IndexSeq& I : ctx->wedge_basis()) indices.push_back(index_to_json(I));
  Json entries = Json::array();
  for (int r = 0; r < op.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < op.dim(); ++c) row.push_back(op.entry(r, c).to_string());
    entries.push_back(std::move(row));
  }
  Json j;
  j["basis"] = to_string(op.basis());
  j["n"] = ctx->n();
  j["k"] = ctx->k();
  j["indices"] = std::move(indices);
  j["entries"] = std::move(entries);
  return j;
}

SchubertOp op_from_json(const ContextPtr& ctx, const Json& j) {
  Basis basis = parse_basis(j.at("basis").get<std::string>());
  if (j.at("n").get<int>() != ctx->n() || j.at("k").get<int>() != ctx->k())
    throw std::invalid_argument("op_from_json: n/k do not match the context");
  const Json& indices = j.at("indices");
  if (int(indices.size()) != ctx->dim())
    throw std::invalid_argument("op_from_json: wrong basis size");
  for (int i = 0; i < ctx->dim(); ++i)
    if (!(index_from_json(indices[i]) == ctx->wedge_basis()[i]))
      throw std::invalid_argument("op_from_json: basis order does not match");
  const Json& entries = j.at("entries");
  if (int(entries.size()) != ctx->dim())
    throw std::invalid_argument("op_from_json: wrong row count");
  PolyMatrix m(ctx->dim(), ctx->vars());
  for (int r = 0; r < ctx->dim(); ++r) {
    const Json& row = entries[r];
    if (int(row.size()) != ctx->dim())
      throw std::invalid_argument("op_from_json: wrong column count");
    for (int c = 0; c < ctx->dim(); ++c)
      m.at(r, c) = Poly::parse(ctx->vars(), row[c].get<std::string>());
  }
  return SchubertOp(ctx, basis, std::move(m));
}

ContextPtr context_for_op_json(const Json& j) {
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  Basis basis = parse_basis(j.at("basis").get<std::string>());
  return Context::make(n, k, Mode::Torus, basis);
}

Json multiply_to_json(const IndexSeq& I, const IndexSeq& J,
                      const std::map<IndexSeq, Poly>& product) {
  Json terms = Json::array();
  for (const auto& [K, c] : product) {
    Json t;
    t["index"] = index_to_json(K);
    t["coeff"] = c.to_string();
    terms.push_back(std::move(t));
  }
  Json j;
  j["I"] = index_to_json(I);
  j["J"] = index_to_json(J);
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace schubert
