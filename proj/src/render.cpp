#include "schubert/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "schubert/verify.hpp"

namespace schubert {

namespace {

// Shared term printer over a custom variable namer.
std::string poly_string(const Poly& p, const std::function<std::string(int, int)>& var_str,
                        bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Poly::Term* t : p.display_order()) {
    bool neg = t->coeff < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Int a = neg ? Int(-t->coeff) : t->coeff;
    if (t->mono == kMonoOne) {
      os << a.str();
    } else {
      bool have = false;
      if (a != 1) {
        os << a.str();
        have = true;
      }
      for (int i = 0; i < p.spec().count; ++i) {
        int e = mono_exp(t->mono, i);
        if (e == 0) continue;
        if (have && !latex) os << "*";
        os << var_str(i, e);
        have = true;
      }
    }
  }
  return os.str();
}

std::string plain_name(const VarSpec& spec, int var, int e, bool yform) {
  std::string base = yform ? "Y" + std::to_string(var + 1) : spec.name_of(var);
  if (e > 1) base += "^" + std::to_string(e);
  return base;
}

std::string latex_name(const VarSpec& spec, int var, int e, bool yform) {
  std::string letter = yform ? "Y" : spec.prefix();
  std::string base = letter + "_{" + std::to_string(var + 1) + "}";
  if (e > 1) base += "^{" + std::to_string(e) + "}";
  return base;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  if (s == "latex") return Format::Latex;
  throw std::invalid_argument("unknown format '" + s + "' (json|text|latex)");
}

bool try_y_form(const Poly& p, Poly* out) {
  if (p.spec().kind != VarKind::TorusY || p.spec().count < 1) return false;
  Poly q = p.set_var_zero(0);
  // q, read in the variables Y_i placed at the same slots, must expand back
  // to p under Y_i = y_i - y_1
  const VarSpec& vs = p.spec();
  Poly expanded = Poly::zero(vs);
  Poly y1 = Poly::variable(vs, 0);
  for (const auto& t : q.terms()) {
    Poly m = Poly::constant(vs, t.coeff);
    for (int i = 1; i < vs.count; ++i) {
      int e = mono_exp(t.mono, i);
      if (e > 0) m *= pow(Poly::variable(vs, i) - y1, e);
    }
    expanded += m;
  }
  if (!(expanded == p)) return false;
  if (out) *out = std::move(q);
  return true;
}

std::string poly_display(const Poly& p, Mode mode, Format fmt) {
  if (fmt == Format::Json) return p.to_string();
  bool yform = false;
  Poly q;
  if (mode == Mode::Torus && try_y_form(p, &q)) yform = true;
  const Poly& shown = yform ? q : p;
  const VarSpec spec = shown.spec();
  if (fmt == Format::Latex)
    return poly_string(shown, [&](int v, int e) { return latex_name(spec, v, e, yform); }, true);
  return poly_string(shown, [&](int v, int e) { return plain_name(spec, v, e, yform); }, false);
}

std::string wedge_term_display(Basis basis, const IndexSeq& I, Format fmt) {
  std::string sym = basis == Basis::Epsilon ? "eps" : "mu";
  if (fmt == Format::Latex) {
    std::string lsym = basis == Basis::Epsilon ? "\\epsilon" : "\\mu";
    std::string out;
    for (int j = 0; j < I.k(); ++j) {
      if (j) out += "\\wedge ";
      out += lsym + "^{" + std::to_string(I.at(j)) + "}";
    }
    return out;
  }
  return sym + "(" + I.to_string() + ")";
}

std::string render_wedge(const WedgeElement& w, Format fmt) {
  if (fmt == Format::Json) return wedge_to_json(w).dump();
  const ContextPtr& ctx = w.context();
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const IndexSeq& I : ctx->wedge_basis()) {
    auto it = w.terms().find(I);
    if (it == w.terms().end()) continue;
    if (!first) os << (fmt == Format::Latex ? " + " : " + ");
    first = false;
    std::string c = poly_display(it->second, ctx->mode(), fmt);
    std::string term = wedge_term_display(w.basis(), I, fmt);
    if (c == "1") {
      os << term;
    } else if (fmt == Format::Latex) {
      os << "\\left(" << c << "\\right)" << term;
    } else {
      os << "(" << c << ")*" << term;
    }
  }
  return os.str();
}

std::string render_matrix(const SchubertOp& op, Format fmt) {
  if (fmt == Format::Json) return op_to_json(op).dump();
  const ContextPtr& ctx = op.context();
  int N = op.dim();
  std::vector<std::vector<std::string>> cells(N, std::vector<std::string>(N));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) cells[r][c] = poly_display(op.entry(r, c), ctx->mode(), fmt);
  if (fmt == Format::Latex) {
    std::ostringstream os;
    os << "% basis order:";
    for (const IndexSeq& I : ctx->wedge_basis()) os << " (" << I.to_string() << ")";
    os << "\n\\left(\\begin{matrix}\n";
    for (int r = 0; r < N; ++r) {
      for (int c = 0; c < N; ++c) {
        if (c) os << " & ";
        os << cells[r][c];
      }
      os << " \\\\\n";
    }
    os << "\\end{matrix}\\right)\n";
    return os.str();
  }
  std::vector<std::string> labels;
  std::size_t label_w = 0;
  for (const IndexSeq& I : ctx->wedge_basis()) {
    labels.push_back("(" + I.to_string() + ")");
    label_w = std::max(label_w, labels.back().size());
  }
  std::vector<std::size_t> width(N, 0);
  for (int c = 0; c < N; ++c) {
    width[c] = labels[c].size();
    for (int r = 0; r < N; ++r) width[c] = std::max(width[c], cells[r][c].size());
  }
  std::ostringstream os;
  os << std::string(label_w, ' ');
  for (int c = 0; c < N; ++c) os << "  " << std::string(width[c] - labels[c].size(), ' ') << labels[c];
  os << "\n";
  for (int r = 0; r < N; ++r) {
    os << labels[r] << std::string(label_w - labels[r].size(), ' ');
    for (int c = 0; c < N; ++c)
      os << "  " << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    os << "\n";
  }
  return os.str();
}

std::string render_multiply(const IndexSeq& I, const IndexSeq& J,
                            const std::map<IndexSeq, Poly>& product, Mode mode, Format fmt) {
  if (fmt == Format::Json) return multiply_to_json(I, J, product).dump();
  std::ostringstream os;
  if (fmt == Format::Latex) {
    os << "\\sigma_{" << I.to_string() << "}\\cdot\\sigma_{" << J.to_string() << "} = ";
    bool first = true;
    for (const auto& [K, c] : product) {
      if (!first) os << " + ";
      first = false;
      std::string cs = poly_display(c, mode, fmt);
      if (cs != "1") os << "\\left(" << cs << "\\right)";
      os << "\\sigma_{" << K.to_string() << "}";
    }
    if (first) os << "0";
    return os.str();
  }
  os << "(" << I.to_string() << ") * (" << J.to_string() << ") =";
  if (product.empty()) os << " 0";
  bool first = true;
  for (const auto& [K, c] : product) {
    os << (first ? " " : " + ") << "(" << poly_display(c, mode, fmt) << ")*(" << K.to_string()
       << ")";
    first = false;
  }
  return os.str();
}

std::string render_relations(const std::vector<SchubertOp>& rels, Format fmt) {
  if (fmt == Format::Json) {
    Json j;
    j["count"] = rels.size();
    bool all_zero = true;
    Json arr = Json::array();
    for (const auto& r : rels) {
      all_zero = all_zero && r.is_zero();
      arr.push_back(op_to_json(r));
    }
    j["all_zero"] = all_zero;
    j["relations"] = std::move(arr);
    return j.dump();
  }
  bool all_zero = true;
  for (const auto& r : rels) all_zero = all_zero && r.is_zero();
  std::ostringstream os;
  os << rels.size() << " relation" << (rels.size() == 1 ? "" : "s") << ", "
     << (all_zero ? "all zero" : "NOT all zero") << "\n";
  if (!all_zero)
    for (std::size_t i = 0; i < rels.size(); ++i)
      if (!rels[i].is_zero()) os << "relation " << i + 1 << " is nonzero:\n"
                                 << render_matrix(rels[i], fmt);
  return os.str();
}

std::string render_gkm(const std::vector<std::pair<IndexSeq, GkmReport>>& reports, Mode mode,
                       Format fmt) {
  (void)mode;
  if (fmt == Format::Json) {
    Json arr = Json::array();
    bool all = true;
    for (const auto& [I, rep] : reports) {
      Json edges = Json::array();
      for (const auto& e : rep.edges) {
        Json je;
        je["from"] = Json::parse("[" + e.from.to_string() + "]");
        je["to"] = Json::parse("[" + e.to.to_string() + "]");
        je["weight"] = "y" + std::to_string(e.a) + " - y" + std::to_string(e.b);
        je["pass"] = e.pass;
        edges.push_back(std::move(je));
      }
      Json jr;
      jr["operator"] = Json::parse("[" + I.to_string() + "]");
      jr["all_pass"] = rep.all_pass;
      jr["edges"] = std::move(edges);
      arr.push_back(std::move(jr));
      all = all && rep.all_pass;
    }
    Json j;
    j["all_pass"] = all;
    j["operators"] = std::move(arr);
    return j.dump();
  }
  std::ostringstream os;
  bool all = true;
  for (const auto& [I, rep] : reports) {
    os << "G(" << I.to_string() << "): " << (rep.all_pass ? "pass" : "FAIL") << " ("
       << rep.edges.size() << " edges)\n";
    if (!rep.all_pass)
      for (const auto& e : rep.edges)
        if (!e.pass)
          os << "  edge (" << e.from.to_string() << ") ~ (" << e.to.to_string() << "), weight y"
             << e.a << " - y" << e.b << ": FAIL\n";
    all = all && rep.all_pass;
  }
  os << (all ? "GKM conditions satisfied on every edge" : "GKM conditions violated") << "\n";
  return os.str();
}

std::string render_table(const ContextPtr& ctx, Format fmt, bool verify) {
  std::ostringstream os;
  bool latex = fmt == Format::Latex;
  if (latex) os << "\\begin{tabular}{llll}\nI & J & K & coefficient \\\\\n\\hline\n";
  for (int i = 0; i < ctx->dim(); ++i) {
    for (int j = i; j < ctx->dim(); ++j) {
      const IndexSeq& I = ctx->wedge_basis()[i];
      const IndexSeq& J = ctx->wedge_basis()[j];
      auto product = multiply(I, J, ctx);
      if (verify && !verify_multiply(I, J, ctx, product))
        throw std::runtime_error("verification failed for the pair (" + I.to_string() + "),(" +
                                 J.to_string() + ")");
      for (const auto& [K, c] : product) {
        switch (fmt) {
          case Format::Json: {
            Json line;
            line["I"] = Json::parse("[" + I.to_string() + "]");
            line["J"] = Json::parse("[" + J.to_string() + "]");
            line["K"] = Json::parse("[" + K.to_string() + "]");
            line["coeff"] = c.to_string();
            os << line.dump() << "\n";
            break;
          }
          case Format::Text:
            os << "I=(" << I.to_string() << ") J=(" << J.to_string() << ") K=(" << K.to_string()
               << ") coeff=" << poly_display(c, ctx->mode(), fmt) << "\n";
            break;
          case Format::Latex:
            os << "(" << I.to_string() << ") & (" << J.to_string() << ") & (" << K.to_string()
               << ") & $" << poly_display(c, ctx->mode(), fmt) << "$ \\\\\n";
            break;
        }
      }
    }
  }
  if (latex) os << "\\end{tabular}\n";
  return os.str();
}

std::string render_giambelli(const IndexSeq& I, const WedgeElement& w, bool match, Format fmt) {
  if (fmt == Format::Json) {
    Json j;
    j["index"] = Json::parse("[" + I.to_string() + "]");
    j["wedge"] = wedge_to_json(w);
    j["match"] = match;
    return j.dump();
  }
  std::ostringstream os;
  std::string name = w.basis() == Basis::Epsilon ? "Delta" : "G";
  os << name << "_(" << I.to_string() << ")(D) applied to the unit wedge = " << render_wedge(w, fmt)
     << "\n"
     << (match ? "Giambelli identity holds" : "Giambelli identity VIOLATED") << "\n";
  return os.str();
}

}  // namespace schubert
