#pragma once

// Presentation layer behind the C API: JSON, aligned plain text, and LaTeX.
// In torus mode, text and LaTeX re-express coefficients in the shifted
// characters Y_i = y_i - y_1 whenever the polynomial lies in Z[Y_2..Y_n];
// JSON always carries the canonical y-form.

#include <string>

#include "schubert/json_io.hpp"
#include "schubert/torus.hpp"

namespace schubert {

enum class Format { Json, Text, Latex };
Format parse_format(const std::string& s);

// Y-form display: returns true and fills out when p equals a polynomial in
// the Y_i exactly.
bool try_y_form(const Poly& p, Poly* out);

std::string poly_display(const Poly& p, Mode mode, Format fmt);
std::string wedge_term_display(Basis basis, const IndexSeq& I, Format fmt);

std::string render_wedge(const WedgeElement& w, Format fmt);
std::string render_matrix(const SchubertOp& op, Format fmt);
std::string render_multiply(const IndexSeq& I, const IndexSeq& J,
                            const std::map<IndexSeq, Poly>& product, Mode mode, Format fmt);
std::string render_relations(const std::vector<SchubertOp>& rels, Format fmt);
std::string render_gkm(const std::vector<std::pair<IndexSeq, GkmReport>>& reports, Mode mode,
                       Format fmt);
std::string render_giambelli(const IndexSeq& I, const WedgeElement& w, bool match, Format fmt);
std::string render_table(const ContextPtr& ctx, Format fmt, bool verify);

}  // namespace schubert
