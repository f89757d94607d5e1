#pragma once

// JSON forms of wedge elements and operator matrices; these are also the
// fixture formats for the acceptance suite.
//
//   wedge:  {"basis":"epsilon","terms":[{"index":[1,3],"coeff":"y3 - y2"},...]}
//   matrix: {"basis":"mu","n":4,"k":2,"indices":[[1,2],...],
//            "entries":[["0","0",...],...]}            (row-major)

#include <json.hpp>

#include "schubert/operators.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

Json wedge_to_json(const WedgeElement& w);
WedgeElement wedge_from_json(const ContextPtr& ctx, const Json& j);

Json op_to_json(const SchubertOp& op);
SchubertOp op_from_json(const ContextPtr& ctx, const Json& j);

// Reads "n", "k" and "basis" out of a serialized operator and builds the
// matching torus context.
ContextPtr context_for_op_json(const Json& j);

Json multiply_to_json(const IndexSeq& I, const IndexSeq& J,
                      const std::map<IndexSeq, Poly>& product);

}  // namespace schubert
