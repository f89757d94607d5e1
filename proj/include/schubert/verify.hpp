#pragma once

// Re-runs a request through an independent path and compares: the raw
// Leibniz expansion instead of Pieri supports, the bialternant LR oracle for
// classical structure constants within the k x (n-k) box.

#include "schubert/torus.hpp"

namespace schubert {

// d_pieri / equivariant_pieri recomputed through the Leibniz oracle (going
// through the epsilon basis for mu-basis input).
bool verify_pieri(int h, const IndexSeq& I, const ContextPtr& ctx, const WedgeElement& got);

// Structure constants recomputed by applying the class operators through the
// Leibniz path; classical epsilon-basis products inside the box are checked
// against the LR oracle as well.
bool verify_multiply(const IndexSeq& I, const IndexSeq& J, const ContextPtr& ctx,
                     const std::map<IndexSeq, Poly>& got);

// Operator matrix recomputed column by column through the Leibniz path.
bool verify_matrix(const IndexSeq& I, const ContextPtr& ctx, const SchubertOp& got);

// Giambelli column recomputed through the Leibniz path.
bool verify_giambelli(const IndexSeq& I, const ContextPtr& ctx, const WedgeElement& got);

}  // namespace schubert
