#pragma once

#include "wmscss/digraph.hpp"

namespace wmscss {

struct MinCutResult {
    Rational value;
    CutCertificate cut;  // side contains the source and excludes the sink
};

// Exact max-flow / min-cut under non-negative rational capacities indexed by
// arc id (Edmonds-Karp; strongly polynomial, so it terminates on rationals).
// The certificate side is the set of vertices reachable from the source in
// the final residual graph, and its value is recomputed from `cap` directly.
MinCutResult min_cut(const Digraph& g, const std::vector<Rational>& cap,
                     int source, int sink);

}  // namespace wmscss
