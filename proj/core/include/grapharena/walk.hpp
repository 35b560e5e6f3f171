#pragma once
#include <cstdint>
#include <vector>

#include "grapharena/csr.hpp"
#include "grapharena/digraph.hpp"

namespace grapharena {

/**
 * Count k-step walks along out-edges from every vertex by propagating
 * per-vertex counts backward along the edges: starting from all ones, each
 * step replaces a vertex's count with the sum of its out-neighbors' previous
 * counts. After k steps, slot u holds the number of k-edge walks leaving u.
 *
 * Counters are 64-bit and wrap on overflow; with steps = 0 the all-ones
 * initial vector is returned. Parallel over vertices; the graph must stay
 * unmodified for the duration of the call.
 */
std::vector<std::uint64_t> reverseWalk(const DiGraph& g, int steps);

/** reverseWalk over a CSR graph. */
std::vector<std::uint64_t> reverseWalk(const CsrGraph& g, int steps);

}  // namespace grapharena
