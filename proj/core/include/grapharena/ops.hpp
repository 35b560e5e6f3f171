#pragma once
#include <cstddef>
#include <utility>

#include "grapharena/csr.hpp"
#include "grapharena/digraph.hpp"

namespace grapharena {

/** Vertex/edge count change produced by a batch update. */
struct UpdateDelta {
  std::size_t dn = 0;  // vertices added
  std::size_t dm = 0;  // edges added or removed

  friend bool operator==(const UpdateDelta&, const UpdateDelta&) = default;
};

/**
 * Deep-copy a graph: vertices, per-vertex edge blocks sized to their source
 * degrees, and edge contents, all populated in parallel. The clone is fully
 * independent of the source.
 */
DiGraph cloneGraph(const DiGraph& g);

/**
 * Deep-copy a CSR graph into a DiGraph. Edge lists are additionally sorted
 * afterwards so the result is in post-update state and ready for batch
 * updates. Unweighted sources get weight 1 on every edge.
 */
DiGraph cloneGraph(const CsrGraph& g);

/**
 * Remove the batch's edges from g in place. Vertices of the batch that are
 * missing from g are skipped; matching is by target id only. g's edge count
 * is adjusted by the number of removals.
 * @returns delta with dm = edges removed (dn is always 0)
 */
UpdateDelta subtractGraphInplace(DiGraph& g, const DiGraph& batch);

/**
 * Build a new graph equal to g minus the batch's edges, leaving g untouched.
 * Edges of vertices outside the batch are copied verbatim; touched vertices
 * are set-differenced during the copy, which is cheaper than cloning first
 * and subtracting in place.
 */
std::pair<DiGraph, UpdateDelta> subtractGraph(const DiGraph& g, const DiGraph& batch);

/**
 * Merge the batch's edges into g in place. Vertices of the batch that are
 * missing from g are added first (counted in dn); per-vertex merges reuse
 * addEdges, so an edge that already exists refreshes its weight and does not
 * count toward dm.
 */
UpdateDelta addGraphInplace(DiGraph& g, const DiGraph& batch);

/**
 * Build a new graph equal to g plus the batch's edges, leaving g untouched.
 * Vertices present only in the batch are included along with their edges.
 */
std::pair<DiGraph, UpdateDelta> addGraph(const DiGraph& g, const DiGraph& batch);

/**
 * Structural equality: same existing vertices, same counts, and identical
 * per-vertex edge lists (targets and weights). Capacities are not compared.
 */
bool structurallyEqual(const DiGraph& a, const DiGraph& b);

}  // namespace grapharena
