#pragma once
#include <cstddef>
#include <cstdint>

namespace grapharena {

/** Vertex id type (32-bit ids, per the supported graph scale). */
using VertexId = std::uint32_t;

/** Edge weight type. */
using EdgeWeight = float;

/** One outgoing edge: target vertex id plus its weight. */
struct Edge {
  VertexId   target;
  EdgeWeight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/** System page size assumed for page-rounded allocations and reservations. */
inline constexpr std::size_t kPageSize = 4096;

}  // namespace grapharena
