#include "grapharena/walk.hpp"

#include <utility>

namespace grapharena {

namespace {

// G provides span() and a way to iterate a vertex's out-targets; the sums
// per vertex are sequential, so each output slot has exactly one writer.
template <class G, class Targets>
std::vector<std::uint64_t> walkImpl(const G& g, int steps, Targets&& targetsOf) {
  const std::size_t span = g.span();
  std::vector<std::uint64_t> visits0(span, 1);
  std::vector<std::uint64_t> visits1(span, 0);
  for (int step = 0; step < steps; ++step) {
    const std::uint64_t* prev = visits0.data();
    std::uint64_t* next = visits1.data();
    #pragma omp parallel for schedule(dynamic, 2048)
    for (std::size_t u = 0; u < span; ++u) {
      std::uint64_t sum = 0;
      for (VertexId v : targetsOf(static_cast<VertexId>(u))) sum += prev[v];
      next[u] = sum;
    }
    std::swap(visits0, visits1);
  }
  return visits0;
}

struct EdgeTargets {
  std::span<const Edge> list;
  struct Iter {
    const Edge* p;
    VertexId operator*() const noexcept { return p->target; }
    Iter& operator++() noexcept { ++p; return *this; }
    bool operator!=(const Iter& o) const noexcept { return p != o.p; }
  };
  Iter begin() const noexcept { return {list.data()}; }
  Iter end() const noexcept { return {list.data() + list.size()}; }
};

}  // namespace

std::vector<std::uint64_t> reverseWalk(const DiGraph& g, int steps) {
  return walkImpl(g, steps, [&](VertexId u) { return EdgeTargets{g.edges(u)}; });
}

std::vector<std::uint64_t> reverseWalk(const CsrGraph& g, int steps) {
  return walkImpl(g, steps, [&](VertexId u) { return g.targets(u); });
}

}  // namespace grapharena
