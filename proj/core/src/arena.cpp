#include "grapharena/arena.hpp"

#include <omp.h>

namespace grapharena {

ConcurrentArena::ConcurrentArena(std::size_t poolSize, int threads) : poolSize_(poolSize) {
  int count = threads > 0 ? threads : omp_get_max_threads();
  perThread_.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) perThread_.emplace_back(poolSize);
}

void* ConcurrentArena::allocate(std::size_t size) {
  return allocate(omp_get_thread_num(), size);
}

void ConcurrentArena::deallocate(void* ptr, std::size_t size) {
  deallocate(omp_get_thread_num(), ptr, size);
}

}  // namespace grapharena
