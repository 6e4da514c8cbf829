#include "treecount/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include <omp.h>

namespace treecount {

int worker_count() {
  int workers = std::max(1, omp_get_max_threads());
  if (const char* cap = std::getenv("TREECOUNT_THREADS")) {
    int value = 0;
    const char* end = cap + std::strlen(cap);
    auto [ptr, ec] = std::from_chars(cap, end, value);
    if (ec == std::errc() && ptr == end && value > 0) workers = std::min(workers, value);
  }
  return workers;
}

}  // namespace treecount
