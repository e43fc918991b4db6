#pragma once

#include <cstddef>
#include <functional>

namespace entloc {

// Runs fn(i) for i in [0, n).  Work items must be independent (each writes
// only to its own slot); under that contract the result is identical for any
// thread count, which is what the reproducibility guarantees lean on.
// threads <= 1 runs inline.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace entloc
