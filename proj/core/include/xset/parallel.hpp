#ifndef XSET_PARALLEL_HPP
#define XSET_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace xset {

// Worker count used by the parallel kernels.  0 selects the hardware
// concurrency.  Every kernel is written so the result is bit-identical
// for any setting.
unsigned worker_count();
void set_worker_count(unsigned n);

// Runs f(begin, end) over contiguous chunks of [0, n).  Falls back to a
// single inline call when n < 2 * min_chunk or only one worker is
// configured.  Chunk boundaries depend only on n and the worker count.
void parallel_chunks(std::size_t n, std::size_t min_chunk,
                     const std::function<void(std::size_t, std::size_t)>& f);

}  // namespace xset

#endif
