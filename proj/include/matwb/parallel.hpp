#ifndef MATWB_PARALLEL_HPP
#define MATWB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace matwb {

// Worker cap for the parallel scans; 0 restores the hardware default.
void setThreadCap(int threads);
int threadCap();

// Runs body(lo, hi) over [0,n) split into contiguous chunks, one per worker.
// Small ranges run inline on the calling thread.
void parallelFor(size_t n, const std::function<void(size_t, size_t)>& body);

}  // namespace matwb

#endif
