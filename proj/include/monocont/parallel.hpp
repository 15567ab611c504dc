#pragma once

#include <cstddef>
#include <functional>

namespace monocont {

/// Execution policy for the per-point kernels.
struct Execution {
    /// 1 runs the serial reference loop; 0 uses the OpenMP default team size.
    int threads = 0;

    static Execution serial() { return {1}; }
};

/// Runs body(i) for i in [0, n). Each index is visited exactly once; the
/// body must not throw and must write only to slot i of its outputs, which
/// keeps results independent of the schedule.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec);

/// Number of OpenMP threads a parallel run would use.
int available_threads();

}  // namespace monocont
