#include "monocont/parallel.hpp"

#include <omp.h>

namespace monocont {

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec) {
    if (exec.threads == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const int team = exec.threads > 0 ? exec.threads : omp_get_max_threads();
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

int available_threads() { return omp_get_max_threads(); }

}  // namespace monocont
