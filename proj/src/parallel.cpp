#include "quadnet/parallel.hpp"

#include <omp.h>

namespace quadnet {

int hardwareThreads() { return omp_get_max_threads(); }

} // namespace quadnet
