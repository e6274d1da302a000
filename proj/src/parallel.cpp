#include "jetob/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jetob {

int configure_threads_from_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("JET_OBSTRUCT_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0)
                omp_set_num_threads(n);
        } catch (const std::exception&) {
            // ignored: malformed values leave the OpenMP default in place
        }
    }
#endif
    return max_threads();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace jetob
