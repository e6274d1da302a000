#pragma once

namespace jetob {

/// Applies JET_OBSTRUCT_THREADS (when set to a positive integer) as the
/// OpenMP thread cap. Returns the resulting maximum thread count.
int configure_threads_from_env();

int max_threads();

} // namespace jetob
