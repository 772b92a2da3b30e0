#pragma once

namespace thetaprod {

// Number of worker threads for parallel kernels.  Resolves once per process:
// omp_get_max_threads(), capped by the THETA_BORCHERDS_THREADS environment
// variable when it is set to a positive integer.  Returns 1 in builds
// without OpenMP.
int thread_count();

}  // namespace thetaprod
