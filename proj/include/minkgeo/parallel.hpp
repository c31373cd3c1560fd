#pragma once

// Deterministic fan-out over independent row jobs: rows are claimed from an
// atomic counter by a fixed-size worker pool and each worker writes only into
// its own row's slot, so results are identical for every job count.

#include <functional>

namespace mink {

// Worker count taken from the MINKGEO_JOBS environment variable, clamped to
// [1, 256]; 1 when the variable is unset or unparsable.
int default_jobs();

// Runs body(0) .. body(n-1). jobs > 1 uses that many threads; jobs <= 0
// resolves through default_jobs(). The first exception thrown by any body is
// rethrown after all workers have finished.
void parallel_rows(int n, int jobs, const std::function<void(int)>& body);

}  // namespace mink
