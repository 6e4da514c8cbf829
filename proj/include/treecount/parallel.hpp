#pragma once

namespace treecount {

/// Number of OpenMP workers to use: the OpenMP default, capped by the
/// TREECOUNT_THREADS environment variable when it holds a positive integer.
int worker_count();

}  // namespace treecount
