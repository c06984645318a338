// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <functional>

namespace l3 {

/// Resolves a worker-count request: 0 means "use the hardware concurrency".
int resolve_workers(int workers);

/// Runs fn(i) for i in [begin, end) on `workers` threads with a static block
/// partition. Callers are responsible for making iterations independent;
/// under that contract results are identical for any worker count.
void parallel_for(int begin, int end, int workers,
                  const std::function<void(int)>& fn);

} // namespace l3
