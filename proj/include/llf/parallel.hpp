#pragma once

#include <functional>

namespace llf {

// requested <= 0 selects the hardware concurrency.
int resolve_threads(int requested);

// Runs body(begin_i, end_i) on contiguous chunks of [begin, end). Chunk
// boundaries depend only on the range and thread count, never on timing, so
// writers of disjoint output rows stay bit-deterministic.
void parallel_for(int begin, int end, int threads,
                  const std::function<void(int, int)>& body);

}  // namespace llf
