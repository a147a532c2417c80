#pragma once

#include <functional>

namespace fatoukit {

// Worker cap used when a call passes threads <= 0. Starts at the number of
// hardware threads.
void set_default_threads(int n);
int default_threads();

/// Runs body(begin, end) over disjoint contiguous row bands covering
/// [0, rows). Results must not depend on the banding; callers write only
/// to their own rows.
void parallel_rows(int rows, int threads, const std::function<void(int, int)>& body);

}  // namespace fatoukit
