#pragma once

#include <cstddef>
#include <functional>

namespace soliton {

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
/// hardware concurrency). Indices are split into contiguous blocks; the
/// first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace soliton
