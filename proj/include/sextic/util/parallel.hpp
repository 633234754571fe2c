#pragma once

#include <cstddef>
#include <functional>

namespace sextic::util {

/// Runs body(0..count-1) on up to `jobs` threads. Each index runs exactly
/// once unless a body throws; the first exception is rethrown after all
/// workers stop.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace sextic::util
