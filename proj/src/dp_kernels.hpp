#pragma once

#include <cstddef>
#include <cstdint>

#include "median/alphabet.hpp"

namespace median::detail {

// True when the vectorised integer kernel can run on this CPU.
bool simd_dp_available();

// Edit distance over an integral (|sigma|+1)^2 cost table, eight columns at
// a time. Costs must keep every intermediate value well inside int32.
std::int32_t simd_dp_distance(const Symbol* from, std::size_t n, const Symbol* to, std::size_t m,
                              const std::int32_t* costs, std::size_t sigma);

}  // namespace median::detail
