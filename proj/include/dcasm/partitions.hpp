#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace dcasm {

/// Pair of element indices that must land in different blocks.
using Apart = std::pair<std::size_t, std::size_t>;

/// Visits every set partition of {0, ..., n-1} as a restricted growth string
/// (class_of[0] = 0, class_of[i] <= 1 + max(class_of[0..i-1])), in
/// lexicographic order, skipping partitions that join an `apart` pair.
void for_each_partition(std::size_t n, std::span<const Apart> apart,
                        const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<std::vector<std::size_t>> restricted_growth_strings(std::size_t n, std::span<const Apart> apart = {});

} // namespace dcasm
