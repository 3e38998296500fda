#include "dcasm/partitions.hpp"

#include <algorithm>

namespace dcasm {

namespace {

struct PartitionWalk {
    std::size_t n;
    std::vector<std::vector<std::size_t>> apart_from; // i -> earlier j that must differ
    const std::function<void(std::span<const std::size_t>)>& visit;
    std::vector<std::size_t> class_of;

    void extend(std::size_t i, std::size_t blocks) {
        if (i == n) {
            visit(class_of);
            return;
        }
        for (std::size_t label = 0; label <= blocks; ++label) {
            const bool clash = std::any_of(apart_from[i].begin(), apart_from[i].end(),
                                           [&](std::size_t j) { return class_of[j] == label; });
            if (clash) {
                continue;
            }
            class_of[i] = label;
            extend(i + 1, std::max(blocks, label + 1));
        }
    }
};

} // namespace

void for_each_partition(std::size_t n, std::span<const Apart> apart,
                        const std::function<void(std::span<const std::size_t>)>& visit) {
    PartitionWalk walk{n, std::vector<std::vector<std::size_t>>(n), visit, std::vector<std::size_t>(n, 0)};
    for (auto [a, b] : apart) {
        if (a == b || a >= n || b >= n) {
            continue;
        }
        walk.apart_from[std::max(a, b)].push_back(std::min(a, b));
    }
    if (n == 0) {
        visit({});
        return;
    }
    walk.extend(0, 0);
}

std::vector<std::vector<std::size_t>> restricted_growth_strings(std::size_t n, std::span<const Apart> apart) {
    std::vector<std::vector<std::size_t>> out;
    for_each_partition(n, apart, [&](std::span<const std::size_t> rgs) { out.emplace_back(rgs.begin(), rgs.end()); });
    return out;
}

} // namespace dcasm
