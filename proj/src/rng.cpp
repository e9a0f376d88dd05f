#include "ladderplan/rng.hpp"

#include <unordered_map>

namespace ladder {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection sampling: draw until the value falls below the largest
    // multiple of bound, then reduce.  Exactly uniform and still
    // reproducible, since the draw sequence is fully determined by the seed.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t draw = next();
        if (draw < limit) return draw % bound;
    }
}

GeneralizedLadder random_instance(std::uint64_t seed, Index m, Index n, Index k) {
    if (m < 1 || n < 1) {
        throw IndexOutOfRangeError("path lengths must be at least 1, got m=" +
                                   std::to_string(m) + " n=" + std::to_string(n));
    }
    if (k < 0) {
        throw IndexOutOfRangeError("edge count must be non-negative, got " + std::to_string(k));
    }
    const std::uint64_t cells = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
    if (static_cast<std::uint64_t>(k) > cells) {
        throw TooManyEdgesError("cannot draw " + std::to_string(k) +
                                " distinct cross edges from a " + std::to_string(m) + "x" +
                                std::to_string(n) + " grid");
    }

    // Partial Fisher-Yates over the virtual array [0, m*n): position t swaps
    // with a uniform position in [t, m*n).  Only displaced values are stored,
    // so k draws cost O(k) memory no matter how large the grid is.
    SplitMix64 rng{seed};
    std::unordered_map<std::uint64_t, std::uint64_t> displaced;
    auto value_at = [&](std::uint64_t pos) {
        const auto it = displaced.find(pos);
        return it == displaced.end() ? pos : it->second;
    };

    std::vector<CrossEdge> cross;
    cross.reserve(static_cast<std::size_t>(k));
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(k); ++t) {
        const std::uint64_t swap_with = t + rng.below(cells - t);
        const std::uint64_t cell = value_at(swap_with);
        displaced[swap_with] = value_at(t);
        const Index l = static_cast<Index>(cell / static_cast<std::uint64_t>(n)) + 1;
        const Index r = static_cast<Index>(cell % static_cast<std::uint64_t>(n)) + 1;
        cross.push_back({l, r});
    }
    return make_ladder(m, n, std::move(cross));
}

}  // namespace ladder
