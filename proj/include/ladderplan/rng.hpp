#pragma once

#include <cstdint>

#include "ladderplan/core.hpp"

namespace ladder {

// splitmix64: the reference 64-bit mixer (Steele/Lea/Flood's SplittableRandom
// finalizer).  Chosen because it is tiny, fast, and trivially reproducible in
// any language, which keeps seeded instances byte-identical everywhere.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) by rejection (no modulo bias); bound >= 1.
    std::uint64_t below(std::uint64_t bound);
};

// A uniformly random set of k distinct cross edges on the (m, n) frame,
// deterministic in the seed: a partial Fisher-Yates shuffle over the virtual
// cell array [0, m*n) (sparse, via a hash map of displaced cells), cell c
// meaning edge (c / n + 1, c % n + 1).  Returns the canonical instance.
// Throws TooManyEdgesError if k > m*n and the usual construction errors for
// invalid m, n, or negative k.
GeneralizedLadder random_instance(std::uint64_t seed, Index m, Index n, Index k);

}  // namespace ladder
