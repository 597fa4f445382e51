#include "cutgap/seed.hpp"

#include <stdexcept>

namespace cutgap {

uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master, std::span<const int> components) {
    uint64_t h = master;
    h = splitmix64_next(h);
    for (int c : components) {
        h ^= static_cast<uint64_t>(static_cast<int64_t>(c) + 1);
        h = splitmix64_next(h);
    }
    h ^= static_cast<uint64_t>(components.size());
    return splitmix64_next(h);
}

uint64_t SeedStream::uniform_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Rejection on the top of the range keeps the draw exactly uniform.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t v = next();
        if (v < limit) return v % bound;
    }
}

uint32_t SeedStream::choose_mask(int universe, int count) {
    if (universe < 0 || universe > 32 || count < 0 || count > universe)
        throw std::invalid_argument("choose_mask: bad universe/count");
    int idx[32];
    for (int i = 0; i < universe; ++i) idx[i] = i;
    uint32_t mask = 0;
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(uniform_below(static_cast<uint64_t>(universe - i)));
        std::swap(idx[i], idx[j]);
        mask |= 1u << idx[i];
    }
    return mask;
}

}  // namespace cutgap
