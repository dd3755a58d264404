#pragma once

#include <cstdint>
#include <vector>

namespace lced {

// Deterministic generator with a fixed algorithm so that seeded campaigns are
// byte-identical across standard library implementations (std::shuffle and
// std::uniform_int_distribution are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Inclusive integer range.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Per-instance seed derived from a master seed, stable across thread counts.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng mix(master ^ (0x5851f42d4c957f2dULL * (index + 1)));
    return mix.next();
}

}  // namespace lced
