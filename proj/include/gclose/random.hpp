#ifndef GCLOSE_RANDOM_HPP_
#define GCLOSE_RANDOM_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <gclose/types.hpp>

namespace gclose {

// Seeded 64-bit generator. mt19937_64's output sequence is fixed by the
// standard, and all derived draws below avoid the implementation-defined
// <random> distributions, so results are identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                    - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // k distinct vertices out of [0, n), sorted ascending.
    std::vector<Vertex> sample(std::size_t n, std::size_t k);

private:
    std::mt19937_64 engine_;
};

} // namespace gclose

#endif // GCLOSE_RANDOM_HPP_
