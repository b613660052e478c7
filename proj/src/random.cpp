#include <gclose/random.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gclose {

std::vector<Vertex> Rng::sample(std::size_t n, std::size_t k) {
    if (k > n)
        throw std::invalid_argument("sample size exceeds population");
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace gclose
