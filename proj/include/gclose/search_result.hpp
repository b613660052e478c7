#ifndef GCLOSE_SEARCH_RESULT_HPP_
#define GCLOSE_SEARCH_RESULT_HPP_

#include <cstddef>
#include <vector>

#include <gclose/types.hpp>

namespace gclose {

struct SearchResult {
    std::vector<Vertex> initial; // sorted
    std::vector<Vertex> group;   // sorted
    double farness = 0;
    std::size_t exchanges = 0;
    /// Farness of the initial group followed by the farness after every
    /// accepted exchange.
    std::vector<double> trace;
};

} // namespace gclose

#endif // GCLOSE_SEARCH_RESULT_HPP_
