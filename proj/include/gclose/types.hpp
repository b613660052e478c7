#ifndef GCLOSE_TYPES_HPP_
#define GCLOSE_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gclose {

using Vertex = std::uint32_t;
using Weight = double;
using Distance = double;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr Distance kInfDistance = std::numeric_limits<Distance>::infinity();

/// Malformed graph input. The message carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An algorithm restricted to unweighted graphs was handed a weighted one.
class WeightedGraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact oracle was asked to work above its size cap.
class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace gclose

#endif // GCLOSE_TYPES_HPP_
