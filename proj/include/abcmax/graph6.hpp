#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "abcmax/graph.hpp"

namespace abcmax {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Standard graph6: size header (one byte for n <= 62, '~' plus three bytes
/// up to 258047) followed by the upper triangle in column-major order
/// (0,1),(0,2),(1,2),(0,3),..., six bits per byte, each byte offset by 63.
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and a trailing newline. Throws
/// Graph6Error on a malformed header, a length mismatch, characters outside
/// 63..126 or nonzero padding bits.
Graph decode_graph6(std::string_view text);

}  // namespace abcmax
