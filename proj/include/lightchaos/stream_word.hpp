#pragma once

#include <cstdint>

namespace lightchaos {

// The reference transitive binary stream: the concatenation of all finite
// binary words in length-lexicographic order,
//
//   0 1 00 01 10 11 000 001 ...
//
// Every finite word occurs as a block, so every shift-orbit of the stream is
// dense in {0,1}^N. Coordinates are computed arithmetically on demand; no
// buffer is kept, so concurrent reads are trivially safe.
namespace stream_word {

// Coordinate at absolute position `pos` (0-based).
int coordinate(std::uint64_t pos);

// Smallest position >= start whose coordinate equals `value` (0 or 1).
std::uint64_t next_position_of(std::uint64_t start, int value);

}  // namespace stream_word

}  // namespace lightchaos
