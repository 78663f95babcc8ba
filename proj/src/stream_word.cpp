#include "lightchaos/stream_word.hpp"

#include <stdexcept>

namespace lightchaos::stream_word {

int coordinate(std::uint64_t pos) {
    // Words of length L span a block of L * 2^L symbols.
    std::uint64_t remaining = pos;
    for (std::uint64_t len = 1; len < 58; ++len) {
        std::uint64_t block = len << len;
        if (remaining < block) {
            std::uint64_t word_index = remaining / len;
            std::uint64_t bit_index = remaining % len;  // 0 = most significant
            return static_cast<int>((word_index >> (len - 1 - bit_index)) & 1u);
        }
        remaining -= block;
    }
    throw std::overflow_error("stream_word: position out of supported range");
}

std::uint64_t next_position_of(std::uint64_t start, int value) {
    for (std::uint64_t p = start;; ++p)
        if (coordinate(p) == value) return p;
}

}  // namespace lightchaos::stream_word
