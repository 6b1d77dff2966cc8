#pragma once

#include <cstdint>

namespace mmk::codec {

// i-th prime, 1-based: nth_prime(1) == 2. The cache behind it grows
// monotonically and is safe for concurrent readers.
std::uint32_t nth_prime(std::uint32_t i);

}  // namespace mmk::codec
