#pragma once

#include <bit>
#include <cstdint>

namespace degenum {

/// Gray-code walk over all 2^k subsets of {0..k-1}. The caller visits the
/// empty subset first, then toggle(bit) fires once per step; after step c
/// the current subset is gray_code(c).
template <typename Toggle>
void gray_scan(int k, Toggle&& toggle) {
    const std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t c = 1; c < total; ++c) toggle(std::countr_zero(c));
}

inline std::uint64_t gray_code(std::uint64_t c) { return c ^ (c >> 1); }

}  // namespace degenum
