#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smsvoice {

// SMS-safe text: every point lies in [32, 255] or [256, 287]. Control bytes
// 0..31 travel as 256..287; every other byte value is carried as itself.
using CodePoints = std::u32string;

inline constexpr char32_t kShift = 256;
inline constexpr char32_t kFirstPrintable = 32;
inline constexpr char32_t kLastShifted = kShift + kFirstPrintable - 1;

constexpr bool is_legal_code_point(char32_t p) noexcept {
    return p >= kFirstPrintable && p <= kLastShifted;
}

constexpr char32_t byte_to_code_point(std::uint8_t b) noexcept {
    return b < kFirstPrintable ? char32_t{b} + kShift : char32_t{b};
}

CodePoints bytes_to_codepoints(std::span<const std::uint8_t> data);

// Throws InvalidCodePoint on the first point outside the legal bands.
std::vector<std::uint8_t> codepoints_to_bytes(std::u32string_view stream);

// Position of the first illegal point, or npos.
std::size_t find_illegal_code_point(std::u32string_view stream) noexcept;

} // namespace smsvoice
