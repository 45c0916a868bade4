#include "smsvoice/payload_codec.hpp"

#include <algorithm>

#include "smsvoice/error.hpp"

namespace smsvoice {

CodePoints bytes_to_codepoints(std::span<const std::uint8_t> data) {
    CodePoints out;
    out.resize(data.size());
    std::transform(data.begin(), data.end(), out.begin(), byte_to_code_point);
    return out;
}

std::size_t find_illegal_code_point(std::u32string_view stream) noexcept {
    auto it = std::find_if_not(stream.begin(), stream.end(), is_legal_code_point);
    return it == stream.end() ? std::u32string_view::npos : static_cast<std::size_t>(it - stream.begin());
}

std::vector<std::uint8_t> codepoints_to_bytes(std::u32string_view stream) {
    if (auto bad = find_illegal_code_point(stream); bad != std::u32string_view::npos) {
        throw Error(ErrorKind::InvalidCodePoint, "code point " + std::to_string(static_cast<std::uint32_t>(stream[bad])) +
                                                     " at position " + std::to_string(bad));
    }
    std::vector<std::uint8_t> out(stream.size());
    std::transform(stream.begin(), stream.end(), out.begin(), [](char32_t p) {
        return static_cast<std::uint8_t>(p >= kShift ? p - kShift : p);
    });
    return out;
}

} // namespace smsvoice
