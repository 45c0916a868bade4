#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smsvoice/payload_codec.hpp"

namespace smsvoice {

std::string to_utf8(std::u32string_view text);

// Strict decoder: rejects overlong forms, surrogates and truncated sequences
// with MalformedText.
std::u32string from_utf8(std::string_view bytes);

// One line per message, each terminated by LF.
std::string write_segments_file(std::span<const CodePoints> lines);

// Inverse of write_segments_file. A missing final LF is tolerated. Errors
// carry the 1-based line number in their detail.
std::vector<CodePoints> read_segments_file(std::string_view contents);

// Raw UTF-8 lines without decoding, for stages that only move messages.
std::vector<std::string> split_lines(std::string_view contents);
std::string join_lines(std::span<const std::string> lines);

} // namespace smsvoice
