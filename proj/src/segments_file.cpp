#include "smsvoice/segments_file.hpp"

#include "smsvoice/error.hpp"

namespace smsvoice {

std::string to_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size() * 2);
    for (char32_t c : text) {
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
        } else if (c < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (c >> 6)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        } else if (c < 0x10000) {
            if (c >= 0xD800 && c <= 0xDFFF) throw Error(ErrorKind::MalformedText, "surrogate code point");
            out.push_back(static_cast<char>(0xE0 | (c >> 12)));
            out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        } else if (c <= 0x10FFFF) {
            out.push_back(static_cast<char>(0xF0 | (c >> 18)));
            out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        } else {
            throw Error(ErrorKind::MalformedText, "code point beyond U+10FFFF");
        }
    }
    return out;
}

std::u32string from_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const auto lead = static_cast<unsigned char>(bytes[i]);
        int extra = 0;
        char32_t c = 0;
        char32_t min = 0;
        if (lead < 0x80) {
            c = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1, c = lead & 0x1F, min = 0x80;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2, c = lead & 0x0F, min = 0x800;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3, c = lead & 0x07, min = 0x10000;
        } else {
            throw Error(ErrorKind::MalformedText, "invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + static_cast<std::size_t>(extra) >= bytes.size()) {
            throw Error(ErrorKind::MalformedText, "truncated UTF-8 sequence at offset " + std::to_string(i));
        }
        for (int k = 1; k <= extra; ++k) {
            const auto cont = static_cast<unsigned char>(bytes[i + k]);
            if ((cont & 0xC0) != 0x80) {
                throw Error(ErrorKind::MalformedText, "invalid UTF-8 continuation at offset " + std::to_string(i + k));
            }
            c = (c << 6) | (cont & 0x3F);
        }
        if (c < min || c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
            throw Error(ErrorKind::MalformedText, "invalid UTF-8 scalar at offset " + std::to_string(i));
        }
        out.push_back(c);
        i += static_cast<std::size_t>(extra) + 1;
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view contents) {
    std::vector<std::string> lines;
    std::size_t begin = 0;
    while (begin < contents.size()) {
        std::size_t end = contents.find('\n', begin);
        if (end == std::string_view::npos) end = contents.size();
        lines.emplace_back(contents.substr(begin, end - begin));
        begin = end + 1;
    }
    return lines;
}

std::string join_lines(std::span<const std::string> lines) {
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string write_segments_file(std::span<const CodePoints> lines) {
    std::string out;
    for (const auto& line : lines) {
        out += to_utf8(line);
        out += '\n';
    }
    return out;
}

std::vector<CodePoints> read_segments_file(std::string_view contents) {
    std::vector<CodePoints> out;
    std::size_t number = 0;
    for (const auto& raw : split_lines(contents)) {
        ++number;
        try {
            out.push_back(from_utf8(raw));
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(number) + ": " + e.detail());
        }
    }
    return out;
}

} // namespace smsvoice
