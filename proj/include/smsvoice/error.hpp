#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smsvoice {

enum class ErrorKind {
    MalformedContainer,
    UnsupportedFormat,
    UnsupportedCombination,
    LengthMismatch,
    InvalidCodePoint,
    SegmentOverflow,
    CapacityTooSmall,
    TooShort,
    BadIndex,
    IllegalPayloadPoint,
    MalformedText,
    MissingSegments,
    DuplicateMismatch,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorKind kind);

// Base of every error raised by the library. what() reads "<Kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

// More than 1000 segments would be needed. char_count is filled in by
// callers that know it (metrics), otherwise it equals the stream length.
class SegmentOverflowError : public Error {
public:
    SegmentOverflowError(std::size_t required_segments, std::size_t char_count);

    std::size_t required_segments() const noexcept { return required_segments_; }
    std::size_t char_count() const noexcept { return char_count_; }

private:
    std::size_t required_segments_;
    std::size_t char_count_;
};

class MissingSegmentsError : public Error {
public:
    explicit MissingSegmentsError(std::vector<int> missing);

    const std::vector<int>& missing() const noexcept { return missing_; }

private:
    std::vector<int> missing_;
};

} // namespace smsvoice
