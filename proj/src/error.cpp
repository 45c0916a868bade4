#include "smsvoice/error.hpp"

namespace smsvoice {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedContainer: return "MalformedContainer";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidCodePoint: return "InvalidCodePoint";
    case ErrorKind::SegmentOverflow: return "SegmentOverflow";
    case ErrorKind::CapacityTooSmall: return "CapacityTooSmall";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::IllegalPayloadPoint: return "IllegalPayloadPoint";
    case ErrorKind::MalformedText: return "MalformedText";
    case ErrorKind::MissingSegments: return "MissingSegments";
    case ErrorKind::DuplicateMismatch: return "DuplicateMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

SegmentOverflowError::SegmentOverflowError(std::size_t required_segments, std::size_t char_count)
    : Error(ErrorKind::SegmentOverflow,
            std::to_string(char_count) + " characters need " + std::to_string(required_segments) +
                " segments, index space holds 1000"),
      required_segments_(required_segments), char_count_(char_count) {}

namespace {

std::string join_indices(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

MissingSegmentsError::MissingSegmentsError(std::vector<int> missing)
    : Error(ErrorKind::MissingSegments, "missing indices {" + join_indices(missing) + "}"),
      missing_(std::move(missing)) {}

} // namespace smsvoice
