#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "smsvoice/audio.hpp"
#include "smsvoice/payload_codec.hpp"

namespace smsvoice::test {

inline AudioClip random_clip(std::mt19937_64& rng, int bit_depth, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    const int lo = bit_depth == 8 ? -128 : -32768;
    const int hi = bit_depth == 8 ? 127 : 32767;
    std::uniform_int_distribution<int> value(lo, hi);
    std::vector<std::int16_t> s(len(rng));
    for (auto& x : s) x = static_cast<std::int16_t>(value(rng));
    const std::uint32_t rates[] = {8000, 11025, 16000, 44100};
    return AudioClip(rates[rng() % 4], bit_depth, std::move(s));
}

// Voiced-ish test signal: two tones plus a slow envelope.
inline AudioClip synthetic_speech(double seconds, std::uint32_t rate = 8000) {
    const auto n = static_cast<std::size_t>(seconds * rate);
    std::vector<std::int16_t> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / rate;
        const double env = 0.6 + 0.4 * std::sin(2 * M_PI * 3.0 * t);
        const double v = env * (9000 * std::sin(2 * M_PI * 220.0 * t) + 4000 * std::sin(2 * M_PI * 1230.0 * t));
        s[i] = static_cast<std::int16_t>(std::lround(v));
    }
    return AudioClip(rate, 16, std::move(s));
}

inline CodePoints random_stream(std::mt19937_64& rng, std::size_t len, bool allow_wide = true) {
    std::uniform_int_distribution<int> byte(allow_wide ? 0 : 32, 255);
    CodePoints out(len, U' ');
    for (auto& p : out) p = byte_to_code_point(static_cast<std::uint8_t>(byte(rng)));
    return out;
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("smsvoice-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void spit(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

inline void spit(const std::string& path, const Bytes& data) { spit(path, std::string(data.begin(), data.end())); }

} // namespace smsvoice::test
