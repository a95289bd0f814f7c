#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bch/encoder.hpp"

namespace bch {

/// Hex frame files: one frame per line, the hex value's bit i being the
/// coefficient of x^i. Full-length frames are 16 digits, shortened frames 8.
enum class FrameKind { Message, Codeword, ShortMessage, ShortCodeword };

struct FrameFormat {
    int hex_digits;
    int valid_bits;
};

constexpr FrameFormat frame_format(FrameKind k) noexcept {
    switch (k) {
        case FrameKind::Message:
            return {16, kMessageLength};
        case FrameKind::Codeword:
            return {16, kCodeLength};
        case FrameKind::ShortMessage:
            return {8, kShortMessageLength};
        case FrameKind::ShortCodeword:
            return {8, kShortCodeLength};
    }
    return {16, 64};
}

/// Line written in place of a frame that could not be decoded.
inline std::string uncorrectable_sentinel(FrameKind k) {
    return std::string(static_cast<std::size_t>(frame_format(k).hex_digits), 'X');
}

class FrameParseError : public std::runtime_error {
public:
    FrameParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parses one frame; `line` is only used in diagnostics.
inline std::uint64_t parse_frame(std::string_view text, FrameKind kind, std::size_t line) {
    const FrameFormat fmt = frame_format(kind);
    if (!text.empty() && text.back() == '\r') {
        text.remove_suffix(1);
    }
    if (text.size() != static_cast<std::size_t>(fmt.hex_digits)) {
        throw FrameParseError(line, "expected " + std::to_string(fmt.hex_digits) +
                                        " hex digits, got \"" + std::string(text) + "\"");
    }
    std::uint64_t v = 0;
    for (char ch : text) {
        unsigned d;
        if (ch >= '0' && ch <= '9') {
            d = static_cast<unsigned>(ch - '0');
        } else if (ch >= 'a' && ch <= 'f') {
            d = static_cast<unsigned>(ch - 'a' + 10);
        } else if (ch >= 'A' && ch <= 'F') {
            d = static_cast<unsigned>(ch - 'A' + 10);
        } else {
            throw FrameParseError(line, "invalid hex digit '" + std::string(1, ch) + "'");
        }
        v = (v << 4) | d;
    }
    if (fmt.valid_bits < 64 && (v >> fmt.valid_bits) != 0) {
        throw FrameParseError(line, "reserved bits at or above bit " +
                                        std::to_string(fmt.valid_bits) + " are set");
    }
    return v;
}

inline std::vector<std::uint64_t> read_frames(std::istream& in, FrameKind kind) {
    std::vector<std::uint64_t> frames;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        frames.push_back(parse_frame(text, kind, line));
    }
    return frames;
}

/// Lowercase, zero-padded to the format's width.
inline std::string format_frame(std::uint64_t value, FrameKind kind) {
    static constexpr char kDigits[] = "0123456789abcdef";
    const int n = frame_format(kind).hex_digits;
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = n - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
        value >>= 4;
    }
    return s;
}

inline void write_frames(std::ostream& out, const std::vector<std::uint64_t>& frames,
                         FrameKind kind) {
    for (std::uint64_t f : frames) {
        out << format_frame(f, kind) << '\n';
    }
}

}  // namespace bch
