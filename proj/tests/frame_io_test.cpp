#include "bch/frame_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "bch/channel_sim.hpp"

namespace bch {
namespace {

TEST(FrameIo, FormatWidthsAndCase) {
    EXPECT_EQ(format_frame(0, FrameKind::Message), "0000000000000000");
    EXPECT_EQ(format_frame(0x7ABCDEF012345678ULL, FrameKind::Codeword), "7abcdef012345678");
    EXPECT_EQ(format_frame(0x7FFFF, FrameKind::ShortMessage), "0007ffff");
    EXPECT_EQ(uncorrectable_sentinel(FrameKind::Message), "XXXXXXXXXXXXXXXX");
    EXPECT_EQ(uncorrectable_sentinel(FrameKind::ShortMessage), "XXXXXXXX");
}

TEST(FrameIo, ParseAcceptsBothCasesAndCrlf) {
    EXPECT_EQ(parse_frame("0007FFFFFFFFFFFF", FrameKind::Message, 1), (std::uint64_t{1} << 51) - 1);
    EXPECT_EQ(parse_frame("00000000000000ab\r", FrameKind::Codeword, 1), 0xABU);
}

TEST(FrameIo, ReservedBitsRejectedWithLineNumber) {
    std::istringstream in("0000000000000001\n0008000000000000\n");
    try {
        read_frames(in, FrameKind::Message);
        FAIL() << "expected a parse error";
    } catch (const FrameParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_frame("8000000000000000", FrameKind::Codeword, 1), FrameParseError);
    EXPECT_THROW(parse_frame("80000000", FrameKind::ShortCodeword, 1), FrameParseError);
    EXPECT_THROW(parse_frame("00080000", FrameKind::ShortMessage, 1), FrameParseError);
}

TEST(FrameIo, MalformedLines) {
    EXPECT_THROW(parse_frame("", FrameKind::Message, 3), FrameParseError);
    EXPECT_THROW(parse_frame("000000000000000g", FrameKind::Message, 3), FrameParseError);
    EXPECT_THROW(parse_frame("00000000", FrameKind::Message, 3), FrameParseError);
    EXPECT_THROW(parse_frame(" 0000000", FrameKind::ShortMessage, 3), FrameParseError);
}

TEST(FrameIo, ReadWriteIsIdentityOnCanonicalFiles) {
    SplitMix64 rng(12);
    for (FrameKind k : {FrameKind::Message, FrameKind::Codeword, FrameKind::ShortMessage,
                        FrameKind::ShortCodeword}) {
        const int bits = frame_format(k).valid_bits;
        std::string text;
        for (int i = 0; i < 200; ++i) {
            text += format_frame(rng() & ((std::uint64_t{1} << bits) - 1), k) + "\n";
        }
        std::istringstream in(text);
        std::ostringstream out;
        write_frames(out, read_frames(in, k), k);
        EXPECT_EQ(out.str(), text);
    }
}

}  // namespace
}  // namespace bch
