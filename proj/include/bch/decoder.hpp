#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "bch/encoder.hpp"
#include "bch/gf64.hpp"

namespace bch {

/// S_i = r(alpha^i) for i = 1, 2, 3.
struct SyndromeSet {
    GfElement s1;
    GfElement s2;
    GfElement s3;

    constexpr bool is_zero() const noexcept {
        return s1.is_zero() && s2.is_zero() && s3.is_zero();
    }

    /// 18-bit packing: s1 in bits 0..5, s2 in 6..11, s3 in 12..17.
    constexpr std::uint32_t key() const noexcept {
        return std::uint32_t{s1.value()} | (std::uint32_t{s2.value()} << 6) |
               (std::uint32_t{s3.value()} << 12);
    }

    friend constexpr bool operator==(const SyndromeSet&, const SyndromeSet&) = default;
};

/// Lambda(x) = lambda0 + lambda1 x + lambda2 x^2.
struct ErrorLocator {
    GfElement lambda0;
    GfElement lambda1;
    GfElement lambda2;

    constexpr bool is_zero() const noexcept {
        return lambda0.is_zero() && lambda1.is_zero() && lambda2.is_zero();
    }

    friend constexpr bool operator==(const ErrorLocator&, const ErrorLocator&) = default;
};

enum class DecodeStatus { NoError, Corrected, Uncorrectable };

constexpr const char* to_string(DecodeStatus s) noexcept {
    switch (s) {
        case DecodeStatus::NoError:
            return "no_error";
        case DecodeStatus::Corrected:
            return "corrected";
        case DecodeStatus::Uncorrectable:
            return "uncorrectable";
    }
    return "?";
}

/// Result of decoding a word of type Word.
///
/// positions is ascending and holds one or two indices when status is
/// Corrected, nothing otherwise. corrected is meaningless when Uncorrectable.
template <typename Word>
struct DecodeResult {
    DecodeStatus status = DecodeStatus::Uncorrectable;
    std::vector<int> positions;
    Word corrected{};
};

using DecodeOutcome = DecodeResult<Codeword>;
using ShortDecodeOutcome = DecodeResult<ShortCodeword>;

/// All three syndromes in one pass over the set bits of r; term j of S_i is
/// alpha^(i*j mod 63).
constexpr SyndromeSet compute_syndromes(ReceivedWord r, const GfTables& t = kTables) noexcept {
    unsigned s1 = 0, s2 = 0, s3 = 0;
    std::uint64_t bits = r.value();
    while (bits != 0) {
        const int j = std::countr_zero(bits);
        bits &= bits - 1;
        s1 ^= t.antilog[j % kGroupOrder].value();
        s2 ^= t.antilog[(2 * j) % kGroupOrder].value();
        s3 ^= t.antilog[(3 * j) % kGroupOrder].value();
    }
    return {GfElement(s1), GfElement(s2), GfElement(s3)};
}

/// Inversion-less closed form for t = 2: (S1, S1*S1, S3 + S1*S2).
constexpr ErrorLocator solve_locator(const SyndromeSet& s, const GfTables& = kTables) noexcept {
    return {s.s1, gf_mul_mse(s.s1, s.s1), gf_add(s.s3, gf_mul_mse(s.s1, s.s2))};
}

/// Roots of the locator among alpha^0..alpha^62, mapped to error positions.
///
/// Two cells start at lambda1 and lambda2 and are multiplied each step by
/// alpha and alpha^2, so step j evaluates Lambda(alpha^j). A root alpha^j is
/// the reciprocal of an error locator, i.e. position (63 - j) mod 63.
/// Positions >= n are dropped. Throws std::domain_error for an all-zero
/// locator, which has every element as a root.
inline std::vector<int> chien_search(const ErrorLocator& l, int n = kCodeLength,
                                     const GfTables& t = kTables) {
    if (l.is_zero()) {
        throw std::domain_error("Chien search on the zero locator");
    }
    const GfElement alpha2 = t.antilog[2];
    GfElement c1 = l.lambda1;
    GfElement c2 = l.lambda2;
    std::vector<int> positions;
    for (int j = 0; j < kGroupOrder; ++j) {
        if (gf_add(l.lambda0, gf_add(c1, c2)).is_zero()) {
            const int pos = (kGroupOrder - j) % kGroupOrder;
            if (pos < n) {
                positions.push_back(pos);
            }
        }
        c1 = gf_mul_mse(c1, kAlpha);
        c2 = gf_mul_mse(c2, alpha2);
    }
    std::sort(positions.begin(), positions.end());
    return positions;
}

/// Flips the listed positions. Throws std::out_of_range for positions
/// outside 0..62.
inline Codeword apply_correction(ReceivedWord r, std::span<const int> positions) {
    for (int p : positions) {
        if (p < 0 || p >= kCodeLength) {
            throw std::out_of_range("correction position outside the codeword");
        }
        r.flip(static_cast<std::size_t>(p));
    }
    return r;
}

inline Codeword apply_correction(ReceivedWord r, std::initializer_list<int> positions) {
    return apply_correction(r, std::span<const int>(positions.begin(), positions.size()));
}

/// Bounded-distance decoding of the (63,51) code.
///
/// Zero syndromes give NoError. S1 = 0 with a nonzero syndrome is outside
/// every radius-2 ball. Otherwise the locator degree (2 if lambda2 != 0,
/// else 1) must equal the number of Chien roots; anything else is
/// Uncorrectable. Every Corrected result is re-checked to have zero
/// syndromes.
inline DecodeOutcome decode(ReceivedWord r, const GfTables& t = kTables) {
    DecodeOutcome out;
    const SyndromeSet s = compute_syndromes(r, t);
    if (s.is_zero()) {
        out.status = DecodeStatus::NoError;
        out.corrected = r;
        return out;
    }
    if (s.s1.is_zero()) {
        return out;
    }

    const ErrorLocator loc = solve_locator(s, t);
    const std::size_t expected_roots = loc.lambda2.is_zero() ? 1 : 2;
    std::vector<int> positions = chien_search(loc, kCodeLength, t);
    if (positions.size() != expected_roots) {
        return out;
    }

    const Codeword fixed = apply_correction(r, positions);
    if (!compute_syndromes(fixed, t).is_zero()) {
        throw std::logic_error("corrected word failed the zero-syndrome check");
    }
    out.status = DecodeStatus::Corrected;
    out.positions = std::move(positions);
    out.corrected = fixed;
    return out;
}

/// Decodes a (31,19) word by zero-extending it to 63 bits. A correction that
/// touches the untransmitted positions 31..62 is reported Uncorrectable.
inline ShortDecodeOutcome decode_shortened(ShortCodeword r31, const GfTables& t = kTables) {
    const DecodeOutcome full = decode(Codeword::truncate(r31.value()), t);
    ShortDecodeOutcome out;
    if (full.status == DecodeStatus::Uncorrectable) {
        return out;
    }
    if (std::any_of(full.positions.begin(), full.positions.end(),
                    [](int p) { return p >= kShortCodeLength; })) {
        return out;
    }
    out.status = full.status;
    out.positions = full.positions;
    out.corrected = ShortCodeword::truncate(full.corrected.value());
    return out;
}

}  // namespace bch
