#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "bch/bits.hpp"
#include "bch/gf2_poly.hpp"
#include "bch/gf64.hpp"

namespace bch {

inline constexpr int kCodeLength = 63;
inline constexpr int kMessageLength = 51;
inline constexpr int kParityLength = 12;
inline constexpr int kShortCodeLength = 31;
inline constexpr int kShortMessageLength = 19;

using Message = BitVector<kMessageLength>;
/// c(x) = x^12 m(x) + r(x): bits 12..62 carry m0..m50, bits 0..11 carry r0..r11.
using Codeword = BitVector<kCodeLength>;
using ReceivedWord = Codeword;
using ShortMessage = BitVector<kShortMessageLength>;
using ShortCodeword = BitVector<kShortCodeLength>;

namespace detail {

// Polynomial over GF(64) of degree <= 6, coefficient i of x^i.
using GfPoly7 = std::array<GfElement, 7>;

constexpr int conjugacy_class(int exponent, std::array<int, 6>& members) {
    int count = 0;
    int e = exponent % kGroupOrder;
    do {
        members[count++] = e;
        e = (2 * e) % kGroupOrder;
    } while (e != exponent % kGroupOrder);
    return count;
}

// prod (x + alpha^c) over the conjugacy class of alpha^exponent.
constexpr Gf2Poly minimal_polynomial(int exponent, const GfTables& t) {
    std::array<int, 6> members{};
    const int count = conjugacy_class(exponent, members);

    GfPoly7 p{};
    p[0] = kGfOne;
    for (int m = 0; m < count; ++m) {
        const GfElement root = alpha_pow(members[m], t);
        GfPoly7 next{};
        for (int i = 0; i < 6; ++i) {
            next[i + 1] = gf_add(next[i + 1], p[i]);
            next[i] = gf_add(next[i], gf_mul_table(p[i], root, t));
        }
        p = next;
    }

    std::uint64_t bits = 0;
    for (int i = 0; i < 7; ++i) {
        if (p[i].value() > 1) {
            throw std::logic_error("minimal polynomial has a coefficient outside GF(2)");
        }
        bits |= std::uint64_t{p[i].value()} << i;
    }
    return Gf2Poly(bits);
}

}  // namespace detail

/// Generator polynomial of the t-error-correcting length-63 BCH code: the
/// product of the distinct minimal polynomials of alpha, ..., alpha^(2t).
/// Throws std::invalid_argument unless t is 1 or 2.
constexpr Gf2Poly compute_generator(int t, const GfTables& tbl = kTables) {
    if (t != 1 && t != 2) {
        throw std::invalid_argument("only t = 1 and t = 2 are supported");
    }
    Gf2Poly g = Gf2Poly::from_exponents({0});
    std::uint64_t covered = 0;  // bit e set once alpha^e is a root of g
    for (int i = 1; i <= 2 * t; ++i) {
        if ((covered >> i) & 1U) {
            continue;
        }
        std::array<int, 6> members{};
        const int count = detail::conjugacy_class(i, members);
        for (int m = 0; m < count; ++m) {
            covered |= std::uint64_t{1} << members[m];
        }
        g = g * detail::minimal_polynomial(i, tbl);
    }
    return g;
}

/// g(x) = (1 + x + x^6)(1 + x + x^2 + x^4 + x^6)
///      = 1 + x^3 + x^4 + x^5 + x^8 + x^10 + x^12 (octal 12471).
inline constexpr Gf2Poly kGenerator = Gf2Poly::from_exponents({0, 3, 4, 5, 8, 10, 12});
static_assert(compute_generator(2) == kGenerator);

/// 12-cell shift register dividing by g(x); cell i holds the x^i coefficient.
struct LfsrState {
    /// Feedback taps: the coefficients of g below x^12.
    static constexpr std::uint16_t kTaps =
        static_cast<std::uint16_t>(kGenerator.coefficients() & 0xFFF);

    std::uint16_t cells = 0;

    /// One clock: `in` is XORed with the x^11 cell and fed back.
    constexpr void shift(bool in) noexcept {
        const bool feedback = in != (((cells >> 11) & 1U) != 0);
        cells = static_cast<std::uint16_t>((cells << 1) & 0xFFF);
        if (feedback) {
            cells ^= kTaps;
        }
    }
};

/// Systematic encoding with a bit-serial LFSR, m50 clocked in first.
constexpr Codeword encode_lfsr(Message m) noexcept {
    LfsrState reg;
    for (int i = kMessageLength - 1; i >= 0; --i) {
        reg.shift(((m.value() >> i) & 1U) != 0);
    }
    return Codeword::truncate((m.value() << kParityLength) | reg.cells);
}

/// Systematic encoding by long division of x^12 m(x) by g(x). Exists as an
/// independent route for checking encode_lfsr.
constexpr Codeword encode_polydiv_oracle(Message m) {
    const Gf2Poly shifted(m.value() << kParityLength);
    const Gf2Poly parity = shifted % kGenerator;
    return Codeword::truncate(shifted.coefficients() | parity.coefficients());
}

/// The 19 payload bits are m0..m18 and m19..m50 are zero. The output keeps
/// c0..c30; c31..c62 are always zero and never sent.
constexpr ShortCodeword encode_shortened(ShortMessage s) noexcept {
    const Codeword full = encode_lfsr(Message::truncate(s.value()));
    return ShortCodeword::truncate(full.value());
}

/// Message bits m0..m50 of a codeword.
constexpr Message message_of(Codeword c) noexcept {
    return Message::truncate(c.value() >> kParityLength);
}

/// Payload bits of a shortened codeword.
constexpr ShortMessage payload_of(ShortCodeword c) noexcept {
    return ShortMessage::truncate(c.value() >> kParityLength);
}

}  // namespace bch
