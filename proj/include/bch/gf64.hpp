#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace bch {

/// An element of GF(2^6) in polynomial basis: bit i is the coefficient of
/// alpha^i. Only the low 6 bits are ever populated.
class GfElement {
public:
    constexpr GfElement() = default;

    /// Throws std::out_of_range for values above 63.
    constexpr explicit GfElement(unsigned value) : value_(static_cast<std::uint8_t>(value)) {
        if (value > 63) {
            throw std::out_of_range("GF(64) element out of range");
        }
    }

    constexpr std::uint8_t value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }
    constexpr bool bit(unsigned i) const noexcept { return ((value_ >> i) & 1U) != 0; }

    friend constexpr bool operator==(GfElement, GfElement) = default;

private:
    std::uint8_t value_ = 0;
};

inline constexpr GfElement kGfZero{0};
inline constexpr GfElement kGfOne{1};
inline constexpr GfElement kAlpha{2};

/// Order of the multiplicative group.
inline constexpr int kGroupOrder = 63;

/// p(x) = 1 + x + x^6, as a bitmask including the x^6 term.
inline constexpr unsigned kPrimitivePoly = 0b1000011;

/// Log/antilog tables: antilog[k] = alpha^k, log[antilog[k]] = k.
struct GfTables {
    /// log[0] holds this value; no valid exponent can equal it.
    static constexpr std::uint8_t kLogOfZero = 0xFF;

    std::array<GfElement, 63> antilog{};
    std::array<std::uint8_t, 64> log{};
};

/// Generates the tables by repeated multiplication by alpha, reducing with
/// alpha^6 = alpha + 1.
constexpr GfTables build_tables() {
    GfTables t;
    t.log.fill(GfTables::kLogOfZero);
    unsigned x = 1;
    for (int k = 0; k < kGroupOrder; ++k) {
        t.antilog[k] = GfElement(x);
        t.log[x] = static_cast<std::uint8_t>(k);
        x <<= 1;
        if (x & 0b1000000) {
            x ^= kPrimitivePoly;
        }
    }
    return t;
}

inline constexpr GfTables kTables = build_tables();

/// Process-wide immutable tables.
constexpr const GfTables& tables() noexcept { return kTables; }

constexpr GfElement gf_add(GfElement a, GfElement b) noexcept {
    return GfElement(static_cast<unsigned>(a.value() ^ b.value()));
}

constexpr GfElement gf_mul_table(GfElement a, GfElement b, const GfTables& t) noexcept {
    if (a.is_zero() || b.is_zero()) {
        return kGfZero;
    }
    return t.antilog[(t.log[a.value()] + t.log[b.value()]) % kGroupOrder];
}

/// Table-free multiplier built from partial products.
///
/// Row i of the product is a_i * (alpha^i * b). Multiplying by alpha maps
/// (b0..b5) to (b5, b0+b5, b1, b2, b3, b4), so each output bit is a fixed
/// AND/XOR expression in the operand bits.
constexpr GfElement gf_mul_mse(GfElement a, GfElement b) noexcept {
    const unsigned a0 = a.bit(0), a1 = a.bit(1), a2 = a.bit(2);
    const unsigned a3 = a.bit(3), a4 = a.bit(4), a5 = a.bit(5);
    const unsigned b0 = b.bit(0), b1 = b.bit(1), b2 = b.bit(2);
    const unsigned b3 = b.bit(3), b4 = b.bit(4), b5 = b.bit(5);

    const unsigned y5 = (a5 & (b5 ^ b0)) ^ (a4 & b1) ^ (a3 & b2) ^ (a2 & b3) ^ (a1 & b4) ^ (a0 & b5);
    const unsigned y4 = (a5 & (b4 ^ b5)) ^ (a4 & (b5 ^ b0)) ^ (a3 & b1) ^ (a2 & b2) ^ (a1 & b3) ^
                        (a0 & b4);
    const unsigned y3 = (a5 & (b3 ^ b4)) ^ (a4 & (b4 ^ b5)) ^ (a3 & (b5 ^ b0)) ^ (a2 & b1) ^
                        (a1 & b2) ^ (a0 & b3);
    const unsigned y2 = (a5 & (b2 ^ b3)) ^ (a4 & (b3 ^ b4)) ^ (a3 & (b4 ^ b5)) ^
                        (a2 & (b5 ^ b0)) ^ (a1 & b1) ^ (a0 & b2);
    const unsigned y1 = (a5 & (b1 ^ b2)) ^ (a4 & (b2 ^ b3)) ^ (a3 & (b3 ^ b4)) ^
                        (a2 & (b4 ^ b5)) ^ (a1 & (b5 ^ b0)) ^ (a0 & b1);
    const unsigned y0 = (a5 & b1) ^ (a4 & b2) ^ (a3 & b3) ^ (a2 & b4) ^ (a1 & b5) ^ (a0 & b0);

    return GfElement(y0 | (y1 << 1) | (y2 << 2) | (y3 << 3) | (y4 << 4) | (y5 << 5));
}

/// a^e. Exponents are reduced mod 63 for nonzero a, so negative exponents
/// are inverses. Throws std::domain_error for 0^e with e <= 0.
constexpr GfElement gf_pow(GfElement a, long long e, const GfTables& t) {
    if (a.is_zero()) {
        if (e <= 0) {
            throw std::domain_error("zero raised to a non-positive power");
        }
        return kGfZero;
    }
    long long k = (static_cast<long long>(t.log[a.value()]) * (e % kGroupOrder)) % kGroupOrder;
    if (k < 0) {
        k += kGroupOrder;
    }
    return t.antilog[static_cast<std::size_t>(k)];
}

/// Throws std::domain_error for zero.
constexpr GfElement gf_inv(GfElement a, const GfTables& t) {
    if (a.is_zero()) {
        throw std::domain_error("zero has no multiplicative inverse");
    }
    return t.antilog[(kGroupOrder - t.log[a.value()]) % kGroupOrder];
}

/// alpha^k for any integer k.
constexpr GfElement alpha_pow(long long k, const GfTables& t = kTables) noexcept {
    long long r = k % kGroupOrder;
    if (r < 0) {
        r += kGroupOrder;
    }
    return t.antilog[static_cast<std::size_t>(r)];
}

}  // namespace bch
