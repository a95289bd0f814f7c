#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace bch {

/// Fixed-width binary vector packed into a 64-bit word.
///
/// Bit i is the coefficient of x^i of the polynomial the vector represents.
/// The "first transmitted" bit of any vector is its highest index. Positions
/// at or above Width do not exist: constructing from a value that sets them
/// throws, and the mask keeps every operation inside the valid range.
template <std::size_t Width>
class BitVector {
    static_assert(Width > 0 && Width <= 64);

public:
    static constexpr std::size_t kWidth = Width;
    static constexpr std::uint64_t kMask =
        Width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << Width) - 1;

    constexpr BitVector() = default;

    /// Throws std::out_of_range if bits at or above Width are set.
    constexpr explicit BitVector(std::uint64_t bits) : bits_(bits) {
        if ((bits & ~kMask) != 0) {
            throw std::out_of_range("bit vector value has bits beyond its width");
        }
    }

    /// Keeps the low Width bits of `bits`, discarding the rest.
    static constexpr BitVector truncate(std::uint64_t bits) noexcept {
        BitVector v;
        v.bits_ = bits & kMask;
        return v;
    }

    static constexpr BitVector ones() noexcept { return truncate(kMask); }

    constexpr std::uint64_t value() const noexcept { return bits_; }

    constexpr bool test(std::size_t pos) const {
        check(pos);
        return ((bits_ >> pos) & 1U) != 0;
    }

    constexpr BitVector& set(std::size_t pos, bool on = true) {
        check(pos);
        if (on) {
            bits_ |= std::uint64_t{1} << pos;
        } else {
            bits_ &= ~(std::uint64_t{1} << pos);
        }
        return *this;
    }

    constexpr BitVector& flip(std::size_t pos) {
        check(pos);
        bits_ ^= std::uint64_t{1} << pos;
        return *this;
    }

    constexpr int weight() const noexcept { return std::popcount(bits_); }
    constexpr bool none() const noexcept { return bits_ == 0; }

    constexpr BitVector& operator^=(BitVector other) noexcept {
        bits_ ^= other.bits_;
        return *this;
    }
    friend constexpr BitVector operator^(BitVector a, BitVector b) noexcept { return a ^= b; }
    friend constexpr bool operator==(BitVector, BitVector) = default;

private:
    static constexpr void check(std::size_t pos) {
        if (pos >= Width) {
            throw std::out_of_range("bit position beyond vector width");
        }
    }

    std::uint64_t bits_ = 0;
};

}  // namespace bch
