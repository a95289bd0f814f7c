#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace bch {

/// Polynomial over GF(2) of degree at most 63; bit i is the coefficient of x^i.
class Gf2Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    constexpr Gf2Poly() = default;
    constexpr explicit Gf2Poly(std::uint64_t coefficients) : coeffs_(coefficients) {}

    /// Builds from the exponents of the nonzero terms.
    static constexpr Gf2Poly from_exponents(std::initializer_list<int> exponents) {
        std::uint64_t c = 0;
        for (int e : exponents) {
            if (e < 0 || e > 63) {
                throw std::out_of_range("GF(2) polynomial exponent out of range");
            }
            c ^= std::uint64_t{1} << e;
        }
        return Gf2Poly(c);
    }

    constexpr std::uint64_t coefficients() const noexcept { return coeffs_; }
    constexpr bool is_zero() const noexcept { return coeffs_ == 0; }

    constexpr int degree() const noexcept {
        return coeffs_ == 0 ? kZeroDegree : 63 - std::countl_zero(coeffs_);
    }

    constexpr bool coefficient(int i) const noexcept {
        return i >= 0 && i < 64 && ((coeffs_ >> i) & 1U) != 0;
    }

    /// Exponents of the nonzero terms, ascending.
    std::vector<int> exponents() const {
        std::vector<int> out;
        for (int i = 0; i < 64; ++i) {
            if (coefficient(i)) {
                out.push_back(i);
            }
        }
        return out;
    }

    friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) noexcept {
        return Gf2Poly(a.coeffs_ ^ b.coeffs_);
    }

    /// Carry-less product. Throws std::overflow_error past degree 63.
    friend constexpr Gf2Poly operator*(Gf2Poly a, Gf2Poly b) {
        if (a.is_zero() || b.is_zero()) {
            return Gf2Poly();
        }
        if (a.degree() + b.degree() > 63) {
            throw std::overflow_error("GF(2) polynomial product exceeds degree 63");
        }
        std::uint64_t r = 0;
        for (int i = 0; i <= a.degree(); ++i) {
            if (a.coefficient(i)) {
                r ^= b.coeffs_ << i;
            }
        }
        return Gf2Poly(r);
    }

    /// Remainder of long division. Throws std::domain_error for a zero divisor.
    friend constexpr Gf2Poly operator%(Gf2Poly a, Gf2Poly divisor) {
        if (divisor.is_zero()) {
            throw std::domain_error("division by the zero polynomial");
        }
        const int dd = divisor.degree();
        std::uint64_t r = a.coeffs_;
        for (int i = a.degree(); i >= dd; --i) {
            if ((r >> i) & 1U) {
                r ^= divisor.coeffs_ << (i - dd);
            }
        }
        return Gf2Poly(r);
    }

    friend constexpr bool operator==(Gf2Poly, Gf2Poly) = default;

private:
    std::uint64_t coeffs_ = 0;
};

}  // namespace bch
