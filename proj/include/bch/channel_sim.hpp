#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bch/decoder.hpp"
#include "bch/encoder.hpp"
#include "bch/gf64.hpp"

namespace bch {

/// SplitMix64 (Steele, Lea & Flood). Every seeded result in this library
/// comes from this generator, so runs reproduce across platforms and
/// languages.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr result_type operator()() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform in [0, bound) by rejection; bound must be nonzero.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = (*this)();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    /// Uniform in [0, 1) with 53 bits of resolution.
    constexpr double uniform01() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Sub-seed for stream `index` of `seed`: output index+1 of a SplitMix64
/// seeded with `seed`, computed directly so streams are order-free.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64::mix(seed + (index + 1) * SplitMix64::kGamma);
}

/// e(x) as a 63-bit mask.
struct ErrorPattern {
    Codeword mask;

    constexpr int weight() const noexcept { return mask.weight(); }
};

struct BscConfig {
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// r = c XOR e.
constexpr ReceivedWord inject_errors(Codeword c, ErrorPattern e) noexcept { return c ^ e.mask; }

/// `weight` distinct positions drawn uniformly from 0..n-1 (partial
/// Fisher-Yates over SplitMix64). Throws std::domain_error unless
/// 0 <= weight <= n <= 63.
inline ErrorPattern random_error_pattern(int weight, int n, std::uint64_t seed) {
    if (n < 0 || n > kCodeLength || weight < 0 || weight > n) {
        throw std::domain_error("error pattern needs 0 <= weight <= n <= 63");
    }
    std::array<int, kCodeLength> pool{};
    std::iota(pool.begin(), pool.begin() + n, 0);
    SplitMix64 rng(seed);
    std::uint64_t mask = 0;
    for (int i = 0; i < weight; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
        mask |= std::uint64_t{1} << pool[i];
    }
    return {Codeword::truncate(mask)};
}

/// Flip mask over the low n bits, each set independently with probability p.
inline ErrorPattern bsc_pattern(int n, const BscConfig& cfg) {
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
        throw std::domain_error("crossover probability must lie in [0, 1]");
    }
    if (n < 0 || n > kCodeLength) {
        throw std::domain_error("BSC block length must lie in 0..63");
    }
    SplitMix64 rng(cfg.seed);
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
        if (rng.uniform01() < cfg.p) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return {Codeword::truncate(mask)};
}

inline ReceivedWord bsc_corrupt(Codeword c, const BscConfig& cfg) {
    return inject_errors(c, bsc_pattern(kCodeLength, cfg));
}

/// Counters of a BER run. Bit counts cover the 51 message bits only.
struct BerReport {
    std::uint64_t frames = 0;
    std::uint64_t pre_fec_bit_errors = 0;
    std::uint64_t post_fec_bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t uncorrectable_frames = 0;
    std::uint64_t miscorrected_frames = 0;

    BerReport& operator+=(const BerReport& o) noexcept {
        frames += o.frames;
        pre_fec_bit_errors += o.pre_fec_bit_errors;
        post_fec_bit_errors += o.post_fec_bit_errors;
        frame_errors += o.frame_errors;
        uncorrectable_frames += o.uncorrectable_frames;
        miscorrected_frames += o.miscorrected_frames;
        return *this;
    }

    double pre_fec_ber() const noexcept { return rate(pre_fec_bit_errors, frames * kMessageLength); }
    double post_fec_ber() const noexcept {
        return rate(post_fec_bit_errors, frames * kMessageLength);
    }
    double fer() const noexcept { return rate(frame_errors, frames); }

    friend bool operator==(const BerReport&, const BerReport&) = default;

private:
    static double rate(std::uint64_t num, std::uint64_t den) noexcept {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    }
};

/// One frame of the BER harness. The frame draws its message and its BSC
/// seed from the stream derive_seed(seed, index). An uncorrectable frame
/// passes its received message bits through unchanged.
inline BerReport run_ber_frame(double p, std::uint64_t seed, std::uint64_t index,
                               const GfTables& t = kTables) {
    SplitMix64 rng(derive_seed(seed, index));
    const Message msg = Message::truncate(rng());
    const Codeword sent = encode_lfsr(msg);
    const ReceivedWord received = bsc_corrupt(sent, BscConfig{p, rng()});
    const DecodeOutcome out = decode(received, t);

    BerReport r;
    r.frames = 1;
    r.pre_fec_bit_errors = static_cast<std::uint64_t>((message_of(received) ^ msg).weight());
    if (out.status == DecodeStatus::Uncorrectable) {
        r.post_fec_bit_errors = r.pre_fec_bit_errors;
        r.uncorrectable_frames = 1;
        r.frame_errors = 1;
    } else {
        r.post_fec_bit_errors = static_cast<std::uint64_t>((message_of(out.corrected) ^ msg).weight());
        if (r.post_fec_bit_errors != 0) {
            r.miscorrected_frames = 1;
            r.frame_errors = 1;
        }
    }
    return r;
}

/// Throws std::domain_error for zero frames or p outside [0, 1].
inline BerReport run_ber_experiment(double p, std::uint64_t frames, std::uint64_t seed,
                                    const GfTables& t = kTables) {
    if (frames == 0) {
        throw std::domain_error("BER experiment needs at least one frame");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("crossover probability must lie in [0, 1]");
    }
    BerReport total;
    for (std::uint64_t i = 0; i < frames; ++i) {
        total += run_ber_frame(p, seed, i, t);
    }
    return total;
}

inline constexpr const char* kBerCsvHeader =
    "p,frames,seed,pre_fec_ber,post_fec_ber,fer,uncorrectable,miscorrected";

inline std::string ber_csv_row(double p, std::uint64_t seed, const BerReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%llu,%llu,%.17g,%.17g,%.17g,%llu,%llu", p,
                  static_cast<unsigned long long>(r.frames), static_cast<unsigned long long>(seed),
                  r.pre_fec_ber(), r.post_fec_ber(), r.fer(),
                  static_cast<unsigned long long>(r.uncorrectable_frames),
                  static_cast<unsigned long long>(r.miscorrected_frames));
    return buf;
}

}  // namespace bch
