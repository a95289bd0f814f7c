#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bch/channel_sim.hpp"
#include "bch/decoder.hpp"
#include "bch/encoder.hpp"
#include "bch/gf64.hpp"
#include "bch/reference_oracle.hpp"

namespace bch {

struct SelfTestCheck {
    std::string name;
    bool passed;
    std::string detail;
};

namespace detail {

// Calls f(mask) for every nonzero pattern of weight <= 2 over n bits.
template <typename F>
void for_each_correctable_pattern(int n, F&& f) {
    for (int i = 0; i < n; ++i) {
        f(std::uint64_t{1} << i);
        for (int j = i + 1; j < n; ++j) {
            f((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
        }
    }
}

}  // namespace detail

/// Built-in consistency checks run by `bch63 selftest`.
inline std::vector<SelfTestCheck> run_selftest(std::uint64_t seed = 0x5EED,
                                               std::uint64_t differential_words = 10000) {
    std::vector<SelfTestCheck> checks;
    const GfTables& t = tables();

    {
        const bool ok = compute_generator(2, t) == kGenerator;
        checks.push_back({"generator polynomial", ok, ok ? "g(x) matches" : "mismatch"});
    }

    {
        int mismatches = 0;
        for (unsigned a = 0; a < 64; ++a) {
            for (unsigned b = 0; b < 64; ++b) {
                if (gf_mul_mse(GfElement(a), GfElement(b)) !=
                    gf_mul_table(GfElement(a), GfElement(b), t)) {
                    ++mismatches;
                }
            }
        }
        checks.push_back({"multiplier equivalence", mismatches == 0,
                          std::to_string(4096 - mismatches) + "/4096 pairs agree"});
    }

    {
        SplitMix64 rng(seed);
        int failures = 0, decodes = 0;
        for (int m = 0; m < 10; ++m) {
            const Message msg = Message::truncate(rng());
            const Codeword c = encode_lfsr(msg);
            detail::for_each_correctable_pattern(kCodeLength, [&](std::uint64_t e) {
                ++decodes;
                const DecodeOutcome out = decode(c ^ Codeword::truncate(e), t);
                if (out.status != DecodeStatus::Corrected || message_of(out.corrected) != msg) {
                    ++failures;
                }
            });
        }
        checks.push_back({"double-error sweep", failures == 0,
                          std::to_string(decodes - failures) + "/" + std::to_string(decodes) +
                              " corrected"});
    }

    {
        SplitMix64 rng(seed + 1);
        int failures = 0, decodes = 0;
        for (int m = 0; m < 10; ++m) {
            const ShortMessage payload = ShortMessage::truncate(rng());
            const ShortCodeword c = encode_shortened(payload);
            detail::for_each_correctable_pattern(kShortCodeLength, [&](std::uint64_t e) {
                ++decodes;
                const ShortDecodeOutcome out = decode_shortened(c ^ ShortCodeword::truncate(e), t);
                if (out.status != DecodeStatus::Corrected || payload_of(out.corrected) != payload) {
                    ++failures;
                }
            });
        }
        checks.push_back({"shortened sweep", failures == 0,
                          std::to_string(decodes - failures) + "/" + std::to_string(decodes) +
                              " corrected"});
    }

    const SyndromeTable tbl = build_syndrome_table(t);
    {
        const bool ok = verify_syndrome_distinctness(tbl);
        checks.push_back({"syndrome distinctness", ok,
                          std::to_string(tbl.entries.size()) + " table entries"});
    }

    {
        SplitMix64 rng(seed + 2);
        std::uint64_t disagreements = 0;
        for (std::uint64_t i = 0; i < differential_words; ++i) {
            const ReceivedWord r = ReceivedWord::truncate(rng());
            const DecodeOutcome a = decode(r, t);
            const DecodeOutcome b = brute_force_decode(r, tbl, t);
            if (a.status != b.status ||
                (a.status != DecodeStatus::Uncorrectable && a.corrected != b.corrected)) {
                ++disagreements;
            }
        }
        checks.push_back({"oracle differential", disagreements == 0,
                          std::to_string(differential_words - disagreements) + "/" +
                              std::to_string(differential_words) + " words agree"});
    }

    return checks;
}

}  // namespace bch
