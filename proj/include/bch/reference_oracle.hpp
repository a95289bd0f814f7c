#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bch/decoder.hpp"
#include "bch/encoder.hpp"
#include "bch/gf64.hpp"

namespace bch {

/// Syndrome -> error pattern for every pattern of weight <= 2 over 63 bits.
///
/// Shares nothing with the algebraic decoder except the field and
/// compute_syndromes. `entries` records insertion order; `slots` is a
/// direct-indexed view over all 2^18 syndrome keys.
struct SyndromeTable {
    static constexpr std::size_t kKeySpace = std::size_t{1} << 18;
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    /// 1 + 63 + C(63, 2).
    static constexpr std::size_t kExpectedEntries = 2017;

    struct Entry {
        std::uint32_t key;
        Codeword pattern;
    };

    std::vector<Entry> entries;
    std::vector<std::uint64_t> slots = std::vector<std::uint64_t>(kKeySpace, kEmpty);

    /// Sets `pattern` and returns true when `key` is present.
    bool lookup(std::uint32_t key, Codeword& pattern) const {
        const std::uint64_t v = slots.at(key);
        if (v == kEmpty) {
            return false;
        }
        pattern = Codeword::truncate(v);
        return true;
    }
};

/// Throws std::logic_error on a key collision, which would mean two
/// correctable patterns are indistinguishable.
inline SyndromeTable build_syndrome_table(const GfTables& t = kTables) {
    SyndromeTable tbl;
    tbl.entries.reserve(SyndromeTable::kExpectedEntries);
    auto insert = [&](Codeword e) {
        const std::uint32_t key = compute_syndromes(e, t).key();
        if (tbl.slots[key] != SyndromeTable::kEmpty) {
            throw std::logic_error("syndrome collision between correctable error patterns");
        }
        tbl.slots[key] = e.value();
        tbl.entries.push_back({key, e});
    };

    insert(Codeword{});
    for (int i = 0; i < kCodeLength; ++i) {
        insert(Codeword::truncate(std::uint64_t{1} << i));
    }
    for (int i = 0; i < kCodeLength; ++i) {
        for (int j = i + 1; j < kCodeLength; ++j) {
            insert(Codeword::truncate((std::uint64_t{1} << i) | (std::uint64_t{1} << j)));
        }
    }
    return tbl;
}

/// Minimum-distance decoding within radius 2 by table lookup.
inline DecodeOutcome brute_force_decode(ReceivedWord r, const SyndromeTable& tbl,
                                        const GfTables& t = kTables) {
    DecodeOutcome out;
    Codeword pattern;
    if (!tbl.lookup(compute_syndromes(r, t).key(), pattern)) {
        return out;
    }
    out.corrected = r ^ pattern;
    if (pattern.none()) {
        out.status = DecodeStatus::NoError;
        return out;
    }
    out.status = DecodeStatus::Corrected;
    for (int i = 0; i < kCodeLength; ++i) {
        if (pattern.test(static_cast<std::size_t>(i))) {
            out.positions.push_back(i);
        }
    }
    return out;
}

/// True iff the table holds exactly 2017 pairwise-distinct keys.
inline bool verify_syndrome_distinctness(const SyndromeTable& tbl) {
    std::vector<std::uint32_t> keys;
    keys.reserve(tbl.entries.size());
    for (const auto& e : tbl.entries) {
        keys.push_back(e.key);
    }
    std::sort(keys.begin(), keys.end());
    const bool distinct = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    return distinct && keys.size() == SyndromeTable::kExpectedEntries;
}

}  // namespace bch
