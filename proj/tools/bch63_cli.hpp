#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bch/channel_sim.hpp"
#include "bch/decoder.hpp"
#include "bch/encoder.hpp"
#include "bch/frame_io.hpp"
#include "bch/gf64.hpp"
#include "bch/selftest.hpp"

namespace bch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUncorrectable = 1;
inline constexpr int kExitUsage = 2;

/// Usage, parse, or I/O failure; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::uint64_t> load(const std::string& path, FrameKind kind) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "' for reading");
    }
    try {
        return read_frames(in, kind);
    } catch (const FrameParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

inline std::ofstream create(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    return out;
}

inline int cmd_encode(bool is_short, const std::string& in, const std::string& out) {
    const FrameKind src = is_short ? FrameKind::ShortMessage : FrameKind::Message;
    const FrameKind dst = is_short ? FrameKind::ShortCodeword : FrameKind::Codeword;
    std::vector<std::uint64_t> frames = load(in, src);
    for (auto& f : frames) {
        f = is_short ? encode_shortened(ShortMessage(f)).value() : encode_lfsr(Message(f)).value();
    }
    auto os = create(out);
    write_frames(os, frames, dst);
    return kExitOk;
}

inline int cmd_decode(bool is_short, const std::string& in, const std::string& out,
                      const std::string& report, bool allow_errors, std::ostream& err) {
    const FrameKind src = is_short ? FrameKind::ShortCodeword : FrameKind::Codeword;
    const FrameKind dst = is_short ? FrameKind::ShortMessage : FrameKind::Message;
    const std::vector<std::uint64_t> frames = load(in, src);

    auto os = create(out);
    std::optional<std::ofstream> csv;
    if (!report.empty()) {
        csv = create(report);
        *csv << "frame_index,status,num_errors_corrected\n";
    }

    std::size_t uncorrectable = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        DecodeStatus status;
        std::size_t corrected_bits = 0;
        if (is_short) {
            const ShortDecodeOutcome r = decode_shortened(ShortCodeword(frames[i]));
            status = r.status;
            corrected_bits = r.positions.size();
            if (status != DecodeStatus::Uncorrectable) {
                os << format_frame(payload_of(r.corrected).value(), dst) << '\n';
            }
        } else {
            const DecodeOutcome r = decode(Codeword(frames[i]));
            status = r.status;
            corrected_bits = r.positions.size();
            if (status != DecodeStatus::Uncorrectable) {
                os << format_frame(message_of(r.corrected).value(), dst) << '\n';
            }
        }
        if (status == DecodeStatus::Uncorrectable) {
            ++uncorrectable;
            os << uncorrectable_sentinel(dst) << '\n';
        }
        if (csv) {
            *csv << i << ',' << to_string(status) << ',' << corrected_bits << '\n';
        }
    }

    if (uncorrectable > 0) {
        err << uncorrectable << " of " << frames.size() << " frames uncorrectable\n";
        if (!allow_errors) {
            return kExitUncorrectable;
        }
    }
    return kExitOk;
}

inline int cmd_corrupt(bool is_short, std::optional<int> weight, std::optional<double> bsc,
                       std::uint64_t seed, const std::string& in, const std::string& out) {
    if (weight.has_value() == bsc.has_value()) {
        throw UsageError("corrupt needs exactly one of --weight or --bsc");
    }
    const FrameKind kind = is_short ? FrameKind::ShortCodeword : FrameKind::Codeword;
    const int n = is_short ? kShortCodeLength : kCodeLength;
    if (weight && (*weight < 0 || *weight > n)) {
        throw UsageError("--weight must lie in 0.." + std::to_string(n));
    }
    if (bsc && !(*bsc >= 0.0 && *bsc <= 1.0)) {
        throw UsageError("--bsc must lie in [0, 1]");
    }

    std::vector<std::uint64_t> frames = load(in, kind);
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const std::uint64_t frame_seed = derive_seed(seed, i);
        const ErrorPattern e = weight ? random_error_pattern(*weight, n, frame_seed)
                                      : bsc_pattern(n, BscConfig{*bsc, frame_seed});
        frames[i] ^= e.mask.value();
    }
    auto os = create(out);
    write_frames(os, frames, kind);
    return kExitOk;
}

inline int cmd_ber(double p, std::uint64_t frames, std::uint64_t seed, const std::string& csv_path,
                   std::ostream& out) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError("--p must lie in [0, 1]");
    }
    if (frames == 0) {
        throw UsageError("--frames must be at least 1");
    }
    const BerReport r = run_ber_experiment(p, frames, seed);
    const std::string row = ber_csv_row(p, seed, r);
    out << kBerCsvHeader << '\n' << row << '\n';
    if (!csv_path.empty()) {
        auto os = create(csv_path);
        os << kBerCsvHeader << '\n' << row << '\n';
    }
    return kExitOk;
}

inline int cmd_tables(std::ostream& out) {
    const GfTables& t = tables();
    for (int k = 0; k < kGroupOrder; ++k) {
        const unsigned v = t.antilog[k].value();
        out << k << ' ';
        for (int b = 5; b >= 0; --b) {
            out << (((v >> b) & 1U) ? '1' : '0');
        }
        out << '\n';
    }
    return kExitOk;
}

inline int cmd_selftest(std::ostream& out) {
    bool all = true;
    for (const auto& c : run_selftest()) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        all = all && c.passed;
    }
    out << (all ? "selftest passed" : "selftest FAILED") << '\n';
    return all ? kExitOk : kExitUncorrectable;
}

}  // namespace detail

/// Entry point shared by the bch63 binary and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"BCH(63,51) t=2 codec"};
    app.require_subcommand(1);

    bool is_short = false;
    bool allow_errors = false;
    std::string in_path, out_path, report_path, csv_path;
    std::optional<int> weight;
    std::optional<double> bsc;
    std::uint64_t seed = 0;
    double p = 0.0;
    std::uint64_t frames = 0;

    auto* encode = app.add_subcommand("encode", "message frames -> codeword frames");
    encode->add_flag("--short", is_short, "use the shortened (31,19) code");
    encode->add_option("in", in_path)->required();
    encode->add_option("out", out_path)->required();

    auto* decode_cmd = app.add_subcommand("decode", "codeword frames -> message frames");
    decode_cmd->add_flag("--short", is_short, "use the shortened (31,19) code");
    decode_cmd->add_option("in", in_path)->required();
    decode_cmd->add_option("out", out_path)->required();
    decode_cmd->add_option("--report", report_path, "per-frame CSV report");
    decode_cmd->add_flag("--allow-errors", allow_errors, "exit 0 even if frames are uncorrectable");

    auto* corrupt = app.add_subcommand("corrupt", "inject seeded channel errors");
    corrupt->add_flag("--short", is_short, "frames are shortened (31-bit) codewords");
    auto* weight_opt = corrupt->add_option("--weight", weight, "flip exactly W random bits");
    corrupt->add_option("--bsc", bsc, "flip each bit with probability P")->excludes(weight_opt);
    corrupt->add_option("--seed", seed)->required();
    corrupt->add_option("in", in_path)->required();
    corrupt->add_option("out", out_path)->required();

    auto* ber = app.add_subcommand("ber", "Monte Carlo BER/FER over a binary symmetric channel");
    ber->add_option("--p", p, "crossover probability")->required();
    ber->add_option("--frames", frames)->required();
    ber->add_option("--seed", seed)->required();
    ber->add_option("--csv", csv_path, "also write the report to this file");

    auto* tables_cmd = app.add_subcommand("tables", "dump the GF(64) antilog table");
    auto* selftest = app.add_subcommand("selftest", "run the built-in verification suite");

    std::vector<const char*> argv;
    argv.push_back("bch63");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*encode) return detail::cmd_encode(is_short, in_path, out_path);
        if (*decode_cmd)
            return detail::cmd_decode(is_short, in_path, out_path, report_path, allow_errors, err);
        if (*corrupt) return detail::cmd_corrupt(is_short, weight, bsc, seed, in_path, out_path);
        if (*ber) return detail::cmd_ber(p, frames, seed, csv_path, out);
        if (*tables_cmd) return detail::cmd_tables(out);
        if (*selftest) return detail::cmd_selftest(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bch::cli
