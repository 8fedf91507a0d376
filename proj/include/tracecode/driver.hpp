#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tracecode/report.hpp"

namespace tracecode {

enum class Command { field_info, weil, wmap, code, dual, sweep, verify };
enum class Mode { closed, brute, both };

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

struct RunConfig {
    Command command = Command::code;
    std::int64_t p = 0;
    std::int64_t ell = 0;
    std::int64_t m = 1;
    std::int64_t alpha = 0;
    std::int64_t a = 1;  // weil: the multiplier a in S(a, beta)
    BetaSpec beta;
    Mode mode = Mode::both;
    unsigned threads = 1;
    std::optional<std::filesystem::path> cache_dir;  // falls back to TRACECODE_CACHE_DIR
    bool no_cache = false;
    Format format = Format::json;
    std::optional<std::filesystem::path> out;
    std::optional<std::uint64_t> q_limit;
    bool timing = false;
    bool corrupt_modulus = false;  // negative control for verify
};

/// Parameters validated against the q limit that applies to `mode`.
FieldParams resolve_params(const RunConfig& config);

/// Builds a field honouring the cache settings in `config`.
FieldCtx open_field(const FieldParams& params, const RunConfig& config);

/// Report for one (alpha, beta). `ctx` may be null only in closed mode with a beta
/// given as zero or as a power of g.
CodeReport build_code_report(const FieldParams& params, const FieldCtx* ctx, std::int64_t alpha,
                             const BetaSpec& beta, Mode mode, unsigned threads, bool timing = false);

/// Rows of a sweep: beta = 0 and one representative g^t, t = -j mod N with j the
/// least member, per class, for every alpha in [0, p). Empty classes give a
/// placeholder row.
std::vector<CodeReport> sweep_reports(const FieldParams& params, const FieldCtx* ctx, Mode mode, unsigned threads,
                                      bool timing = false);

std::string render_sweep(const FieldParams& params, const std::vector<CodeReport>& rows, Format format);

struct PropertyResult {
    std::string name;
    std::int64_t passed = 0;
    std::int64_t total = 0;
    std::optional<std::string> counterexample;  // first failure
};

/// The property suite behind `verify`.
std::vector<PropertyResult> verify_properties(const FieldCtx& ctx, unsigned threads);

/// Command entry points; each returns an exit code and writes diagnostics to `err`.
int run_field_info(const RunConfig& config, std::ostream& err);
int run_weil(const RunConfig& config, std::ostream& err);
int run_wmap(const RunConfig& config, std::ostream& err);
int run_code(const RunConfig& config, std::ostream& err);
int run_dual(const RunConfig& config, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& err);

/// Dispatches on config.command. Errors map to exit codes: parameter, limit and
/// I/O problems give 1; failed closed-form divisions and broken invariants give 2.
int run(const RunConfig& config, std::ostream& err);

} // namespace tracecode
