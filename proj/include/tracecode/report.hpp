#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tracecode/codes.hpp"
#include "tracecode/dual.hpp"
#include "tracecode/gf.hpp"

namespace tracecode {

enum class Format { json, csv, text };

/// How beta was specified on the command line.
struct BetaSpec {
    enum class Kind { zero, index, coeffs, klass };
    Kind kind = Kind::zero;
    std::int64_t index = 0;              // beta = g^index
    std::vector<std::int64_t> coeffs;    // polynomial-basis coefficients
    std::optional<JClass> klass;         // sweep rows: the class the representative stands for
};

struct CodeReport {
    FieldParams params;
    std::int64_t alpha = 0;
    BetaSpec beta;
    std::optional<std::int64_t> j_beta;
    XDescriptor beta_class;
    bool class_empty = false;  // sweep row for a class with no members

    std::optional<WeightDistribution> code;
    std::optional<Prediction> prediction;
    std::optional<PrintedComparison> printed;
    // Ordered (name, value) pairs; empty for empty codes and closed-only runs.
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<DualSummary> dual;
    std::optional<std::int64_t> y_count_closed;
    std::optional<SecretSharing> secret_sharing;
    std::optional<double> timing_ms;

    bool all_pass() const;
};

/// Single JSON object with a fixed key order.
std::string render_json(const CodeReport& report);
/// "weight,count" followed by one row per weight, ascending.
std::string render_csv(const CodeReport& report);
std::string render_text(const CodeReport& report);
std::string render(const CodeReport& report, Format format);

/// Writes `text` to `out`, or to stdout when `out` is empty. Throws Errc::io with the path.
void write_output(const std::string& text, const std::optional<std::filesystem::path>& out);

void emit_report(const CodeReport& report, Format format, const std::optional<std::filesystem::path>& out);

} // namespace tracecode
