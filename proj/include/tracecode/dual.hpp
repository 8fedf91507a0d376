#pragma once

#include <cstdint>
#include <optional>
#include <map>
#include <string_view>
#include <utility>

#include "tracecode/codes.hpp"
#include "tracecode/gf.hpp"
#include "tracecode/wmap.hpp"

namespace tracecode {

enum class DualDistance { two, at_least_three };

/// "2" or ">=3".
std::string_view to_string(DualDistance d);

/// A weight-2 dual word: c_i at position i and c_j at position j, with
/// c_i d_i + c_j d_j = 0 in the field.
struct DualWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    std::int64_t c_i = 0;
    std::int64_t c_j = 0;
    Felem d_i;
    Felem d_j;
};

struct DualFlag {
    DualDistance distance = DualDistance::at_least_three;
    std::optional<DualWitness> witness;
};

/// #{x in F_q^* : Tr(x^((q-1)/N)) = alpha, Tr(beta x) = 0}, by a scan of the field.
std::int64_t y_count_brute(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta);

/// (w(alpha,0) + (p-1) w(alpha,beta) + q - p) / p^2. Only valid for beta != 0;
/// throws Errc::domain for beta = 0.
std::int64_t y_count_closed(const FieldParams& params, std::int64_t alpha, XDescriptor beta_class);

/// The same expression without the beta != 0 guard and without the exactness
/// assertion, as a fraction (numerator, p^2).
std::pair<std::int64_t, std::int64_t> y_count_formula(const FieldParams& params, std::int64_t alpha,
                                                      XDescriptor beta_class);

/// Dual distance of C_{alpha,beta} for nonempty D. When it is 2 a witness pair
/// (d, -d) is located and checked against every codeword (all gamma in F_q).
/// Throws Errc::domain when D is empty and Errc::internal if a witness fails.
DualFlag dual_min_distance_flag(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, const DefiningSet& D);

/// Hamming-bound exclusion of a [n, k_dual, 3] code: 1 + n(p-1) > p^(n - k_dual).
bool sphere_packing_optimal(std::int64_t n, std::int64_t k_dual, std::int64_t p);

struct SecretSharing {
    std::int64_t wt_min = 0;
    std::int64_t wt_max = 0;
    bool ok = false;  // p * wt_min > (p-1) * wt_max
};

/// Requires a nonempty distribution.
SecretSharing secret_sharing_check(const std::map<std::int64_t, std::int64_t>& distribution, std::int64_t p);

struct DualSummary {
    std::int64_t n = 0;
    std::int64_t k_dual = 0;
    DualDistance distance = DualDistance::at_least_three;
    std::optional<DualWitness> witness;
    std::int64_t y_count = 0;
    std::optional<bool> sphere_packing_optimal;  // only when the dual distance is 2
    bool paper_claim_mismatch = false;           // alpha = beta = 0 and the bound test fails
};

/// Dual parameters from an enumerated code.
DualSummary summarize_dual(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, const DefiningSet& D,
                           std::int64_t k);

/// Dual parameters from the closed forms only (no witness).
DualSummary summarize_dual_closed(const FieldParams& params, std::int64_t alpha, XDescriptor beta_class);

} // namespace tracecode
