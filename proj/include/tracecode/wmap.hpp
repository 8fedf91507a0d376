#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tracecode/gf.hpp"
#include "tracecode/weil.hpp"

namespace tracecode {

/// What the closed form of w(alpha, x) depends on: nullopt for x = 0,
/// otherwise the class of j_x.
using XDescriptor = std::optional<JClass>;

std::string describe_string(XDescriptor d);

/// Which of a1..a4 vanish mod p. For alpha != 0 exactly one configuration other
/// than `alpha_zero` holds.
enum class AConfig { alpha_zero, all_nonzero, a1_zero, a2_zero, a3_zero, a4_zero, a1_a3_zero, a2_a4_zero };

std::string_view to_string(AConfig c);

/// a1 = L(ell-1) - alpha, a2 = -L(ell-1) - alpha, a3 = L - alpha, a4 = -L - alpha (mod p), L = ell^(m-1).
struct AValues {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t a3 = 0;
    std::int64_t a4 = 0;
    AConfig config = AConfig::alpha_zero;
};

AValues a_values(const FieldParams& params, std::int64_t alpha);


/// Closed-form w(alpha, x). Every division is checked for exactness. Under
/// Reading::corrected the class of x is first moved by shifted_class() when
/// period_shift() is nonzero.
std::int64_t w_closed(const FieldParams& params, std::int64_t alpha, XDescriptor x,
                      Reading reading = Reading::corrected);

/// w(alpha, x) = sum_{y in F_p^*} zeta^{-y alpha} S(y, x y), evaluated with brute-force
/// binomial sums. Throws Errc::internal if the result is not a rational integer.
std::int64_t w_brute(const FieldCtx& ctx, std::int64_t alpha, const Felem& x);

XDescriptor describe(const FieldCtx& ctx, const Felem& x);

/// The descriptor the published case tree has to be read at: x itself, or its
/// shifted class under Reading::corrected when period_shift() is nonzero.
XDescriptor effective_descriptor(const FieldParams& params, XDescriptor x, Reading reading = Reading::corrected);

/// w_closed over the 11 descriptors (zero element plus the ten classes).
class WTable {
public:
    static constexpr std::size_t kSize = 11;

    WTable(const FieldParams& params, std::int64_t alpha);

    std::int64_t at(XDescriptor x) const { return values_[slot(x)]; }
    std::int64_t alpha() const noexcept { return alpha_; }

    static std::size_t slot(XDescriptor x) { return x ? 1 + static_cast<std::size_t>(*x) : 0; }
    static XDescriptor descriptor(std::size_t slot) {
        return slot == 0 ? XDescriptor{} : XDescriptor{static_cast<JClass>(slot - 1)};
    }

private:
    std::int64_t alpha_;
    std::array<std::int64_t, kSize> values_{};
};

inline WTable w_class_table(const FieldParams& params, std::int64_t alpha) { return WTable(params, alpha); }

} // namespace tracecode
