#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tracecode/gf.hpp"
#include "tracecode/ring_zeta.hpp"

namespace tracecode {

/// Classes of the partition of J = [0, 2 ell^m) that govern Tr(xi^j).
///
/// With L = ell^(m-1):
///   zero      {0}
///   ell_m     {ell^m}
///   j1_1..3   J1 = [1, (ell-1)L] split by L does not divide j / L | j, j odd / 2L | j
///   j2_other  J2 = ((ell-1)L, ell^m] minus ell^m
///   j3_1..3   J3 = (ell^m, 2ell^m - L], j = ell^m + kL - u, split by u > 0 / k even / k odd
///   j4        (2ell^m - L, 2ell^m - 1]
enum class JClass { zero, ell_m, j1_1, j1_2, j1_3, j2_other, j3_1, j3_2, j3_3, j4 };

inline constexpr std::array<JClass, 10> kAllJClasses = {
    JClass::zero, JClass::ell_m, JClass::j1_1, JClass::j1_2, JClass::j1_3,
    JClass::j2_other, JClass::j3_1, JClass::j3_2, JClass::j3_3, JClass::j4,
};

std::string_view to_string(JClass c);
std::optional<JClass> jclass_from_string(std::string_view s);

JClass classify_j(std::int64_t ell, std::int64_t m, std::int64_t j);

/// Exponents j in [0, N) belonging to class `c`, ascending. May be empty (e.g. j1_1 when m = 1).
std::vector<std::int64_t> class_members(std::int64_t ell, std::int64_t m, JClass c);

/// Integer value of Tr(xi^j) before reduction mod p, read off the class of j.
std::int64_t trace_of_xi_power(std::int64_t ell, std::int64_t m, std::int64_t j);

/// sum_{i < N} zeta_p^{Tr(a xi^i)}, term by term.
CycInt s_single_brute(const FieldCtx& ctx, const Felem& a);

/// Closed form of the single sum for a in the prime field:
/// zeta^{L(ell-1)a} + zeta^{-L(ell-1)a} + (ell-1)(zeta^{La} + zeta^{-La}) + 2ell^m - 2ell.
CycInt s_single_closed(const FieldParams& params, std::int64_t a);

/// sum_{x in F_q^*} zeta_p^{Tr(a x^((q-1)/N) + b x)}, iterating x = g^t.
CycInt s_binomial_brute(const FieldCtx& ctx, const Felem& a, const Felem& b);

/// How to read the published closed forms.
///
/// `printed` takes them literally. `corrected` differs in two places:
///  - S(a, b) for b != 0 is sqrt(q) chi(a b^(-(q-1)/N) xi^s) - (sqrt(q)+1)/N S(a), where
///    s = ell^m when (sqrt(q)+1)/N is odd and 0 otherwise. With that parity the exceptional
///    Gaussian period of index N sits at N/2, not at 0; the literal form drops the sign.
///  - w(0, x) for ell != 1 (mod p) and j_x in J4 (where Tr(xi^j) = 0) takes the
///    first branch; the literal branch sets omit J4. This only matters for m >= 2.
enum class Reading { corrected, printed };

/// ell^m when (sqrt(q)+1)/N is odd, else 0.
std::int64_t period_shift(const FieldParams& params);

/// Class of j + ell^m (mod N) for j in `c`. An involution: ZERO <-> ELL_M,
/// J1_1 <-> J3_1, J1_2 <-> J3_3, J1_3 <-> J3_2, J2_OTHER <-> J4.
JClass shifted_class(JClass c);

/// Closed form for a in [1, p), with b given by its j-index (nullopt for b = 0).
CycInt s_binomial_closed(const FieldParams& params, std::int64_t a, std::optional<std::int64_t> j_b,
                         Reading reading = Reading::corrected);

/// Closed form for a in [1, p) and a concrete b.
CycInt s_binomial_closed(const FieldCtx& ctx, std::int64_t a, const Felem& b,
                         Reading reading = Reading::corrected);

/// Reduction for arbitrary a in F_q: only the N-term single sum is evaluated directly.
CycInt s_binomial_reduced(const FieldCtx& ctx, const Felem& a, const Felem& b);

} // namespace tracecode
