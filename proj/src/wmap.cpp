#include "tracecode/wmap.hpp"

#include <algorithm>
#include <initializer_list>

#include "tracecode/arith.hpp"

namespace tracecode {

namespace {

bool in(XDescriptor x, std::initializer_list<JClass> set) {
    return x && std::find(set.begin(), set.end(), *x) != set.end();
}

} // namespace

std::string describe_string(XDescriptor d) { return d ? std::string(to_string(*d)) : std::string("ZERO_ELEMENT"); }

std::string_view to_string(AConfig c) {
    switch (c) {
    case AConfig::alpha_zero: return "alpha_zero";
    case AConfig::all_nonzero: return "all_nonzero";
    case AConfig::a1_zero: return "a1_zero";
    case AConfig::a2_zero: return "a2_zero";
    case AConfig::a3_zero: return "a3_zero";
    case AConfig::a4_zero: return "a4_zero";
    case AConfig::a1_a3_zero: return "a1_a3_zero";
    case AConfig::a2_a4_zero: return "a2_a4_zero";
    }
    return "?";
}

AValues a_values(const FieldParams& fp, std::int64_t alpha) {
    const std::int64_t p = fp.p;
    const std::int64_t al = mod_floor(alpha, p);
    const std::int64_t big = fp.ell_m1 % p * ((fp.ell - 1) % p) % p;
    const std::int64_t small = fp.ell_m1 % p;
    AValues v;
    v.a1 = mod_floor(big - al, p);
    v.a2 = mod_floor(-big - al, p);
    v.a3 = mod_floor(small - al, p);
    v.a4 = mod_floor(-small - al, p);
    if (al == 0) {
        v.config = AConfig::alpha_zero;
        return v;
    }
    const bool z1 = v.a1 == 0, z2 = v.a2 == 0, z3 = v.a3 == 0, z4 = v.a4 == 0;
    const int zeros = z1 + z2 + z3 + z4;
    if (zeros == 0)
        v.config = AConfig::all_nonzero;
    else if (zeros == 1)
        v.config = z1 ? AConfig::a1_zero : z2 ? AConfig::a2_zero : z3 ? AConfig::a3_zero : AConfig::a4_zero;
    else if (zeros == 2 && z1 && z3)
        v.config = AConfig::a1_a3_zero;
    else if (zeros == 2 && z2 && z4)
        v.config = AConfig::a2_a4_zero;
    else
        throw Error(Errc::internal, "impossible configuration of a1..a4 for alpha = " + std::to_string(al));
    return v;
}

std::int64_t w_closed(const FieldParams& fp, std::int64_t alpha, XDescriptor x, Reading reading) {
    const std::int64_t p = fp.p, q = fp.q, ell = fp.ell, L = fp.ell_m1, Lm = fp.ell_m, N = fp.N;
    const std::int64_t sq1 = fp.sqrt_q + 1;
    const AValues av = a_values(fp, alpha);
    const bool ell_is_one = ell % p == 1;
    x = effective_descriptor(fp, x, reading);

    if (av.config == AConfig::alpha_zero) {
        if (!x) {
            if (ell_is_one)
                return checked_mul(exact_div(q - 1, Lm, "w(0,0): (q-1)/ell^m"), (p - 1) * Lm - p * ell + p);
            return checked_mul(exact_div(q - 1, L, "w(0,0): (q-1)/ell^(m-1)"), (p - 1) * L - p);
        }
        if (ell_is_one) {
            if (in(x, {JClass::j1_2, JClass::j3_2, JClass::j1_3, JClass::j3_3}))
                return checked_mul(exact_div(sq1, Lm, "w(0,x): (sqrt q+1)/ell^m"), -p * Lm + p * ell - p) + 1;
            return checked_mul(exact_div(sq1, Lm, "w(0,x): (sqrt q+1)/ell^m"), p * ell - p) - p + 1;
        }
        const bool first = in(x, {JClass::j1_1, JClass::j3_1, JClass::j2_other}) ||
                           (reading == Reading::corrected && in(x, {JClass::j4}));
        if (first)
            return exact_div(checked_mul(p, sq1), L, "w(0,x): p(sqrt q+1)/ell^(m-1)") - p + 1;
        return checked_mul(exact_div(sq1, L, "w(0,x): (sqrt q+1)/ell^(m-1)"), -p * L + p) + 1;
    }

    if (!x) {
        switch (av.config) {
        case AConfig::all_nonzero: return 1 - q;
        case AConfig::a1_zero:
        case AConfig::a2_zero: return checked_mul(exact_div(q - 1, N, "w(alpha,0): (q-1)/2ell^m"), -N + p);
        case AConfig::a3_zero:
        case AConfig::a4_zero:
            return checked_mul(exact_div(q - 1, N, "w(alpha,0): (q-1)/2ell^m"), -N + p * ell - p);
        default:
            return checked_mul(exact_div(q - 1, 2 * L, "w(alpha,0): (q-1)/2ell^(m-1)"), -2 * L + p);
        }
    }

    const std::int64_t pN = exact_div(checked_mul(p, sq1), N, "w(alpha,x): p(sqrt q+1)/2ell^m");
    switch (av.config) {
    case AConfig::all_nonzero: return 1;
    case AConfig::a1_zero: return in(x, {JClass::zero}) ? checked_mul(pN, N - 1) - p + 1 : -pN + 1;
    case AConfig::a2_zero: return in(x, {JClass::ell_m}) ? checked_mul(pN, N - 1) - p + 1 : -pN + 1;
    case AConfig::a3_zero:
        return in(x, {JClass::j1_2, JClass::j3_2}) ? checked_mul(pN, N - ell + 1) - p + 1
                                                   : -checked_mul(pN, ell - 1) + 1;
    case AConfig::a4_zero:
        return in(x, {JClass::j1_3, JClass::j3_3}) ? checked_mul(pN, N - ell + 1) - p + 1
                                                   : -checked_mul(pN, ell - 1) + 1;
    case AConfig::a1_a3_zero:
    case AConfig::a2_a4_zero: {
        const std::int64_t pL = exact_div(checked_mul(p, sq1), 2 * L, "w(alpha,x): p(sqrt q+1)/2ell^(m-1)");
        const bool hit = av.config == AConfig::a1_a3_zero ? in(x, {JClass::zero, JClass::j1_2, JClass::j3_2})
                                                          : in(x, {JClass::ell_m, JClass::j1_3, JClass::j3_3});
        return hit ? checked_mul(pL, 2 * L - 1) - p + 1 : -pL + 1;
    }
    default: break;
    }
    throw Error(Errc::internal, "w_closed: unreachable configuration");
}

std::int64_t w_brute(const FieldCtx& ctx, std::int64_t alpha, const Felem& x) {
    const int p = ctx.p();
    CycInt acc(p);
    for (std::int64_t y = 1; y < p; ++y) {
        const CycInt s = s_binomial_brute(ctx, ctx.from_int(y), ctx.scale(x, y));
        acc += zeta_power(p, -y * alpha) * s;
    }
    const auto value = as_rational_integer(acc);
    if (!value) {
        throw Error(Errc::internal, "w(" + std::to_string(alpha) + ", " + ctx.format(x) +
                                        ") is not a rational integer: " + acc.to_string());
    }
    return *value;
}

XDescriptor describe(const FieldCtx& ctx, const Felem& x) {
    if (x.is_zero())
        return std::nullopt;
    const auto& fp = ctx.params();
    return classify_j(fp.ell, fp.m, ctx.j_index(x));
}

XDescriptor effective_descriptor(const FieldParams& fp, XDescriptor x, Reading reading) {
    if (reading == Reading::corrected && x && period_shift(fp) != 0)
        return shifted_class(*x);
    return x;
}

WTable::WTable(const FieldParams& fp, std::int64_t alpha) : alpha_(mod_floor(alpha, fp.p)) {
    for (std::size_t s = 0; s < kSize; ++s)
        values_[s] = w_closed(fp, alpha_, descriptor(s));
}

} // namespace tracecode
