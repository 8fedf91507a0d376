#include "tracecode/weil.hpp"

#include "tracecode/arith.hpp"

namespace tracecode {

namespace {

constexpr std::array<std::string_view, 10> kJClassNames = {
    "ZERO", "ELL_M", "J1_1", "J1_2", "J1_3", "J2_OTHER", "J3_1", "J3_2", "J3_3", "J4",
};

struct Shape {
    std::int64_t L;   // ell^(m-1)
    std::int64_t Lm;  // ell^m
    std::int64_t N;
};

Shape shape_of(std::int64_t ell, std::int64_t m) {
    if (ell < 3 || m < 1)
        throw Error(Errc::invalid_parameter, "J-partition needs ell >= 3 and m >= 1");
    const auto L = static_cast<std::int64_t>(checked_pow(static_cast<std::uint64_t>(ell),
                                                         static_cast<std::uint64_t>(m - 1)));
    const std::int64_t Lm = checked_mul(L, ell);
    return {L, Lm, checked_mul(2, Lm)};
}

std::vector<std::int64_t> trace_table_of_xi(const FieldCtx& ctx, const Felem& a) {
    const auto& fp = ctx.params();
    std::vector<std::int64_t> tr(static_cast<std::size_t>(fp.N));
    Felem x = a;
    for (auto& t : tr) {
        t = ctx.trace_linear(x.coeffs);
        x = ctx.mul(x, ctx.xi());
    }
    return tr;
}

} // namespace

std::string_view to_string(JClass c) { return kJClassNames[static_cast<std::size_t>(c)]; }

std::optional<JClass> jclass_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kJClassNames.size(); ++i) {
        if (kJClassNames[i] == s)
            return static_cast<JClass>(i);
    }
    return std::nullopt;
}

JClass classify_j(std::int64_t ell, std::int64_t m, std::int64_t j) {
    const auto [L, Lm, N] = shape_of(ell, m);
    if (j < 0 || j >= N)
        throw Error(Errc::invalid_parameter, "j = " + std::to_string(j) + " outside [0, " + std::to_string(N) + ")");
    if (j == 0)
        return JClass::zero;
    if (j <= (ell - 1) * L) {
        if (j % L != 0)
            return JClass::j1_1;
        return (j % 2 != 0) ? JClass::j1_2 : JClass::j1_3;
    }
    if (j <= Lm)
        return j == Lm ? JClass::ell_m : JClass::j2_other;
    if (j <= 2 * Lm - L) {
        const std::int64_t offset = j - Lm;  // k*L - u with 1 <= k <= ell-1, 0 <= u < L
        if (offset % L != 0)
            return JClass::j3_1;
        return ((offset / L) % 2 == 0) ? JClass::j3_2 : JClass::j3_3;
    }
    return JClass::j4;
}

std::vector<std::int64_t> class_members(std::int64_t ell, std::int64_t m, JClass c) {
    const auto N = shape_of(ell, m).N;
    std::vector<std::int64_t> out;
    for (std::int64_t j = 0; j < N; ++j) {
        if (classify_j(ell, m, j) == c)
            out.push_back(j);
    }
    return out;
}

std::int64_t trace_of_xi_power(std::int64_t ell, std::int64_t m, std::int64_t j) {
    const std::int64_t L = shape_of(ell, m).L;
    switch (classify_j(ell, m, j)) {
    case JClass::zero: return (ell - 1) * L;
    case JClass::ell_m: return -(ell - 1) * L;
    case JClass::j1_3:
    case JClass::j3_3: return -L;
    case JClass::j1_2:
    case JClass::j3_2: return L;
    default: return 0;
    }
}

CycInt s_single_brute(const FieldCtx& ctx, const Felem& a) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(ctx.p()), 0);
    for (auto t : trace_table_of_xi(ctx, a))
        ++counts[static_cast<std::size_t>(t)];
    return CycInt::from_exponent_counts(ctx.p(), counts);
}

CycInt s_single_closed(const FieldParams& fp, std::int64_t a) {
    const int p = static_cast<int>(fp.p);
    const std::int64_t big = mod_floor(fp.ell_m1 * (fp.ell - 1) % fp.p * mod_floor(a, fp.p), fp.p);
    const std::int64_t small = mod_floor(fp.ell_m1 % fp.p * mod_floor(a, fp.p), fp.p);
    CycInt s = zeta_power(p, big) + zeta_power(p, -big);
    s += (zeta_power(p, small) + zeta_power(p, -small)).scaled(fp.ell - 1);
    s += CycInt::from_integer(p, 2 * fp.ell_m - 2 * fp.ell);
    return s;
}

CycInt s_binomial_brute(const FieldCtx& ctx, const Felem& a, const Felem& b) {
    const auto& fp = ctx.params();
    const auto p = static_cast<std::uint64_t>(fp.p);
    const auto N = static_cast<std::uint64_t>(fp.N);
    const auto tr_a = trace_table_of_xi(ctx, a);
    const auto fb = ctx.trace_functional(b);
    std::vector<std::int64_t> counts(p, 0);
    // x = g^t gives x^((q-1)/N) = xi^(t mod N).
    ctx.for_each_power(0, static_cast<std::uint64_t>(fp.q - 1),
                       [&](std::uint64_t t, std::span<const std::uint32_t> x) {
                           std::uint64_t acc = static_cast<std::uint64_t>(tr_a[t % N]);
                           for (std::size_t k = 0; k < x.size(); ++k)
                               acc += std::uint64_t{fb[k]} * x[k];
                           ++counts[acc % p];
                       });
    return CycInt::from_exponent_counts(ctx.p(), counts);
}

std::int64_t period_shift(const FieldParams& fp) { return fp.c_div % 2 == 0 ? 0 : fp.ell_m; }

JClass shifted_class(JClass c) {
    switch (c) {
    case JClass::zero: return JClass::ell_m;
    case JClass::ell_m: return JClass::zero;
    case JClass::j1_1: return JClass::j3_1;
    case JClass::j3_1: return JClass::j1_1;
    case JClass::j1_2: return JClass::j3_3;
    case JClass::j3_3: return JClass::j1_2;
    case JClass::j1_3: return JClass::j3_2;
    case JClass::j3_2: return JClass::j1_3;
    case JClass::j2_other: return JClass::j4;
    case JClass::j4: return JClass::j2_other;
    }
    throw Error(Errc::internal, "shifted_class: unknown class");
}

CycInt s_binomial_closed(const FieldParams& fp, std::int64_t a, std::optional<std::int64_t> j_b, Reading reading) {
    const int p = static_cast<int>(fp.p);
    const std::int64_t am = mod_floor(a, fp.p);
    if (am == 0)
        throw Error(Errc::invalid_parameter, "s_binomial_closed requires a != 0 mod p");
    if (!j_b)
        return s_single_closed(fp, am).scaled(fp.exp_d);
    const std::int64_t shift = reading == Reading::corrected ? period_shift(fp) : 0;
    const std::int64_t tr = trace_of_xi_power(fp.ell, fp.m, mod_floor(*j_b + shift, fp.N));
    const CycInt at_one = zeta_power(p, tr).scaled(fp.sqrt_q) - s_single_closed(fp, 1).scaled(fp.c_div);
    return galois(am, at_one);
}

CycInt s_binomial_closed(const FieldCtx& ctx, std::int64_t a, const Felem& b, Reading reading) {
    if (b.is_zero())
        return s_binomial_closed(ctx.params(), a, std::nullopt, reading);
    return s_binomial_closed(ctx.params(), a, ctx.j_index(b), reading);
}

CycInt s_binomial_reduced(const FieldCtx& ctx, const Felem& a, const Felem& b) {
    const auto& fp = ctx.params();
    if (b.is_zero())
        return s_single_brute(ctx, a).scaled(fp.exp_d);
    // a * b^(-(q-1)/N) = a * xi^(j_b); S(u) is unchanged by the extra xi^shift.
    const Felem u = ctx.mul(a, ctx.xi_power(ctx.j_index(b) + period_shift(fp)));
    return zeta_power(ctx.p(), ctx.trace_linear(u.coeffs)).scaled(fp.sqrt_q) -
           s_single_brute(ctx, u).scaled(fp.c_div);
}

} // namespace tracecode
