#include "doctest.h"
#include "tracecode/error.hpp"
#include "tracecode/weil.hpp"

using namespace tracecode;

namespace {

CycInt cyc(int p, std::vector<std::int64_t> c) { return CycInt(p, std::move(c)); }
CycInt integer(int p, std::int64_t n) { return CycInt::from_integer(p, n); }

} // namespace

TEST_CASE("J-partition") {
    CHECK(classify_j(7, 1, 3) == JClass::j1_2);
    CHECK(classify_j(7, 1, 4) == JClass::j1_3);
    CHECK(classify_j(7, 1, 9) == JClass::j3_2);
    CHECK(classify_j(3, 2, 12) == JClass::j3_3);
    CHECK(classify_j(3, 2, 16) == JClass::j4);
    CHECK(classify_j(5, 1, 5) == JClass::ell_m);
    CHECK(classify_j(5, 1, 0) == JClass::zero);

    // classes partition [0, N)
    for (auto [ell, m] : {std::pair{5, 1}, {7, 1}, {3, 2}, {3, 3}, {5, 2}}) {
        std::int64_t N = 2;
        for (int i = 0; i < m; ++i)
            N *= ell;
        std::int64_t total = 0;
        for (JClass c : kAllJClasses) {
            for (std::int64_t j : class_members(ell, m, c)) {
                CHECK(classify_j(ell, m, j) == c);
                ++total;
            }
        }
        CHECK(total == N);
    }
    CHECK(class_members(7, 1, JClass::j1_1).empty());
    CHECK(jclass_from_string(to_string(JClass::j3_2)) == JClass::j3_2);
    CHECK_FALSE(jclass_from_string("J9").has_value());
}

TEST_CASE("trace table of xi powers") {
    CHECK(trace_of_xi_power(7, 1, 0) == 6);
    CHECK(trace_of_xi_power(3, 2, 6) == -3);
    CHECK(trace_of_xi_power(5, 1, 7) == 1);
    for (auto [p, ell, m] : {std::tuple{3, 5, 1}, {3, 7, 1}, {5, 3, 2}}) {
        const auto ctx = FieldCtx::build(validate_params(p, ell, m));
        for (std::int64_t j = 0; j < ctx.params().N; ++j) {
            const auto t = trace_of_xi_power(ell, m, j);
            CHECK(static_cast<std::int64_t>(ctx.trace(ctx.xi_power(j))) == ((t % p) + p) % p);
        }
    }
}

TEST_CASE("period shift and the class involution") {
    CHECK(period_shift(validate_params(3, 7, 1)) == 0);
    CHECK(period_shift(validate_params(3, 5, 1)) == 5);
    CHECK(period_shift(validate_params(7, 5, 1)) == 5);
    CHECK(period_shift(validate_params(5, 3, 2)) == 9);
    for (JClass c : kAllJClasses)
        CHECK(shifted_class(shifted_class(c)) == c);
    for (auto [ell, m] : {std::pair{5, 1}, {3, 2}, {3, 3}}) {
        std::int64_t lm = 1;
        for (int i = 0; i < m; ++i)
            lm *= ell;
        for (std::int64_t j = 0; j < 2 * lm; ++j)
            CHECK(classify_j(ell, m, (j + lm) % (2 * lm)) == shifted_class(classify_j(ell, m, j)));
    }
}

TEST_CASE("single sums") {
    const auto c371 = FieldCtx::build(validate_params(3, 7, 1));
    const auto c751 = FieldCtx::build(validate_params(7, 5, 1));
    CHECK(s_single_brute(c371, c371.zero()) == integer(3, 14));
    CHECK(s_single_brute(c371, c371.one()) == integer(3, -4));
    CHECK(s_single_closed(c371.params(), 1) == integer(3, -4));
    CHECK(s_single_closed(c371.params(), 0) == integer(3, 14));
    CHECK(s_single_brute(c751, c751.one()) == cyc(7, {-4, 0, -4, -3, -3, -4}));
    const auto f532 = validate_params(5, 3, 2);
    CHECK(s_single_closed(f532, 2) == galois(2, s_single_closed(f532, 1)));
}

TEST_CASE("binomial sums, brute") {
    const auto ctx = FieldCtx::build(validate_params(3, 7, 1));
    CHECK(s_binomial_brute(ctx, ctx.zero(), ctx.zero()) == integer(3, 728));
    CHECK(s_binomial_brute(ctx, ctx.zero(), ctx.g()) == integer(3, -1));
    CHECK(s_binomial_brute(ctx, ctx.one(), ctx.zero()) == integer(3, -208));
}

TEST_CASE("binomial sums, closed vs brute") {
    const auto c371 = FieldCtx::build(validate_params(3, 7, 1));
    CHECK(s_binomial_closed(c371.params(), 1, 0) == integer(3, 35));
    CHECK(s_binomial_closed(c371.params(), 1, 3) == cyc(3, {8, 27}));
    for (std::int64_t j : {1, 3, 5})
        CHECK(s_binomial_brute(c371, c371.one(), c371.g_power(-j)) == cyc(3, {8, 27}));
    CHECK(s_binomial_closed(c371.params(), 1, std::nullopt) == integer(3, -208));

    const auto f751 = validate_params(7, 5, 1);
    for (std::int64_t j = 0; j < 10; ++j)
        CHECK(s_binomial_closed(f751, 2, j) == galois(2, s_binomial_closed(f751, 1, j)));
}

TEST_CASE("sign of the exceptional period when (sqrt(q)+1)/N is odd") {
    // (3,5,1): value counts of Tr(x^8 + x) over F_81^* are 27, 22, 31 (independent scan),
    // so S(1, 1) = -4 - 9 zeta.
    const auto ctx = FieldCtx::build(validate_params(3, 5, 1));
    CHECK(s_binomial_brute(ctx, ctx.one(), ctx.one()) == cyc(3, {-4, -9}));
    CHECK(s_binomial_closed(ctx, 1, ctx.one()) == cyc(3, {-4, -9}));
    CHECK(s_binomial_closed(ctx, 1, ctx.one(), Reading::printed) == cyc(3, {5, 9}));
}

TEST_CASE("reduced evaluation and invariances on GF(81)") {
    const auto ctx = FieldCtx::build(validate_params(3, 5, 1));
    for (std::uint64_t va = 0; va < 81; va += 7) {
        const Felem a = ctx.from_encoding(va);
        CHECK(s_binomial_brute(ctx, a, ctx.zero()) == s_single_brute(ctx, a).scaled(8));
        for (std::int64_t j = 0; j < 10; ++j)
            CHECK(s_single_brute(ctx, ctx.mul(a, ctx.xi_power(j))) == s_single_brute(ctx, a));
        for (std::uint64_t vb = 1; vb < 81; vb += 11) {
            const Felem b = ctx.from_encoding(vb);
            const CycInt brute = s_binomial_brute(ctx, a, b);
            CHECK(s_binomial_reduced(ctx, a, b) == brute);
            // S(a, b) = S(a, b z) for z in F_p^*
            CHECK(s_binomial_brute(ctx, a, ctx.scale(b, 2)) == brute);
        }
    }
}
