#include "doctest.h"
#include "tracecode/arith.hpp"
#include "tracecode/error.hpp"
#include "tracecode/gf.hpp"

using namespace tracecode;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::internal;
}

} // namespace

TEST_CASE("parameter validation") {
    const auto f = validate_params(5, 3, 2);
    CHECK(f.N == 18);
    CHECK(f.e == 6);
    CHECK(f.q == 15625);
    CHECK(f.sqrt_q == 125);
    CHECK(f.c_div == 7);
    CHECK(f.exp_d == 868);

    CHECK(code_of([] { validate_params(3, 11, 1); }) == Errc::not_primitive);
    CHECK(code_of([] { validate_params(4, 5, 1); }) == Errc::not_prime);
    CHECK(code_of([] { validate_params(2, 5, 1); }) == Errc::invalid_parameter);
    CHECK(code_of([] { validate_params(5, 5, 1); }) == Errc::invalid_parameter);
    CHECK(code_of([] { validate_params(3, 5, 0); }) == Errc::invalid_parameter);
    CHECK(code_of([] { validate_params(3, 5, 2); }) == Errc::q_limit_exceeded);
    CHECK(validate_params(3, 5, 2, kClosedFormQLimit).q == 3486784401LL);
}

TEST_CASE("cyclotomic modulus is irreducible") {
    for (auto [p, ell, m] : {std::tuple{3, 5, 1}, {3, 7, 1}, {7, 5, 1}, {5, 3, 2}}) {
        const auto f = validate_params(p, ell, m);
        const auto mod = cyclotomic_modulus(f);
        CHECK(mod.size() == static_cast<std::size_t>(f.e + 1));
        CHECK(is_irreducible(mod, static_cast<std::uint32_t>(p)));
    }
    // x^2 - 1 = (x - 1)(x + 1)
    const std::uint32_t reducible[] = {2, 0, 1};
    CHECK_FALSE(is_irreducible(reducible, 3));
}

TEST_CASE("field axioms on GF(81)") {
    const auto ctx = FieldCtx::build(validate_params(3, 5, 1));
    CHECK(ctx.has_log_table());
    const auto& g = ctx.g();
    CHECK(ctx.pow(g, 80) == ctx.one());
    CHECK(ctx.pow(g, 40) != ctx.one());
    CHECK(ctx.pow(g, 16) != ctx.one());
    CHECK(ctx.pow(ctx.xi(), 10) == ctx.one());
    CHECK(ctx.pow(ctx.xi(), 5) == ctx.neg(ctx.one()));

    for (std::uint64_t v = 1; v < 81; ++v) {
        const Felem x = ctx.from_encoding(v);
        CHECK(ctx.encode(x) == v);
        CHECK(ctx.mul(x, ctx.inv(x)) == ctx.one());
        CHECK(ctx.g_power(static_cast<std::int64_t>(ctx.dlog(x))) == x);
        CHECK(ctx.frobenius(x) == ctx.pow(x, 3));
        CHECK(ctx.trace(x) == ctx.trace_linear(x.coeffs));
        CHECK(ctx.j_index(x) == mod_floor(-static_cast<std::int64_t>(ctx.dlog(x)), 10));
    }
    CHECK_THROWS_AS(ctx.dlog(ctx.zero()), Error);
    CHECK_THROWS_AS(ctx.inv(ctx.zero()), Error);
}

TEST_CASE("trace is balanced and F_p-linear") {
    const auto ctx = FieldCtx::build(validate_params(7, 5, 1));
    std::vector<int> hist(7, 0);
    for (std::uint64_t v = 0; v < 2401; ++v)
        ++hist[ctx.trace(ctx.from_encoding(v))];
    for (int c : hist)
        CHECK(c == 343);
    const Felem a = ctx.from_encoding(123), b = ctx.from_encoding(2000);
    CHECK(ctx.trace(ctx.add(ctx.scale(a, 3), b)) == (3 * ctx.trace(a) + ctx.trace(b)) % 7);
    CHECK(ctx.trace(ctx.one()) == 4);
}

TEST_CASE("primitive element is deterministic and large fields skip tables") {
    const auto f = validate_params(5, 3, 2);
    const auto a = FieldCtx::build(f);
    const auto b = FieldCtx::build(f, FieldOptions{.log_table_limit = 100});
    CHECK(a.g() == b.g());
    CHECK(a.find_primitive() == a.g());
    CHECK_FALSE(b.has_log_table());
    const Felem x = a.g_power(12345);
    CHECK(a.dlog(x) == 12345);
    CHECK(b.dlog(x) == 12345);
}

TEST_CASE("corrupted copy breaks arithmetic") {
    const auto ctx = FieldCtx::build(validate_params(3, 5, 1));
    const auto bad = ctx.corrupted_for_testing();
    CHECK(bad.g() == ctx.g());
    bool differs = false;
    for (std::uint64_t v = 1; v < 81 && !differs; ++v) {
        const Felem x = ctx.from_encoding(v);
        differs = bad.mul(x, x) != ctx.mul(x, x);
    }
    CHECK(differs);
}
