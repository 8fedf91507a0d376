#include <algorithm>
#include <set>

#include "doctest.h"
#include "tracecode/codes.hpp"
#include "tracecode/error.hpp"

using namespace tracecode;

using Dist = std::map<std::int64_t, std::int64_t>;

TEST_CASE("defining sets and lengths") {
    const auto c371 = FieldCtx::build(validate_params(3, 7, 1));
    const auto c751 = FieldCtx::build(validate_params(7, 5, 1));
    CHECK(defining_set(c371, 0, c371.zero()).size() == 104);
    CHECK(defining_set(c751, 0, c751.zero()).empty());
    CHECK(defining_set(c751, 1, c751.zero()).size() == 960);

    CHECK(code_length_closed(c371.params(), 1, JClass::zero) == 231);
    CHECK(code_length_closed(c751.params(), 1, JClass::zero) == 323);
    CHECK(code_length_closed(c751.params(), 2, JClass::zero) == 343);

    const auto D = defining_set(c371, 1, c371.one());
    const auto cw = codeword(c371, D, c371.zero());
    CHECK(std::all_of(cw.begin(), cw.end(), [](auto v) { return v == 0; }));
    CHECK(generator_rank(c371, D) == 6);
}

TEST_CASE("weight from w-values matches the codeword") {
    const auto ctx = FieldCtx::build(validate_params(7, 5, 1));
    const Felem beta = ctx.one();
    const auto D = defining_set(ctx, 2, beta);
    for (std::uint64_t v = 1; v < 2401; v += 97) {
        const Felem gamma = ctx.from_encoding(v);
        const auto cw = codeword(ctx, D, gamma);
        const auto wt = std::count_if(cw.begin(), cw.end(), [](auto x) { return x != 0; });
        CHECK(weight_closed(ctx, 2, beta, gamma) == wt);
    }
    // a gamma outside {-z^-1 beta}: every w-term is 1
    CHECK(weight_closed(ctx, 2, beta, ctx.g()) == 294);
}

TEST_CASE("golden distributions") {
    const auto c371 = FieldCtx::build(validate_params(3, 7, 1));
    const auto c751 = FieldCtx::build(validate_params(7, 5, 1));

    const auto d35 = weight_distribution_brute(c371, 1, c371.one());
    CHECK(d35.entries == Dist{{135, 2}, {144, 132}, {153, 360}, {162, 234}});
    CHECK(d35.n == 231);
    CHECK(d35.k == 6);

    const auto d36 = weight_distribution_brute(c751, 1, c751.one(), 3);
    CHECK(d36.entries == Dist{{203, 6}, {259, 96}, {266, 420}, {273, 432}, {280, 924}, {287, 456}, {294, 66}});
    CHECK(d36.n == 323);
    CHECK(d36.k == 4);

    const auto d38 = weight_distribution_brute(c751, 1, c751.zero(), 2);
    CHECK(d38.entries == Dist{{798, 960}, {840, 1440}});
    CHECK(d38.total() == 2400);
    CHECK(d38.weighted_total() == 960 * 2401 * 6 / 7);
}

TEST_CASE("worker count does not change the distribution") {
    const auto ctx = FieldCtx::build(validate_params(3, 7, 1));
    const auto D = defining_set(ctx, 0, ctx.zero());
    const auto a = weight_distribution_brute(ctx, D, 1);
    for (unsigned t : {2u, 3u, 7u, 64u}) {
        const auto b = weight_distribution_brute(ctx, D, t);
        CHECK(a.entries == b.entries);
        CHECK(a.k == b.k);
    }
}

TEST_CASE("predictions") {
    const auto f371 = validate_params(3, 7, 1);
    const auto a = predict(f371, 0, std::nullopt);
    CHECK(a.n == 104);
    CHECK(a.weights == std::vector<std::int64_t>{54, 72});
    REQUIRE(a.enumerators);
    CHECK(*a.enumerators == Dist{{54, 104}, {72, 624}});

    const auto b = predict(f371, 1, JClass::zero);
    CHECK(b.n == 231);
    CHECK(b.weights == std::vector<std::int64_t>{135, 144, 153, 162});

    const auto c = predict(validate_params(5, 3, 2), 0, std::nullopt);
    CHECK(c.n == 10416);
    CHECK(c.k == 6);
    REQUIRE(c.enumerators);
    CHECK(*c.enumerators == Dist{{8300, 10416}, {8400, 5208}});

    const auto empty = predict(validate_params(7, 5, 1), 0, std::nullopt);
    CHECK(empty.empty);
    CHECK(empty.n == 0);
}

TEST_CASE("verify_code") {
    const auto ctx = FieldCtx::build(validate_params(7, 5, 1));
    const auto v37 = verify_code(ctx, 2, ctx.one());
    CHECK(v37.checks.all_pass());
    CHECK(v37.dist.entries == Dist{{294, 2394}, {343, 6}});

    const auto v36 = verify_code(ctx, 1, ctx.one(), 2);
    CHECK(v36.checks.all_pass());
    const std::set<std::int64_t> predicted(v36.prediction.weights.begin(), v36.prediction.weights.end());
    CHECK(predicted.count(252) == 1);
    CHECK(v36.dist.entries.count(252) == 0);

    const auto v0 = verify_code(ctx, 0, ctx.zero());
    CHECK(v0.D.empty());
    CHECK(v0.prediction.empty);
}
