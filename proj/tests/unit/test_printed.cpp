#include "doctest.h"
#include "tracecode/codes.hpp"
#include "tracecode/error.hpp"
#include "tracecode/printed_theorem.hpp"

using namespace tracecode;

namespace {

bool any_note(const PrintedComparison& c, std::string_view needle) {
    for (const auto& n : c.notes) {
        if (n.find(needle) != std::string::npos)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("fractions") {
    CHECK(Fraction(6, -4) == Fraction(-3, 2));
    CHECK((Fraction(1, 3) + Fraction(1, 6)) == Fraction(1, 2));
    CHECK((Fraction(2, 3) * Fraction(3, 2)).is_integer());
    CHECK((Fraction(1) / Fraction(4)).den() == 4);
    CHECK(Fraction(1519, 5).to_string() == "1519/5");
    CHECK_THROWS_AS(Fraction(1, 0), Error);
}

TEST_CASE("printed theorem agrees on the worked examples") {
    const auto f371 = validate_params(3, 7, 1);
    const auto f751 = validate_params(7, 5, 1);
    for (auto [f, alpha, cls] : {std::tuple{f371, 1, XDescriptor{JClass::zero}}, {f751, 2, XDescriptor{JClass::zero}},
                                 {f751, 1, XDescriptor{}}, {f371, 0, XDescriptor{}}}) {
        const auto derived = predict(f, alpha, cls);
        const auto cmp = printed_comparison(f, alpha, cls, derived);
        CHECK_MESSAGE(cmp.agrees, derived.branch_id);
    }
}

TEST_CASE("printed defects are reported, not fixed") {
    const auto f371 = validate_params(3, 7, 1);
    // d.ii.2 length is one more than the defining set
    const XDescriptor j3 = JClass::j3_2;
    const auto derived = predict(f371, 1, j3);
    const auto cmp = printed_comparison(f371, 1, j3, derived);
    CHECK(derived.branch_id == "d.ii.2");
    CHECK(derived.n == 258);
    CHECK_FALSE(cmp.agrees);
    CHECK(any_note(cmp, "length printed 259, derived 258"));

    // with (sqrt(q)+1)/N odd the literal case routing differs
    const auto f351 = validate_params(3, 5, 1);
    const auto d = predict(f351, 1, JClass::zero);
    const auto c = printed_comparison(f351, 1, JClass::zero, d);
    CHECK(d.branch_id == "d.iii.2");
    CHECK(any_note(c, "listed under case d.iii.1"));
    CHECK(any_note(c, "w_1 printed 9, derived 12"));
}
