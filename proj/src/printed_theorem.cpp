#include "tracecode/printed_theorem.hpp"

#include <limits>
#include <map>
#include <numeric>

#include "tracecode/arith.hpp"
#include "tracecode/codes.hpp"

namespace tracecode {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(Errc::overflow, "fraction component exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

} // namespace

Fraction::Fraction(__int128 num, __int128 den) {
    if (den == 0)
        throw Error(Errc::internal, "fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const __int128 g = gcd128(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

std::int64_t Fraction::num() const { return narrow(num_); }
std::int64_t Fraction::den() const { return narrow(den_); }

std::string Fraction::to_string() const {
    std::string s = std::to_string(num());
    if (den_ != 1)
        s += "/" + std::to_string(den());
    return s;
}

Fraction operator+(const Fraction& a, const Fraction& b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
Fraction operator-(const Fraction& a, const Fraction& b) { return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_}; }
Fraction operator*(const Fraction& a, const Fraction& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Fraction operator/(const Fraction& a, const Fraction& b) { return {a.num_ * b.den_, a.den_ * b.num_}; }

PrintedPrediction printed_prediction(const FieldParams& fp, std::int64_t alpha, XDescriptor beta_class) {
    using F = Fraction;
    const F P = fp.p, Q = fp.q, S = fp.sqrt_q, ell = fp.ell, L = fp.ell_m1, Lm = fp.ell_m, N = fp.N;
    const F one = 1, two = 2;

    PrintedPrediction out;
    out.branch_id = theorem_branch(fp, alpha, beta_class);
    const auto& b = out.branch_id;

    // w_{k+2} = (p-1)q/p^2 -/+ (p-1-k) sqrt(q)/p
    auto family = [&](int sign) {
        for (std::int64_t k = 0; k < fp.p; ++k)
            out.family.push_back((P - one) * Q / (P * P) + F(sign) * F(fp.p - 1 - k) * S / P);
    };
    auto two_weight = [&](F w1, F a1, F w2, F a2) {
        out.weight_counts = {{w1, a1}, {w2, a2}};
    };

    if (b == "empty") {
        out.empty = true;
        out.n = 0;
    } else if (b == "a.i") {
        out.n = (Q - one) * (Lm - ell + one) / Lm;
        two_weight((P - one) / (P * Lm) * ((Lm - ell + one) * Q - (ell - one) * S), (Q - one) * (Lm - ell + one) / Lm,
                   (P - one) * (Lm - ell + one) / (P * Lm) * (Q + S), (Q - one) * (ell - one) / Lm);
    } else if (b == "a.ii") {
        out.n = (Q - one) * (L - one) / L;
        two_weight((P - one) * (L - one) / (P * L) * (Q + S), (Q - one) / L,
                   (P - one) / (P * L) * ((L - one) * Q - S), (Q - one) * (L - one) / L);
    } else if (b == "b.i") {
        out.n = (Q - one) / N;
        two_weight((P - one) / (P * N) * (Q - (N - one) * S), (Q - one) / N,
                   (P - one) / (P * N) * (Q + S), (Q - one) * (N - one) / N);
    } else if (b == "b.ii") {
        out.n = (Q - one) * (ell - one) / N;
        two_weight((P - one) * (ell - one) / (P * N) * (Q + S), (Q - one) / N * (N - ell + one),
                   (P - one) / (P * N) * ((ell - one) * Q - (N - ell + one) * S), (Q - one) * (ell - one) / N);
    } else if (b == "b.iii") {
        out.n = (Q - one) / (two * L);
        two_weight((P - one) / (two * P * L) * (Q - (two * L - one) * S), (Q - one) / (two * L),
                   (P - one) / (two * P * L) * (Q + S), (Q - one) / (two * L) * (two * L - one));
    } else if (b == "c.i") {
        // The published length reads ell^n in place of ell^m.
        out.n = Q / P - (S + one) / Lm * (Lm - ell + one);
        out.w1 = one / (P * Lm) * ((ell - one) * Q - (Lm - ell + one) * S);
        family(-1);
    } else if (b == "c.ii") {
        out.n = (Q - P) / P + (S + one) * (ell - one) / Lm;
        out.w1 = (ell - one) / (P * Lm) * (Q + S);
        family(+1);
    } else if (b == "c.iii") {
        out.n = Q / P + (S + one) * (one - L) / L;
        out.w1 = one / (P * L) * Q + (one - L) / (P * L) * S;
        family(-1);
    } else if (b == "c.iv") {
        out.n = Q / P + (S + one) / L - one;
        out.w1 = one / (P * L) * (Q + S);
        family(+1);
    } else if (b == "d.two-weight") {
        out.n = Q / P;
        out.w1 = Q / P;
        two_weight(Q / P, P - one, (P - one) * Q / (P * P), Q - P);
    } else if (b == "d.i.1") {
        out.n = (Q - P) / P + (S + one) * (N - one) / N;
        out.w1 = (N - one) / (P * N) * (Q + S);
        family(+1);
    } else if (b == "d.i.2") {
        out.n = Q / P - (S + one) / N;
        out.w1 = (N - one) / (P * N) * Q - P / (P * N) * S;
        family(-1);
    } else if (b == "d.ii.1") {
        out.n = Q / P - (S + one) * (ell - one) / N;
        out.w1 = (N - ell + one) / (P * N) * Q - (ell - one) / (P * N) * S;
        family(-1);
    } else if (b == "d.ii.2") {
        out.n = Q / P + (S + one) * (N - ell + one) / N;
        out.w1 = (N - ell + one) / (P * N) * (Q + S);
        family(+1);
    } else if (b == "d.iii.1") {
        out.n = (Q - P) / P + (S + one) * (two * L - one) / (two * L);
        out.w1 = (two * L - one) / (two * P * L) * (Q + S);
        family(+1);
    } else if (b == "d.iii.2") {
        out.n = Q / P - (S + one) / (two * L);
        out.w1 = (two * L - one) / (two * P * L) * Q - one / (two * L) * S;
        family(-1);
    } else {
        throw Error(Errc::internal, "printed_prediction: unknown branch " + b);
    }
    if (out.n == F(0))
        out.empty = true;
    return out;
}

PrintedComparison compare_with_printed(const Prediction& derived, const PrintedPrediction& printed) {
    PrintedComparison cmp;
    auto note = [&](std::string s) { cmp.notes.push_back(printed.branch_id + ": " + std::move(s)); };

    if (!(printed.n == Fraction(derived.n)))
        note("length printed " + printed.n.to_string() + ", derived " + std::to_string(derived.n));
    if (printed.empty != derived.empty)
        note(std::string("printed reports ") + (printed.empty ? "an empty" : "a nonempty") + " code");
    if (derived.empty || printed.empty) {
        cmp.agrees = cmp.notes.empty();
        return cmp;
    }

    if (!printed.weight_counts.empty() && derived.enumerators) {
        std::map<std::int64_t, std::int64_t> table;
        bool integral = true;
        for (const auto& [w, a] : printed.weight_counts) {
            if (!w.is_integer() || !a.is_integer()) {
                integral = false;
                note("weight " + w.to_string() + " with count " + a.to_string() + " is not integral");
            } else {
                table[w.num()] += a.num();
            }
        }
        if (integral && table != *derived.enumerators) {
            std::string printed_s, derived_s;
            for (const auto& [w, a] : table)
                printed_s += " " + std::to_string(w) + ":" + std::to_string(a);
            for (const auto& [w, a] : *derived.enumerators)
                derived_s += " " + std::to_string(w) + ":" + std::to_string(a);
            note("enumerator printed {" + printed_s + " }, derived {" + derived_s + " }");
        }
    }
    if (printed.w1 && derived.gamma_weight && !(*printed.w1 == Fraction(*derived.gamma_weight)))
        note("w_1 printed " + printed.w1->to_string() + ", derived " + std::to_string(*derived.gamma_weight));
    if (!printed.family.empty() && printed.family.size() == derived.family.size()) {
        std::string ks;
        for (std::size_t k = 0; k < printed.family.size(); ++k) {
            if (!(printed.family[k] == Fraction(derived.family[k])))
                ks += (ks.empty() ? "" : ",") + std::to_string(k);
        }
        if (!ks.empty())
            note("w_{k+2} differs for k in {" + ks + "}");
    }
    cmp.agrees = cmp.notes.empty();
    return cmp;
}

PrintedComparison printed_comparison(const FieldParams& fp, std::int64_t alpha, XDescriptor beta_class,
                                     const Prediction& derived) {
    const auto effective = effective_descriptor(fp, beta_class);
    auto cmp = compare_with_printed(derived, printed_prediction(fp, alpha, effective));
    const auto literal = theorem_branch(fp, alpha, beta_class);
    if (literal != derived.branch_id) {
        cmp.notes.insert(cmp.notes.begin(), "class " + describe_string(beta_class) + " is listed under case " + literal +
                                                "; with the sign of the sqrt(q) term restored it falls under case " +
                                                derived.branch_id);
        cmp.agrees = false;
    }
    return cmp;
}

} // namespace tracecode
