#include "tracecode/dual.hpp"

#include <unordered_map>

#include "tracecode/arith.hpp"

namespace tracecode {

std::string_view to_string(DualDistance d) { return d == DualDistance::two ? "2" : ">=3"; }

std::int64_t y_count_brute(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta) {
    const auto& fp = ctx.params();
    const auto p = static_cast<std::uint64_t>(fp.p);
    const auto N = static_cast<std::uint64_t>(fp.N);
    const auto target = static_cast<std::uint64_t>(mod_floor(alpha, fp.p));
    std::vector<std::uint32_t> tr_xi(N);
    Felem x = ctx.one();
    for (auto& t : tr_xi) {
        t = ctx.trace_linear(x.coeffs);
        x = ctx.mul(x, ctx.xi());
    }
    const auto fb = ctx.trace_functional(beta);
    std::int64_t count = 0;
    ctx.for_each_power(0, static_cast<std::uint64_t>(fp.q - 1), [&](std::uint64_t t, std::span<const std::uint32_t> c) {
        if (tr_xi[t % N] != target)
            return;
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
            acc += std::uint64_t{fb[k]} * c[k];
        count += acc % p == 0;
    });
    return count;
}

std::pair<std::int64_t, std::int64_t> y_count_formula(const FieldParams& fp, std::int64_t alpha,
                                                      XDescriptor beta_class) {
    const WTable table(fp, alpha);
    const std::int64_t num = checked_add(checked_add(table.at(std::nullopt), checked_mul(fp.p - 1, table.at(beta_class))),
                                         fp.q - fp.p);
    return {num, fp.p * fp.p};
}

std::int64_t y_count_closed(const FieldParams& fp, std::int64_t alpha, XDescriptor beta_class) {
    if (!beta_class)
        throw Error(Errc::domain, "the closed count of Y holds only for beta != 0");
    const auto [num, den] = y_count_formula(fp, alpha, beta_class);
    return exact_div(num, den, "#Y = (w(alpha,0) + (p-1)w(alpha,beta) + q - p)/p^2");
}

namespace {

// Every gamma in F_q, including 0, against c_i Tr(d_i gamma) + c_j Tr(d_j gamma).
bool annihilates_all(const FieldCtx& ctx, const DualWitness& w) {
    const auto p = static_cast<std::uint64_t>(ctx.p());
    const auto ti = ctx.trace_functional(w.d_i);
    const auto tj = ctx.trace_functional(w.d_j);
    const auto ci = static_cast<std::uint64_t>(mod_floor(w.c_i, ctx.p()));
    const auto cj = static_cast<std::uint64_t>(mod_floor(w.c_j, ctx.p()));
    bool ok = true;
    ctx.for_each_power(0, static_cast<std::uint64_t>(ctx.params().q - 1),
                       [&](std::uint64_t, std::span<const std::uint32_t> g) {
                           std::uint64_t a = 0, b = 0;
                           for (std::size_t k = 0; k < g.size(); ++k) {
                               a += std::uint64_t{ti[k]} * g[k];
                               b += std::uint64_t{tj[k]} * g[k];
                           }
                           ok = ok && (ci * (a % p) + cj * (b % p)) % p == 0;
                       });
    return ok;
}

} // namespace

DualFlag dual_min_distance_flag(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, const DefiningSet& D) {
    (void)alpha;
    if (D.empty())
        throw Error(Errc::domain, "dual distance of an empty code");
    const auto fb = ctx.trace_functional(beta);
    const auto p = static_cast<std::uint64_t>(ctx.p());
    std::unordered_map<std::uint64_t, std::size_t> position;
    for (std::size_t i = 0; i < D.size(); ++i)
        position.emplace(ctx.encode(D.elements[i]), i);

    // Y = {x in D : Tr(beta x) = 0} is closed under negation, and x, -x in D give
    // the dual word e_x + e_{-x}.
    DualFlag flag;
    for (std::size_t i = 0; i < D.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < fb.size(); ++k)
            acc += std::uint64_t{fb[k]} * D.elements[i].coeffs[k];
        if (acc % p != 0)
            continue;
        const Felem minus = ctx.neg(D.elements[i]);
        const auto it = position.find(ctx.encode(minus));
        if (it == position.end())
            throw Error(Errc::internal, "negation of " + ctx.format(D.elements[i]) + " is not in D");
        DualWitness w{i, it->second, 1, 1, D.elements[i], minus};
        if (!ctx.add(w.d_i, w.d_j).is_zero() || !annihilates_all(ctx, w))
            throw Error(Errc::internal, "weight-2 dual witness does not annihilate the code");
        flag.distance = DualDistance::two;
        flag.witness = std::move(w);
        break;
    }
    return flag;
}

bool sphere_packing_optimal(std::int64_t n, std::int64_t k_dual, std::int64_t p) {
    const auto bound = checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(n - k_dual));
    return static_cast<std::uint64_t>(checked_add(1, checked_mul(n, p - 1))) > bound;
}

SecretSharing secret_sharing_check(const std::map<std::int64_t, std::int64_t>& distribution, std::int64_t p) {
    if (distribution.empty())
        throw Error(Errc::domain, "secret-sharing ratio of an empty distribution");
    SecretSharing s;
    s.wt_min = distribution.begin()->first;
    s.wt_max = distribution.rbegin()->first;
    s.ok = checked_mul(p, s.wt_min) > checked_mul(p - 1, s.wt_max);
    return s;
}

namespace {

void finish(DualSummary& s, const FieldParams& fp, std::int64_t alpha, bool beta_zero) {
    if (s.distance == DualDistance::two) {
        s.sphere_packing_optimal = sphere_packing_optimal(s.n, s.k_dual, fp.p);
        s.paper_claim_mismatch = mod_floor(alpha, fp.p) == 0 && beta_zero && !*s.sphere_packing_optimal;
    }
}

} // namespace

DualSummary summarize_dual(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, const DefiningSet& D,
                           std::int64_t k) {
    DualSummary s;
    s.n = static_cast<std::int64_t>(D.size());
    s.k_dual = s.n - k;
    s.y_count = y_count_brute(ctx, alpha, beta);
    auto flag = dual_min_distance_flag(ctx, alpha, beta, D);
    if ((flag.distance == DualDistance::two) != (s.y_count > 0))
        throw Error(Errc::internal, "dual distance disagrees with #Y");
    s.distance = flag.distance;
    s.witness = std::move(flag.witness);
    finish(s, ctx.params(), alpha, beta.is_zero());
    return s;
}

DualSummary summarize_dual_closed(const FieldParams& fp, std::int64_t alpha, XDescriptor beta_class) {
    DualSummary s;
    s.n = code_length_closed(fp, alpha, beta_class);
    if (s.n == 0)
        throw Error(Errc::domain, "dual distance of an empty code");
    s.k_dual = s.n - fp.e;
    s.y_count = beta_class ? y_count_closed(fp, alpha, beta_class) : s.n;
    s.distance = s.y_count > 0 ? DualDistance::two : DualDistance::at_least_three;
    finish(s, fp, alpha, !beta_class);
    return s;
}

} // namespace tracecode
