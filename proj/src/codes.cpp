#include "tracecode/codes.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "tracecode/arith.hpp"

namespace tracecode {

namespace {

bool in(XDescriptor x, std::initializer_list<JClass> set) {
    return x && std::find(set.begin(), set.end(), *x) != set.end();
}

std::vector<std::uint32_t> xi_trace_table(const FieldCtx& ctx) {
    std::vector<std::uint32_t> tr(static_cast<std::size_t>(ctx.params().N));
    Felem x = ctx.one();
    for (auto& t : tr) {
        t = ctx.trace_linear(x.coeffs);
        x = ctx.mul(x, ctx.xi());
    }
    return tr;
}

struct WorkerResult {
    std::vector<std::int64_t> hist;  // indexed by weight, 0..n
};

// Weights of c_gamma for gamma with encodings in [first, last). Consecutive
// encodings differ by unit steps in an odometer, and every digit step
// (including a wrap from p-1 to 0) adds the corresponding column mod p.
WorkerResult enumerate_range(const std::vector<std::vector<std::uint16_t>>& cols, std::uint32_t p,
                             std::uint64_t first, std::uint64_t last, std::size_t n) {
    WorkerResult out;
    out.hist.assign(n + 1, 0);
    const std::size_t e = cols.size();
    std::vector<std::uint32_t> digits(e, 0);
    std::uint64_t v = first;
    for (auto& d : digits) {
        d = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    std::vector<std::uint16_t> word(n, 0);
    for (std::size_t k = 0; k < e; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            word[i] = static_cast<std::uint16_t>((word[i] + std::uint32_t{digits[k]} * cols[k][i]) % p);
    }
    for (std::uint64_t g = first; g < last; ++g) {
        std::size_t weight = 0;
        for (std::size_t i = 0; i < n; ++i)
            weight += word[i] != 0;
        ++out.hist[weight];

        for (std::size_t k = 0; k < e; ++k) {
            const auto& col = cols[k];
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t s = std::uint32_t{word[i]} + col[i];
                word[i] = static_cast<std::uint16_t>(s >= p ? s - p : s);
            }
            if (++digits[k] < p)
                break;
            digits[k] = 0;
        }
    }
    return out;
}

} // namespace

DefiningSet defining_set(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta) {
    const auto& fp = ctx.params();
    const auto p = static_cast<std::uint64_t>(fp.p);
    const auto N = static_cast<std::uint64_t>(fp.N);
    const auto target = static_cast<std::uint64_t>(mod_floor(alpha, fp.p));
    const auto tr_xi = xi_trace_table(ctx);
    const auto fb = ctx.trace_functional(beta);
    DefiningSet D;
    ctx.for_each_power(0, static_cast<std::uint64_t>(fp.q - 1), [&](std::uint64_t t, std::span<const std::uint32_t> x) {
        std::uint64_t acc = tr_xi[t % N];
        for (std::size_t k = 0; k < x.size(); ++k)
            acc += std::uint64_t{fb[k]} * x[k];
        if (acc % p == target) {
            D.exponents.push_back(t);
            D.elements.push_back(Felem{{x.begin(), x.end()}});
        }
    });
    return D;
}

std::int64_t code_length_closed(const FieldParams& fp, std::int64_t alpha, XDescriptor beta_class) {
    return exact_div(fp.q - 1 + w_closed(fp, alpha, beta_class), fp.p, "length (q-1+w(alpha,beta))/p");
}

std::vector<std::uint32_t> codeword(const FieldCtx& ctx, const DefiningSet& D, const Felem& gamma) {
    std::vector<std::uint32_t> c;
    c.reserve(D.size());
    for (const auto& d : D.elements)
        c.push_back(ctx.trace_linear(ctx.mul(d, gamma).coeffs));
    return c;
}

std::int64_t weight_closed(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, const Felem& gamma) {
    if (gamma.is_zero())
        throw Error(Errc::domain, "weight_closed requires gamma != 0");
    const auto& fp = ctx.params();
    const WTable table(fp, alpha);
    std::int64_t sum = 0;
    for (std::int64_t z = 1; z < fp.p; ++z)
        sum = checked_add(sum, table.at(describe(ctx, ctx.add(beta, ctx.scale(gamma, z)))));
    const std::int64_t wb = table.at(describe(ctx, beta));
    const std::int64_t num = checked_sub(checked_add(checked_mul(fp.p - 1, fp.q), checked_mul(fp.p - 1, wb)), sum);
    return exact_div(num, fp.p * fp.p, "weight ((p-1)q + (p-1)w - sum w)/p^2");
}

std::int64_t generator_rank(const FieldCtx& ctx, const DefiningSet& D) {
    const auto p = static_cast<std::uint64_t>(ctx.p());
    const auto e = static_cast<std::size_t>(ctx.degree());
    std::vector<std::vector<std::uint32_t>> basis;  // basis[r] has pivot at pivots[r], normalised to 1
    std::vector<std::size_t> pivots;
    for (const auto& d : D.elements) {
        auto v = ctx.trace_functional(d);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const std::uint64_t c = v[pivots[r]];
            if (c == 0)
                continue;
            for (std::size_t k = 0; k < e; ++k)
                v[k] = static_cast<std::uint32_t>((v[k] + (p - c) * basis[r][k]) % p);
        }
        const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
        if (it == v.end())
            continue;
        const std::uint64_t inv = pow_mod(*it, p - 2, p);
        for (auto& c : v)
            c = static_cast<std::uint32_t>(c * inv % p);
        pivots.push_back(static_cast<std::size_t>(it - v.begin()));
        basis.push_back(std::move(v));
        if (basis.size() == e)
            break;
    }
    return static_cast<std::int64_t>(basis.size());
}

std::int64_t WeightDistribution::total() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : entries)
        s += c;
    return s;
}

std::int64_t WeightDistribution::weighted_total() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : entries)
        s = checked_add(s, checked_mul(w, c));
    return s;
}

WeightDistribution weight_distribution_brute(const FieldCtx& ctx, const DefiningSet& D, unsigned threads) {
    const auto& fp = ctx.params();
    const auto q = static_cast<std::uint64_t>(fp.q);
    const auto p = static_cast<std::uint32_t>(fp.p);
    const std::size_t n = D.size();
    WeightDistribution dist;
    dist.n = static_cast<std::int64_t>(n);
    if (n == 0) {
        dist.kernel_size = fp.q;
        dist.k = 0;
        return dist;
    }
    if (p > 0xFFFF)
        throw Error(Errc::invalid_parameter, "brute enumeration supports p < 65536");

    std::vector<std::vector<std::uint16_t>> cols(static_cast<std::size_t>(fp.e), std::vector<std::uint16_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = ctx.trace_functional(D.elements[i]);
        for (std::size_t k = 0; k < t.size(); ++k)
            cols[k][i] = static_cast<std::uint16_t>(t[k]);
    }

    const std::uint64_t count = q - 1;
    const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(threads == 0 ? 1 : threads, 1, count));
    std::vector<WorkerResult> results(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t first = 1 + w * chunk;
        const std::uint64_t last = std::min<std::uint64_t>(q, first + chunk);
        if (first >= last)
            continue;
        if (workers == 1) {
            results[w] = enumerate_range(cols, p, first, last, n);
        } else {
            pool.emplace_back([&, w, first, last] { results[w] = enumerate_range(cols, p, first, last, n); });
        }
    }
    for (auto& t : pool)
        t.join();

    std::vector<std::int64_t> hist(n + 1, 0);
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.hist.size(); ++i)
            hist[i] += r.hist[i];
    }
    for (std::size_t wgt = 1; wgt <= n; ++wgt) {
        if (hist[wgt] != 0)
            dist.entries.emplace(static_cast<std::int64_t>(wgt), hist[wgt]);
    }
    dist.kernel_size = 1 + hist[0];
    std::int64_t s = 0;
    std::int64_t kernel = dist.kernel_size;
    while (kernel % fp.p == 0) {
        kernel /= fp.p;
        ++s;
    }
    if (kernel != 1)
        throw Error(Errc::internal, "kernel of gamma -> c_gamma has size " + std::to_string(dist.kernel_size) +
                                        ", not a power of p");
    dist.k = fp.e - s;
    return dist;
}

WeightDistribution weight_distribution_brute(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta,
                                             unsigned threads) {
    return weight_distribution_brute(ctx, defining_set(ctx, alpha, beta), threads);
}

std::string theorem_branch(const FieldParams& fp, std::int64_t alpha, XDescriptor beta_class) {
    const AValues av = a_values(fp, alpha);
    const bool ell_is_one = fp.ell % fp.p == 1;
    if (!beta_class) {
        switch (av.config) {
        case AConfig::alpha_zero: return ell_is_one ? "a.i" : "a.ii";
        case AConfig::all_nonzero: return "empty";
        case AConfig::a1_zero:
        case AConfig::a2_zero: return "b.i";
        case AConfig::a3_zero:
        case AConfig::a4_zero: return "b.ii";
        default: return "b.iii";
        }
    }
    const auto x = beta_class;
    using enum JClass;
    switch (av.config) {
    case AConfig::alpha_zero:
        if (ell_is_one)
            return in(x, {j1_2, j3_2, j1_3, j3_3}) ? "c.i" : "c.ii";
        return in(x, {zero, ell_m, j1_2, j3_2, j1_3, j3_3}) ? "c.iii" : "c.iv";
    case AConfig::all_nonzero: return "d.two-weight";
    case AConfig::a1_zero: return in(x, {zero}) ? "d.i.1" : "d.i.2";
    case AConfig::a2_zero: return in(x, {ell_m}) ? "d.i.1" : "d.i.2";
    case AConfig::a3_zero: return in(x, {j1_2, j3_2}) ? "d.ii.2" : "d.ii.1";
    case AConfig::a4_zero: return in(x, {j1_3, j3_3}) ? "d.ii.2" : "d.ii.1";
    case AConfig::a1_a3_zero: return in(x, {zero, j1_2, j3_2}) ? "d.iii.1" : "d.iii.2";
    case AConfig::a2_a4_zero: return in(x, {ell_m, j1_3, j3_3}) ? "d.iii.1" : "d.iii.2";
    }
    throw Error(Errc::internal, "theorem_branch: unreachable");
}

Prediction predict(const FieldParams& fp, std::int64_t alpha, XDescriptor beta_class) {
    const std::int64_t p = fp.p, q = fp.q, p2 = fp.p * fp.p;
    const WTable table(fp, alpha);
    const std::int64_t wb = table.at(beta_class);
    const std::int64_t w0 = table.at(std::nullopt);

    Prediction pr;
    pr.branch_id = theorem_branch(fp, alpha, effective_descriptor(fp, beta_class));
    pr.n = exact_div(q - 1 + wb, p, "length (q-1+w(alpha,beta))/p");
    if (pr.n == 0) {
        pr.empty = true;
        if (!beta_class)
            pr.enumerators.emplace();
        return pr;
    }
    pr.k = fp.e;

    std::vector<std::pair<JClass, std::int64_t>> populated;  // class, #members
    for (auto c : kAllJClasses) {
        const auto size = static_cast<std::int64_t>(class_members(fp.ell, fp.m, c).size());
        if (size > 0)
            populated.emplace_back(c, size);
    }

    if (!beta_class) {
        std::map<std::int64_t, std::int64_t> enumerators;
        for (const auto& [c, size] : populated) {
            const std::int64_t num = checked_mul(p - 1, checked_sub(checked_add(q, w0), table.at(c)));
            enumerators[exact_div(num, p2, "weight (p-1)(q + w(alpha,0) - w(alpha,gamma))/p^2")] +=
                checked_mul(fp.exp_d, size);
        }
        for (const auto& [w, count] : enumerators)
            pr.weights.push_back(w);
        pr.enumerators = std::move(enumerators);
        return pr;
    }

    // gamma in {-z^{-1} beta}: the sum over z contains w(alpha,0) once and w(alpha,beta) p-2 times.
    pr.gamma_weight = exact_div(checked_add(checked_mul(p - 1, q), wb - w0), p2, "weight of c_gamma, gamma in Gamma");

    std::optional<std::int64_t> other_formal;
    std::optional<std::int64_t> other_attained;
    for (auto c : kAllJClasses) {
        const std::int64_t v = table.at(c);
        if (v == wb)
            continue;
        if (other_formal && *other_formal != v)
            throw Error(Errc::internal, "w(alpha, x) takes more than two values on F_q^*");
        other_formal = v;
        const bool attained = std::any_of(populated.begin(), populated.end(),
                                          [&](const auto& pc) { return pc.first == c; });
        if (attained)
            other_attained = v;
    }
    for (std::int64_t k = 0; k < p; ++k) {
        const std::int64_t c = p - 1 - k;
        const std::int64_t diff = other_formal ? wb - *other_formal : 0;
        pr.family.push_back(
            exact_div(checked_add(checked_mul(p - 1, q), checked_mul(c, diff)), p2, "weight w_{k+2}"));
    }

    std::set<std::int64_t> weights{*pr.gamma_weight};
    if (other_attained) {
        weights.insert(pr.family.begin(), pr.family.end());
    } else {
        weights.insert(exact_div(checked_mul(p - 1, q), p2, "weight (p-1)q/p^2"));
    }
    pr.weights.assign(weights.begin(), weights.end());

    if (a_values(fp, alpha).config == AConfig::all_nonzero) {
        std::map<std::int64_t, std::int64_t> enumerators;
        enumerators[*pr.gamma_weight] += p - 1;
        enumerators[exact_div(checked_mul(p - 1, q), p2, "weight (p-1)q/p^2")] += q - p;
        pr.enumerators = std::move(enumerators);
    }
    return pr;
}

bool CodeChecks::all_pass() const {
    return length_match && weights_subset && enumerators_match.value_or(true) && injective && sum_identities &&
           weight_count_bound && length_integrality;
}

CodeChecks compare_distribution(const FieldParams& fp, const WeightDistribution& dist, const Prediction& pr,
                                std::int64_t w_alpha_beta) {
    CodeChecks c;
    c.length_match = dist.n == pr.n;
    c.weights_subset = std::all_of(dist.entries.begin(), dist.entries.end(), [&](const auto& wc) {
        return std::binary_search(pr.weights.begin(), pr.weights.end(), wc.first);
    });
    if (pr.enumerators)
        c.enumerators_match = *pr.enumerators == dist.entries;
    c.injective = dist.kernel_size == 1 && dist.k == fp.e;
    c.sum_identities = dist.total() == fp.q - 1 &&
                       checked_mul(dist.weighted_total(), fp.p) == checked_mul(checked_mul(dist.n, fp.q), fp.p - 1);
    c.weight_count_bound = static_cast<std::int64_t>(dist.entries.size()) <= fp.p + 1;
    c.length_integrality = (fp.q - 1 + w_alpha_beta) % fp.p == 0;
    return c;
}

CodeVerification verify_code(const FieldCtx& ctx, std::int64_t alpha, const Felem& beta, unsigned threads) {
    const auto& fp = ctx.params();
    CodeVerification v;
    v.alpha = mod_floor(alpha, fp.p);
    v.beta_class = describe(ctx, beta);
    if (!beta.is_zero())
        v.j_beta = ctx.j_index(beta);
    v.D = defining_set(ctx, v.alpha, beta);
    v.dist = weight_distribution_brute(ctx, v.D, threads);
    v.prediction = predict(fp, v.alpha, v.beta_class);
    v.printed = printed_comparison(fp, v.alpha, v.beta_class, v.prediction);
    v.checks = compare_distribution(fp, v.dist, v.prediction, w_closed(fp, v.alpha, v.beta_class));
    v.generator_rank = generator_rank(ctx, v.D);
    if (!v.D.empty())
        v.checks.injective = v.checks.injective && v.generator_rank == fp.e;
    return v;
}

} // namespace tracecode
