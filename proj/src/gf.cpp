#include "tracecode/gf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "tracecode/arith.hpp"

namespace tracecode {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

// a * b reduced modulo the monic polynomial x^e + sum low[i] x^i.
Poly mul_reduce(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<const std::uint32_t> low, std::uint64_t p) {
    const std::size_t e = low.size();
    std::vector<std::uint64_t> acc(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < e; ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t k = 2 * e - 2; k >= e; --k) {
        const std::uint64_t c = acc[k];
        if (c == 0)
            continue;
        // x^k = x^(k-e) * x^e = -x^(k-e) * sum low[i] x^i
        for (std::size_t i = 0; i < e; ++i)
            acc[k - e + i] = (acc[k - e + i] + c * ((p - low[i]) % p)) % p;
    }
    return Poly(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(e));
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

// Remainder of a by b over F_p (b nonzero, trimmed).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c * b[i] % p)) % p);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) modulo the monic polynomial given by its low coefficients.
Poly frobenius_of_x(std::span<const std::uint32_t> low, std::uint32_t p, std::uint64_t k) {
    const std::size_t e = low.size();
    Poly h(e, 0);
    if (e == 1) {
        h[0] = (p - low[0]) % p;
    } else {
        h[1] = 1;
    }
    for (std::uint64_t step = 0; step < k; ++step) {
        Poly base = h;
        Poly r(e, 0);
        r[0] = 1;
        std::uint64_t exp = p;
        while (exp != 0) {
            if (exp & 1)
                r = mul_reduce(r, base, low, p);
            base = mul_reduce(base, base, low, p);
            exp >>= 1;
        }
        h = std::move(r);
    }
    return h;
}

} // namespace

FieldParams validate_params(std::int64_t p, std::int64_t ell, std::int64_t m, std::uint64_t q_limit) {
    if (p < 2 || ell < 2)
        throw Error(Errc::invalid_parameter, "p and ell must be primes >= 3");
    if (m < 1)
        throw Error(Errc::invalid_parameter, "m must be a positive integer");
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw Error(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (!is_prime(static_cast<std::uint64_t>(ell)))
        throw Error(Errc::not_prime, "ell = " + std::to_string(ell) + " is not prime");
    if (p == 2)
        throw Error(Errc::invalid_parameter, "p must be an odd prime");
    if (ell == 2)
        throw Error(Errc::invalid_parameter, "ell must be an odd prime");
    if (ell == p)
        throw Error(Errc::invalid_parameter, "ell must differ from p");

    FieldParams fp;
    fp.p = p;
    fp.ell = ell;
    fp.m = m;
    try {
        fp.ell_m1 = static_cast<std::int64_t>(checked_pow(static_cast<std::uint64_t>(ell),
                                                          static_cast<std::uint64_t>(m - 1)));
        fp.ell_m = checked_mul(fp.ell_m1, ell);
        fp.N = checked_mul(2, fp.ell_m);
        fp.e = checked_mul(fp.ell_m1, ell - 1);
    } catch (const Error&) {
        throw Error(Errc::q_limit_exceeded, "ell^m is too large");
    }

    const auto N = static_cast<std::uint64_t>(fp.N);
    if (multiplicative_order(static_cast<std::uint64_t>(p) % N, N) != static_cast<std::uint64_t>(fp.e)) {
        throw Error(Errc::not_primitive,
                    "p is not a primitive root modulo " + std::to_string(fp.N));
    }

    std::uint64_t q = 0;
    try {
        q = checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(fp.e));
    } catch (const Error&) {
        throw Error(Errc::q_limit_exceeded, "q = p^" + std::to_string(fp.e) + " overflows 64 bits");
    }
    if (q > q_limit) {
        throw Error(Errc::q_limit_exceeded, "q = " + std::to_string(q) + " exceeds the limit " +
                                                std::to_string(q_limit));
    }
    fp.q = static_cast<std::int64_t>(q);
    fp.sqrt_q = static_cast<std::int64_t>(checked_pow(static_cast<std::uint64_t>(p),
                                                      static_cast<std::uint64_t>(fp.e / 2)));
    if (fp.e % 2 != 0 || fp.sqrt_q * fp.sqrt_q != fp.q)
        throw Error(Errc::internal, "e is odd; primitivity should have excluded this");
    fp.exp_d = exact_div(fp.q - 1, fp.N, "(q-1)/N");
    fp.c_div = exact_div(fp.sqrt_q + 1, fp.N, "(sqrt(q)+1)/N");
    if (fp.exp_d % (p - 1) != 0)
        throw Error(Errc::internal, "(p-1) does not divide (q-1)/N");
    return fp;
}

bool Felem::is_zero() const noexcept {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

std::vector<std::uint32_t> cyclotomic_modulus(const FieldParams& fp) {
    const auto p = static_cast<std::uint32_t>(fp.p);
    std::vector<std::uint32_t> full(static_cast<std::size_t>(fp.e) + 1, 0);
    for (std::int64_t i = 0; i < fp.ell; ++i)
        full[static_cast<std::size_t>(i * fp.ell_m1)] = (i % 2 == 0) ? 1 : p - 1;
    return full;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
    if (monic.size() < 2 || monic.back() != 1)
        return false;
    const std::size_t e = monic.size() - 1;
    const auto low = monic.first(e);
    Poly x_poly(e, 0);
    if (e == 1)
        return true;
    x_poly[1] = 1;
    // x^(p^e) = x mod f
    if (frobenius_of_x(low, p, e) != x_poly)
        return false;
    // gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e
    const Poly f(monic.begin(), monic.end());
    for (auto r : prime_divisors(e)) {
        Poly h = frobenius_of_x(low, p, e / r);
        h[1] = (h[1] + p - 1) % p;
        Poly d = poly_gcd(f, h, p);
        if (d.size() != 1)
            return false;
    }
    return true;
}

FieldCtx FieldCtx::build(const FieldParams& params, const FieldOptions& options) {
    FieldCtx ctx;
    ctx.params_ = params;
    const auto full = cyclotomic_modulus(params);
    if (!is_irreducible(full, static_cast<std::uint32_t>(params.p)))
        throw Error(Errc::internal, "Phi_N(x) is reducible mod p; parameters were not validated");
    ctx.modulus_.assign(full.begin(), full.end() - 1);
    ctx.q1_primes_ = prime_divisors(static_cast<std::uint64_t>(params.q - 1));
    ctx.compute_trace_basis();

    const CachedField* cached = nullptr;
    if (options.cached && options.cached->modulus == ctx.modulus_ &&
        options.cached->g.size() == ctx.modulus_.size())
        cached = &*options.cached;

    // The cache only accelerates; a stored g other than the canonical one is ignored.
    ctx.g_ = ctx.find_primitive();
    if (cached != nullptr && cached->g != ctx.g_.coeffs)
        cached = nullptr;
    ctx.xi_ = ctx.pow(ctx.g_, static_cast<std::uint64_t>(params.exp_d));

    if (static_cast<std::uint64_t>(params.q) <= options.log_table_limit) {
        bool loaded = false;
        if (cached != nullptr && cached->log_table.size() == static_cast<std::size_t>(params.q - 1)) {
            const auto q = static_cast<std::size_t>(params.q);
            std::vector<std::uint32_t> exp(q - 1, 0);
            std::vector<std::uint32_t> log(q, 0);
            std::vector<bool> seen(q - 1, false);
            bool ok = true;
            for (std::size_t v = 1; v < q && ok; ++v) {
                const auto t = cached->log_table[v - 1];
                if (t >= q - 1 || seen[t]) {
                    ok = false;
                    break;
                }
                seen[t] = true;
                exp[t] = static_cast<std::uint32_t>(v);
                log[v] = static_cast<std::uint32_t>(t);
            }
            ok = ok && exp[0] == ctx.encode(ctx.one()) && exp.size() > 1 &&
                 exp[1 % exp.size()] == ctx.encode(ctx.g_);
            // Spot-check a spread of entries against direct exponentiation.
            for (std::size_t i = 0; ok && i < 64; ++i) {
                const std::size_t t = (i * 2654435761u) % (q - 1);
                ok = ctx.encode(ctx.pow(ctx.g_, t)) == exp[t];
            }
            if (ok) {
                ctx.exp_table_ = std::move(exp);
                ctx.log_table_ = std::move(log);
                loaded = true;
            }
        }
        if (!loaded)
            ctx.build_tables();
    }

    if (ctx.pow(ctx.xi_, static_cast<std::uint64_t>(params.N)) != ctx.one() ||
        ctx.pow(ctx.xi_, static_cast<std::uint64_t>(params.ell_m)) != ctx.from_int(-1))
        throw Error(Errc::internal, "xi is not a primitive N-th root of unity");
    return ctx;
}

void FieldCtx::compute_trace_basis() {
    trace_basis_.assign(modulus_.size(), 0);
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        Felem b = zero();
        b.coeffs[i] = 1;
        trace_basis_[i] = trace(b);
    }
}

void FieldCtx::build_tables() {
    const auto q = static_cast<std::size_t>(params_.q);
    exp_table_.assign(q - 1, 0);
    log_table_.assign(q, 0);
    Felem x = one();
    for (std::size_t t = 0; t + 1 < q; ++t) {
        const auto v = static_cast<std::uint32_t>(encode(x));
        exp_table_[t] = v;
        log_table_[v] = static_cast<std::uint32_t>(t);
        x = mul(x, g_);
    }
    if (x != one())
        throw Error(Errc::internal, "g^(q-1) != 1 while building tables");
}

Felem FieldCtx::zero() const { return Felem{std::vector<std::uint32_t>(modulus_.size(), 0)}; }

Felem FieldCtx::one() const {
    Felem r = zero();
    r.coeffs[0] = 1;
    return r;
}

Felem FieldCtx::from_int(std::int64_t n) const {
    Felem r = zero();
    r.coeffs[0] = static_cast<std::uint32_t>(mod_floor(n, params_.p));
    return r;
}

Felem FieldCtx::from_encoding(std::uint64_t v) const {
    Felem r = zero();
    const auto p = static_cast<std::uint64_t>(params_.p);
    for (auto& c : r.coeffs) {
        c = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    if (v != 0)
        throw Error(Errc::invalid_parameter, "encoding exceeds the field size");
    return r;
}

std::uint64_t FieldCtx::encode(const Felem& x) const {
    std::uint64_t v = 0;
    for (std::size_t i = x.coeffs.size(); i-- > 0;)
        v = v * static_cast<std::uint64_t>(params_.p) + x.coeffs[i];
    return v;
}

Felem FieldCtx::add(const Felem& a, const Felem& b) const {
    Felem r = a;
    const auto p = static_cast<std::uint32_t>(params_.p);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % p;
    return r;
}

Felem FieldCtx::sub(const Felem& a, const Felem& b) const { return add(a, neg(b)); }

Felem FieldCtx::neg(const Felem& a) const {
    Felem r = a;
    const auto p = static_cast<std::uint32_t>(params_.p);
    for (auto& c : r.coeffs)
        c = (p - c) % p;
    return r;
}

Felem FieldCtx::mul(const Felem& a, const Felem& b) const {
    return Felem{mul_reduce(a.coeffs, b.coeffs, modulus_, static_cast<std::uint64_t>(params_.p))};
}

Felem FieldCtx::scale(const Felem& a, std::int64_t lambda) const {
    const auto l = static_cast<std::uint64_t>(mod_floor(lambda, params_.p));
    const auto p = static_cast<std::uint64_t>(params_.p);
    Felem r = a;
    for (auto& c : r.coeffs)
        c = static_cast<std::uint32_t>(c * l % p);
    return r;
}

Felem FieldCtx::pow(const Felem& a, std::uint64_t k) const {
    Felem r = one();
    Felem base = a;
    while (k != 0) {
        if (k & 1)
            r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

Felem FieldCtx::inv(const Felem& a) const {
    if (a.is_zero())
        throw Error(Errc::domain, "inverse of zero");
    return pow(a, static_cast<std::uint64_t>(params_.q - 2));
}

Felem FieldCtx::frobenius(const Felem& a) const { return pow(a, static_cast<std::uint64_t>(params_.p)); }

std::uint32_t FieldCtx::trace(const Felem& x) const {
    Felem sum = zero();
    Felem conj = x;
    for (std::int64_t i = 0; i < params_.e; ++i) {
        sum = add(sum, conj);
        conj = frobenius(conj);
    }
    for (std::size_t i = 1; i < sum.coeffs.size(); ++i) {
        if (sum.coeffs[i] != 0)
            throw Error(Errc::internal, "trace of " + format(x) + " is not in the prime field");
    }
    return sum.coeffs[0];
}

std::uint32_t FieldCtx::trace_linear(std::span<const std::uint32_t> coeffs) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        acc += std::uint64_t{coeffs[i]} * trace_basis_[i];
    return static_cast<std::uint32_t>(acc % static_cast<std::uint64_t>(params_.p));
}

std::vector<std::uint32_t> FieldCtx::trace_functional(const Felem& b) const {
    std::vector<std::uint32_t> t(modulus_.size(), 0);
    Felem basis = zero();
    for (std::size_t k = 0; k < t.size(); ++k) {
        std::fill(basis.coeffs.begin(), basis.coeffs.end(), 0);
        basis.coeffs[k] = 1;
        t[k] = trace_linear(mul(b, basis).coeffs);
    }
    return t;
}

bool FieldCtx::is_primitive(const Felem& x) const {
    if (x.is_zero())
        return false;
    const auto order = static_cast<std::uint64_t>(params_.q - 1);
    if (pow(x, order) != one())
        return false;
    return std::none_of(q1_primes_.begin(), q1_primes_.end(),
                        [&](std::uint64_t r) { return pow(x, order / r) == one(); });
}

Felem FieldCtx::find_primitive() const {
    const auto q = static_cast<std::uint64_t>(params_.q);
    for (std::uint64_t v = 2; v < q; ++v) {
        Felem x = from_encoding(v);
        if (is_primitive(x))
            return x;
    }
    throw Error(Errc::internal, "no primitive element found; the modulus does not define a field");
}

std::uint64_t FieldCtx::dlog(const Felem& b) const {
    if (b.is_zero())
        throw Error(Errc::domain, "discrete logarithm of zero");
    if (has_log_table())
        return log_table_[encode(b)];

    const auto order = static_cast<std::uint64_t>(params_.q - 1);
    const auto step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(step);
    Felem x = one();
    for (std::uint64_t j = 0; j < step; ++j) {
        baby.emplace(encode(x), j);
        x = mul(x, g_);
    }
    const Felem giant = inv(pow(g_, step));
    Felem gamma = b;
    for (std::uint64_t i = 0; i <= step; ++i) {
        if (auto it = baby.find(encode(gamma)); it != baby.end())
            return (i * step + it->second) % order;
        gamma = mul(gamma, giant);
    }
    throw Error(Errc::internal, "baby-step giant-step failed; g is not primitive");
}

std::int64_t FieldCtx::j_index(const Felem& b) const {
    const auto ind = static_cast<std::int64_t>(dlog(b) % static_cast<std::uint64_t>(params_.N));
    const std::int64_t j = mod_floor(-ind, params_.N);
    if (pow(inv(b), static_cast<std::uint64_t>(params_.exp_d)) != xi_power(j))
        throw Error(Errc::internal, "b^(-(q-1)/N) != xi^j_b");
    return j;
}

Felem FieldCtx::g_power(std::int64_t t) const {
    const std::int64_t r = mod_floor(t, params_.q - 1);
    if (has_log_table())
        return from_encoding(exp_table_[static_cast<std::size_t>(r)]);
    return pow(g_, static_cast<std::uint64_t>(r));
}

Felem FieldCtx::xi_power(std::int64_t j) const {
    return pow(xi_, static_cast<std::uint64_t>(mod_floor(j, params_.N)));
}

void FieldCtx::for_each_power(std::uint64_t first, std::uint64_t last,
                              const std::function<void(std::uint64_t, std::span<const std::uint32_t>)>& fn) const {
    if (first >= last)
        return;
    if (has_log_table()) {
        const auto p = static_cast<std::uint32_t>(params_.p);
        std::vector<std::uint32_t> coeffs(modulus_.size());
        for (std::uint64_t t = first; t < last; ++t) {
            std::uint32_t v = exp_table_[t];
            for (auto& c : coeffs) {
                c = v % p;
                v /= p;
            }
            fn(t, coeffs);
        }
        return;
    }
    Felem x = pow(g_, first);
    for (std::uint64_t t = first; t < last; ++t) {
        fn(t, x.coeffs);
        x = mul(x, g_);
    }
}

CachedField FieldCtx::to_cache() const {
    CachedField c;
    c.modulus = modulus_;
    c.g = g_.coeffs;
    if (has_log_table()) {
        c.log_table.resize(log_table_.size() - 1);
        for (std::size_t v = 1; v < log_table_.size(); ++v)
            c.log_table[v - 1] = log_table_[v];
    }
    return c;
}

FieldCtx FieldCtx::corrupted_for_testing() const {
    FieldCtx bad = *this;
    bad.modulus_[0] = (bad.modulus_[0] + 1) % static_cast<std::uint32_t>(params_.p);
    bad.exp_table_.clear();
    bad.log_table_.clear();
    return bad;
}

std::string FieldCtx::format(const Felem& x) const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        os << (i ? "," : "") << x.coeffs[i];
    os << ']';
    return os.str();
}

} // namespace tracecode
