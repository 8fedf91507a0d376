#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tracecode {

/// Default upper bound on q for commands that enumerate the field.
inline constexpr std::uint64_t kEnumerationQLimit = std::uint64_t{1} << 24;
/// Upper bound on q for closed-form-only evaluation.
inline constexpr std::uint64_t kClosedFormQLimit = std::uint64_t{1} << 40;
/// Fields up to this size get full exponent/logarithm tables.
inline constexpr std::uint64_t kDefaultLogTableLimit = std::uint64_t{1} << 20;

/// Parameters of GF(p^e) with N = 2*ell^m and e = phi(N), where p is a
/// primitive root modulo N. All derived quantities are exact.
struct FieldParams {
    std::int64_t p = 0;
    std::int64_t ell = 0;
    std::int64_t m = 0;
    std::int64_t ell_m1 = 0;  // ell^(m-1)
    std::int64_t ell_m = 0;   // ell^m
    std::int64_t N = 0;       // 2 * ell^m
    std::int64_t e = 0;       // phi(N) = (ell - 1) * ell^(m-1)
    std::int64_t q = 0;       // p^e
    std::int64_t sqrt_q = 0;  // p^(e/2)
    std::int64_t exp_d = 0;   // (q - 1) / N
    std::int64_t c_div = 0;   // (sqrt_q + 1) / N

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Validates (p, ell, m) and derives the field parameters.
///
/// Errors: Errc::not_prime if p or ell is composite; Errc::invalid_parameter for
/// p = 2, ell = 2, ell = p or m < 1; Errc::not_primitive when ord_N(p) != phi(N);
/// Errc::q_limit_exceeded when p^e exceeds `q_limit`.
FieldParams validate_params(std::int64_t p, std::int64_t ell, std::int64_t m,
                            std::uint64_t q_limit = kEnumerationQLimit);

/// Element of GF(p^e) as polynomial-basis coefficients, each in [0, p).
struct Felem {
    std::vector<std::uint32_t> coeffs;

    bool is_zero() const noexcept;
    friend bool operator==(const Felem&, const Felem&) = default;
};

/// Previously computed field data (from the on-disk cache).
struct CachedField {
    std::vector<std::uint32_t> modulus;        // low e coefficients of the monic modulus
    std::vector<std::uint32_t> g;              // primitive element
    std::vector<std::uint64_t> log_table;      // log of the element with encoding v at [v - 1]; may be empty
};

struct FieldOptions {
    std::uint64_t log_table_limit = kDefaultLogTableLimit;
    std::optional<CachedField> cached;
};

/// GF(p^e) realised as F_p[x] / Phi_N(x), with a primitive element g and
/// xi = g^((q-1)/N). Immutable after build; safe for concurrent readers.
class FieldCtx {
public:
    static FieldCtx build(const FieldParams& params, const FieldOptions& options = {});

    const FieldParams& params() const noexcept { return params_; }
    int p() const noexcept { return static_cast<int>(params_.p); }
    int degree() const noexcept { return static_cast<int>(params_.e); }

    /// Low e coefficients of the monic modulus Phi_N(x) mod p.
    std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
    const Felem& g() const noexcept { return g_; }
    const Felem& xi() const noexcept { return xi_; }
    bool has_log_table() const noexcept { return !log_table_.empty(); }

    Felem zero() const;
    Felem one() const;
    /// Image of an integer in the prime subfield.
    Felem from_int(std::int64_t n) const;
    /// Inverse of encode(): v = sum coeffs[i] * p^i.
    Felem from_encoding(std::uint64_t v) const;
    std::uint64_t encode(const Felem& x) const;

    Felem add(const Felem& a, const Felem& b) const;
    Felem sub(const Felem& a, const Felem& b) const;
    Felem neg(const Felem& a) const;
    Felem mul(const Felem& a, const Felem& b) const;
    /// Multiplication by a prime-field scalar.
    Felem scale(const Felem& a, std::int64_t lambda) const;
    Felem inv(const Felem& a) const;
    Felem pow(const Felem& a, std::uint64_t k) const;
    Felem frobenius(const Felem& a) const;

    /// Absolute trace: sum of the e Frobenius conjugates. Throws Errc::internal
    /// if the sum is not a constant polynomial.
    std::uint32_t trace(const Felem& x) const;

    /// Same value as trace(), through the precomputed traces of the basis.
    std::uint32_t trace_linear(std::span<const std::uint32_t> coeffs) const;

    /// Vector t with Tr(b * y) = <t, coeffs(y)> mod p for every y.
    std::vector<std::uint32_t> trace_functional(const Felem& b) const;

    /// Discrete logarithm base g, in [0, q-2]. Throws Errc::domain for 0.
    std::uint64_t dlog(const Felem& b) const;

    /// Least nonnegative residue of -dlog(b) mod N.
    std::int64_t j_index(const Felem& b) const;

    /// First element in ascending encoding order (from v = 2) of order q - 1.
    /// Deterministic; build() stores its result as g().
    Felem find_primitive() const;

    Felem g_power(std::int64_t t) const;
    Felem xi_power(std::int64_t j) const;

    /// Calls fn(t, coeffs(g^t)) for t in [first, last), in increasing t.
    void for_each_power(std::uint64_t first, std::uint64_t last,
                        const std::function<void(std::uint64_t, std::span<const std::uint32_t>)>& fn) const;

    /// Cache payload for this field (log table included when built).
    CachedField to_cache() const;

    /// Copy whose modulus has its constant term perturbed while g and xi keep their
    /// coefficient vectors. Arithmetic on the copy is wrong; used as a negative control.
    FieldCtx corrupted_for_testing() const;

    std::string format(const Felem& x) const;

private:
    FieldCtx() = default;

    void build_tables();
    void compute_trace_basis();
    bool is_primitive(const Felem& x) const;

    FieldParams params_{};
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> q1_primes_;
    Felem g_;
    Felem xi_;
    std::vector<std::uint32_t> trace_basis_;
    std::vector<std::uint32_t> exp_table_;  // encoding of g^t
    std::vector<std::uint32_t> log_table_;  // log of encoding v (slot 0 unused)
};

/// Phi_N(x) mod p as the full list of e + 1 coefficients (constant term first),
/// from the identity Phi_{2 ell^m}(x) = sum_{i < ell} (-1)^i x^(i ell^(m-1)).
std::vector<std::uint32_t> cyclotomic_modulus(const FieldParams& params);

/// Rabin irreducibility test for a monic polynomial (constant term first).
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

} // namespace tracecode
