#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tracecode {

/// An element of Z[zeta_p], p an odd prime, stored in the free basis
/// {1, zeta, ..., zeta^(p-2)}. zeta^(p-1) is rewritten as -(1 + zeta + ... + zeta^(p-2)),
/// so two values are equal iff their coefficient vectors are equal.
///
/// Coefficients are 64-bit and every operation is overflow-checked.
class CycInt {
public:
    /// Zero of Z[zeta_p]. Throws Errc::invalid_parameter unless p is an odd prime.
    explicit CycInt(int p);

    /// Takes coefficients in the standard basis; `coeffs.size()` must be p - 1.
    CycInt(int p, std::vector<std::int64_t> coeffs);

    static CycInt from_integer(int p, std::int64_t n);

    /// sum_t counts[t] * zeta^t for t in [0, p). `counts.size()` must be p.
    static CycInt from_exponent_counts(int p, std::span<const std::int64_t> counts);

    int prime() const noexcept { return p_; }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    CycInt& operator+=(const CycInt& rhs);
    CycInt& operator-=(const CycInt& rhs);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator-(const CycInt& a);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b) = default;

    /// Multiplication by a rational integer.
    CycInt scaled(std::int64_t n) const;

    std::string to_string() const;

private:
    int p_;
    std::vector<std::int64_t> coeffs_;
};

/// zeta_p^k in the standard basis, k reduced mod p.
CycInt zeta_power(int p, std::int64_t k);

/// Image of x under the automorphism zeta -> zeta^a. Requires a not divisible by p.
CycInt galois(std::int64_t a, const CycInt& x);

/// coeffs[0] when every other coefficient vanishes, otherwise nullopt.
std::optional<std::int64_t> as_rational_integer(const CycInt& x);

} // namespace tracecode
