#include "tracecode/ring_zeta.hpp"

#include <algorithm>
#include <sstream>

#include "tracecode/arith.hpp"

namespace tracecode {

namespace {

void require_odd_prime(int p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw Error(Errc::invalid_parameter, "Z[zeta_p] requires an odd prime p, got " + std::to_string(p));
}

void require_same_ring(const CycInt& a, const CycInt& b) {
    if (a.prime() != b.prime()) {
        throw Error(Errc::invalid_parameter, "mismatched cyclotomic rings: p=" + std::to_string(a.prime()) +
                                                 " vs p=" + std::to_string(b.prime()));
    }
}

// Folds a length-p vector indexed by exponent into the standard basis.
std::vector<std::int64_t> reduce_full(std::vector<std::int64_t> full) {
    const std::int64_t top = full.back();
    full.pop_back();
    if (top != 0) {
        for (auto& c : full)
            c = checked_sub(c, top);
    }
    return full;
}

} // namespace

CycInt::CycInt(int p) : p_(p) {
    require_odd_prime(p);
    coeffs_.assign(static_cast<std::size_t>(p - 1), 0);
}

CycInt::CycInt(int p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    require_odd_prime(p);
    if (coeffs_.size() != static_cast<std::size_t>(p - 1)) {
        throw Error(Errc::invalid_parameter, "CycInt needs " + std::to_string(p - 1) + " coefficients, got " +
                                                 std::to_string(coeffs_.size()));
    }
}

CycInt CycInt::from_integer(int p, std::int64_t n) {
    CycInt r(p);
    r.coeffs_[0] = n;
    return r;
}

CycInt CycInt::from_exponent_counts(int p, std::span<const std::int64_t> counts) {
    require_odd_prime(p);
    if (counts.size() != static_cast<std::size_t>(p))
        throw Error(Errc::invalid_parameter, "exponent counts must have length p");
    return CycInt(p, reduce_full({counts.begin(), counts.end()}));
}

bool CycInt::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
    require_same_ring(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
    require_same_ring(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = checked_sub(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

CycInt operator-(const CycInt& a) {
    CycInt r(a.p_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        r.coeffs_[i] = checked_sub(0, a.coeffs_[i]);
    return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    require_same_ring(a, b);
    const auto p = static_cast<std::size_t>(a.p_);
    // Product modulo x^p - 1, then fold the zeta^(p-1) coefficient.
    std::vector<std::int64_t> full(p, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            auto& slot = full[(i + j) % p];
            slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return CycInt(a.p_, reduce_full(std::move(full)));
}

CycInt CycInt::scaled(std::int64_t n) const {
    CycInt r(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = checked_mul(coeffs_[i], n);
    return r;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        os << (i ? ", " : "") << coeffs_[i];
    os << ')';
    return os.str();
}

CycInt zeta_power(int p, std::int64_t k) {
    require_odd_prime(p);
    std::vector<std::int64_t> full(static_cast<std::size_t>(p), 0);
    full[static_cast<std::size_t>(mod_floor(k, p))] = 1;
    return CycInt(p, reduce_full(std::move(full)));
}

CycInt galois(std::int64_t a, const CycInt& x) {
    const int p = x.prime();
    const std::int64_t am = mod_floor(a, p);
    if (am == 0)
        throw Error(Errc::invalid_parameter, "galois: exponent " + std::to_string(a) + " is divisible by p");
    std::vector<std::int64_t> full(static_cast<std::size_t>(p), 0);
    const auto cs = x.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto& slot = full[static_cast<std::size_t>((am * static_cast<std::int64_t>(i)) % p)];
        slot = checked_add(slot, cs[i]);
    }
    return CycInt(p, reduce_full(std::move(full)));
}

std::optional<std::int64_t> as_rational_integer(const CycInt& x) {
    const auto cs = x.coeffs();
    if (std::any_of(cs.begin() + 1, cs.end(), [](std::int64_t c) { return c != 0; }))
        return std::nullopt;
    return cs[0];
}

} // namespace tracecode
