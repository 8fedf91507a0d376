#pragma once

// The weight-distribution theorem evaluated exactly as published, in exact
// rationals. Used only to cross-check the derived predictions; a published
// formula that disagrees (or is not even an integer) is reported, not fixed.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracecode/gf.hpp"
#include "tracecode/wmap.hpp"

namespace tracecode {

/// Reduced fraction with positive denominator.
class Fraction {
public:
    Fraction(__int128 num = 0, __int128 den = 1);

    std::int64_t num() const;
    std::int64_t den() const;
    bool is_integer() const noexcept { return den_ == 1; }
    std::string to_string() const;

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    friend bool operator==(const Fraction& a, const Fraction& b) = default;

private:
    __int128 num_;
    __int128 den_;
};

struct PrintedPrediction {
    std::string branch_id;
    bool empty = false;
    Fraction n;
    // beta = 0: the two weights with their enumerators.
    std::vector<std::pair<Fraction, Fraction>> weight_counts;
    // beta != 0: w_1 and w_{k+2} for k = 0..p-1.
    std::optional<Fraction> w1;
    std::vector<Fraction> family;
};

PrintedPrediction printed_prediction(const FieldParams& params, std::int64_t alpha, XDescriptor beta_class);

struct PrintedComparison {
    bool agrees = true;
    std::vector<std::string> notes;
};

} // namespace tracecode
