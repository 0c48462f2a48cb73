#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspidal/rat.hpp"
#include "cuspidal/unipoly.hpp"

// Truncated formal power series: exactly `precision` stored coefficients,
// valid for exponents 0..precision-1. Arithmetic truncates to the minimum
// precision of the operands; asking for a coefficient beyond the stored
// range throws PrecisionExhausted instead of silently inventing zeros.

namespace cuspidal {

class PowSeries {
public:
    explicit PowSeries(std::vector<Rat> coeffs);
    static PowSeries zero(int precision);
    static PowSeries from_poly(const UniPoly& p, int precision);
    static PowSeries monomial(const Rat& c, int exponent, int precision);

    int precision() const { return static_cast<int>(c_.size()); }
    const Rat& coeff(int k) const;

    /// Smallest exponent with nonzero coefficient; nullopt when the series
    /// vanishes up to the stored precision.
    std::optional<int> order() const;

    bool is_zero_to_precision() const { return !order().has_value(); }

    PowSeries truncate(int precision) const;

    /// Division by t^k; the first k coefficients must vanish. Precision
    /// drops by k.
    PowSeries shift_down(int k) const;

    /// Multiplication by t^k at unchanged precision (top coefficients fall
    /// off the end).
    PowSeries shift_up(int k) const;

    PowSeries& operator+=(const PowSeries& o);
    PowSeries& operator-=(const PowSeries& o);
    friend PowSeries operator+(PowSeries a, const PowSeries& b) { return a += b; }
    friend PowSeries operator-(PowSeries a, const PowSeries& b) { return a -= b; }
    friend PowSeries operator*(const PowSeries& a, const PowSeries& b);
    friend PowSeries operator*(const Rat& s, PowSeries p);
    friend PowSeries operator-(PowSeries p);

    PowSeries add_constant(const Rat& c) const;

    friend bool operator==(const PowSeries& a, const PowSeries& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rat> c_;
};

/// r with s*r = 1 mod t^n; needs s(0) != 0 and n <= precision of s.
PowSeries series_reciprocal(const PowSeries& s, int n);

}  // namespace cuspidal
