#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cuspidal/rat.hpp"

// Dense univariate polynomial over Rat, coefficients by ascending exponent.
// The zero polynomial is the empty coefficient list; no trailing zeros are
// ever stored, so degree() == coefficient count - 1.

namespace cuspidal {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, int exponent);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of T^k; zero beyond the stored range.
    const Rat& coeff(int k) const;
    std::span<const Rat> coeffs() const { return c_; }

    const Rat& leading() const;
    Rat eval(const Rat& x) const;
    UniPoly derivative() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rat& s, const UniPoly& p);
    friend UniPoly operator-(const UniPoly& p);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "T") const;
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

// Thrown by exact_divide when the division leaves a remainder; carries it so
// a failed divisibility certification can report the witness.
class NotDivisible : public Error {
public:
    NotDivisible(std::string what, UniPoly remainder)
        : Error(std::move(what)), remainder_(std::move(remainder)) {}
    const UniPoly& remainder() const { return remainder_; }

private:
    UniPoly remainder_;
};

/// Quotient u with p = u*q exactly; throws NotDivisible otherwise.
UniPoly exact_divide(const UniPoly& p, const UniPoly& q);

/// Coefficients b_0..b_deg with p(T) = sum b_k (T-c)^k, i.e. b_k = p^(k)(c)/k!.
std::vector<Rat> taylor_shift(const UniPoly& p, const Rat& c);

/// p(T^2).
UniPoly compose_square(const UniPoly& p);

/// p(T + c), expanded in T.
UniPoly shift_argument(const UniPoly& p, const Rat& c);

}  // namespace cuspidal
