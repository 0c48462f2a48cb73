#pragma once

#include <string>
#include <vector>

#include "cuspidal/rat.hpp"
#include "cuspidal/unipoly.hpp"

// Homogeneous binary form of fixed degree d in (s, t): d+1 coefficients,
// coeff(i) multiplying s^i t^(d-i). The zero form keeps its degree.

namespace cuspidal {

class BinForm {
public:
    explicit BinForm(int degree);
    explicit BinForm(std::vector<Rat> coeffs);

    /// sum p_i s^i t^(degree-i); needs deg p <= degree.
    static BinForm homogenize(const UniPoly& p, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const;

    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& s, const Rat& t) const;

    /// Restriction to the affine chart t = 1 (coefficients as a polynomial
    /// in s).
    UniPoly dehomogenize() const;

    BinForm& operator+=(const BinForm& o);
    friend BinForm operator+(BinForm a, const BinForm& b) { return a += b; }
    friend BinForm operator-(const BinForm& a, const BinForm& b);
    friend BinForm operator*(const BinForm& a, const BinForm& b);
    friend BinForm operator*(const Rat& s, BinForm f);

    friend bool operator==(const BinForm& a, const BinForm& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    std::vector<Rat> c_;
};

BinForm pow(const BinForm& base, unsigned exponent);

}  // namespace cuspidal
