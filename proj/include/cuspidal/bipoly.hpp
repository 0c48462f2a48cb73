#pragma once

#include <map>
#include <string>
#include <utility>

#include "cuspidal/rat.hpp"

// Sparse affine bivariate polynomial in X, Y: map (i, j) -> coefficient of
// X^i Y^j with no zero entries stored.

namespace cuspidal {

class BiPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Rat>;

    BiPoly() = default;

    static BiPoly monomial(const Rat& c, int i, int j);
    static BiPoly constant(const Rat& c) { return monomial(c, 0, 0); }

    bool is_zero() const { return t_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    std::size_t term_count() const { return t_.size(); }

    Rat coeff(int i, int j) const;
    const TermMap& terms() const { return t_; }

    void add_term(const Rat& c, int i, int j);

    Rat eval(const Rat& x, const Rat& y) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rat& s, const BiPoly& p);
    friend BiPoly operator-(const BiPoly& p);

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

    /// p(px(X,Y), py(X,Y)).
    BiPoly compose(const BiPoly& px, const BiPoly& py) const;

    /// Swap the variables: p(Y, X).
    BiPoly swap_variables() const;

    std::string str(const std::string& x = "X", const std::string& y = "Y") const;

private:
    TermMap t_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// X - Y.
BiPoly x_minus_y();

/// Exact quotient p / (X-Y)^k, via the shear X -> X+Y which turns the
/// divisor into X^k. Throws DivisibilityFailed when a remainder is left.
BiPoly divide_by_x_minus_y_power(const BiPoly& p, int k);

}  // namespace cuspidal
