#include "cuspidal/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cuspidal {

namespace {
const Rat kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) {
    if (c.is_zero()) return UniPoly();
    return UniPoly(std::vector<Rat>{c});
}

UniPoly UniPoly::monomial(const Rat& c, int exponent) {
    if (c.is_zero()) return UniPoly();
    std::vector<Rat> v(static_cast<std::size_t>(exponent) + 1, Rat(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

const Rat& UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Rat& UniPoly::leading() const {
    if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = Rat(static_cast<long>(k)) * c_[k];
    return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(prod));
}

UniPoly operator*(const Rat& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    std::vector<Rat> v(p.c_);
    for (auto& c : v) c *= s;
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& p) {
    std::vector<Rat> v(p.c_);
    for (auto& c : v) c = -c;
    return UniPoly(std::move(v));
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
    UniPoly result = UniPoly::constant(Rat(1));
    UniPoly b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result = result * b;
        b = b * b;
        e >>= 1u;
    }
    return result;
}

UniPoly exact_divide(const UniPoly& p, const UniPoly& q) {
    if (q.is_zero()) throw DomainError("division by zero polynomial");
    if (p.is_zero()) return UniPoly();
    if (p.degree() < q.degree())
        throw NotDivisible("degree of dividend below divisor", p);

    std::vector<Rat> rem(p.coeffs().begin(), p.coeffs().end());
    const int dq = q.degree();
    const int dquot = p.degree() - dq;
    std::vector<Rat> quot(static_cast<std::size_t>(dquot) + 1, Rat(0));
    const Rat lead_inv = inverse(q.leading());

    for (int k = dquot; k >= 0; --k) {
        Rat factor = rem[static_cast<std::size_t>(k + dq)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor.is_zero()) continue;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<std::size_t>(k + j)] -= factor * q.coeff(j);
    }

    UniPoly remainder{std::vector<Rat>(rem.begin(), rem.begin() + dq)};
    if (!remainder.is_zero())
        throw NotDivisible("polynomial division leaves remainder", remainder);
    return UniPoly(std::move(quot));
}

std::vector<Rat> taylor_shift(const UniPoly& p, const Rat& c) {
    // Repeated synthetic division by (T - c); after round k the slot a[k]
    // holds b_k and a[k+1..] the running quotient.
    if (p.is_zero()) return {Rat(0)};
    std::vector<Rat> a(p.coeffs().begin(), p.coeffs().end());
    const std::size_t n = a.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;)
            a[j] += c * a[j + 1];
    return a;
}

UniPoly compose_square(const UniPoly& p) {
    if (p.is_zero()) return UniPoly();
    std::vector<Rat> v(2 * p.coeffs().size() - 1, Rat(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) v[2 * k] = p.coeff(static_cast<int>(k));
    return UniPoly(std::move(v));
}

UniPoly shift_argument(const UniPoly& p, const Rat& c) {
    // p(T + c) = sum b_k T^k with b_k = p^(k)(c)/k!.
    return UniPoly(taylor_shift(p, c));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeff(k);
        if (c.is_zero()) continue;
        Rat abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = abs.is_one() && k != 0;
        if (!unit) os << abs.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    return os << p.str();
}

}  // namespace cuspidal
