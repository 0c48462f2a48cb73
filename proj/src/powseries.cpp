#include "cuspidal/powseries.hpp"

#include <algorithm>
#include <sstream>

namespace cuspidal {

PowSeries::PowSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("series needs precision >= 1");
}

PowSeries PowSeries::zero(int precision) {
    if (precision < 1) throw DomainError("series needs precision >= 1");
    return PowSeries(std::vector<Rat>(static_cast<std::size_t>(precision), Rat(0)));
}

PowSeries PowSeries::from_poly(const UniPoly& p, int precision) {
    PowSeries s = zero(precision);
    const int top = std::min(precision - 1, p.degree());
    for (int k = 0; k <= top; ++k) s.c_[static_cast<std::size_t>(k)] = p.coeff(k);
    return s;
}

PowSeries PowSeries::monomial(const Rat& c, int exponent, int precision) {
    PowSeries s = zero(precision);
    if (exponent < precision && !c.is_zero()) s.c_[static_cast<std::size_t>(exponent)] = c;
    return s;
}

const Rat& PowSeries::coeff(int k) const {
    if (k < 0 || k >= precision())
        throw PrecisionExhausted("coefficient index " + std::to_string(k) +
                                 " beyond precision " + std::to_string(precision()));
    return c_[static_cast<std::size_t>(k)];
}

std::optional<int> PowSeries::order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return std::nullopt;
}

PowSeries PowSeries::truncate(int precision) const {
    if (precision < 1) throw DomainError("series needs precision >= 1");
    if (precision > this->precision())
        throw PrecisionExhausted("cannot extend series precision by truncation");
    return PowSeries(std::vector<Rat>(c_.begin(), c_.begin() + precision));
}

PowSeries PowSeries::shift_down(int k) const {
    if (k == 0) return *this;
    if (k < 0 || k >= precision())
        throw PrecisionExhausted("shift below remaining precision");
    for (int j = 0; j < k; ++j)
        if (!c_[static_cast<std::size_t>(j)].is_zero())
            throw DomainError("series not divisible by t^" + std::to_string(k));
    return PowSeries(std::vector<Rat>(c_.begin() + k, c_.end()));
}

PowSeries PowSeries::shift_up(int k) const {
    if (k == 0) return *this;
    if (k < 0) throw DomainError("negative shift");
    std::vector<Rat> v(c_.size(), Rat(0));
    for (std::size_t j = 0; j + static_cast<std::size_t>(k) < c_.size(); ++j)
        v[j + static_cast<std::size_t>(k)] = c_[j];
    return PowSeries(std::move(v));
}

PowSeries& PowSeries::operator+=(const PowSeries& o) {
    const std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
    return *this;
}

PowSeries& PowSeries::operator-=(const PowSeries& o) {
    const std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
    return *this;
}

PowSeries operator*(const PowSeries& a, const PowSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Rat> prod(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return PowSeries(std::move(prod));
}

PowSeries operator*(const Rat& s, PowSeries p) {
    for (auto& c : p.c_) c *= s;
    return p;
}

PowSeries operator-(PowSeries p) {
    for (auto& c : p.c_) c = -c;
    return p;
}

PowSeries PowSeries::add_constant(const Rat& c) const {
    PowSeries s = *this;
    s.c_[0] += c;
    return s;
}

PowSeries series_reciprocal(const PowSeries& s, int n) {
    if (n < 1) throw DomainError("reciprocal needs precision >= 1");
    if (n > s.precision())
        throw PrecisionExhausted("reciprocal to " + std::to_string(n) +
                                 " terms needs that much input precision");
    const Rat& c0 = s.coeff(0);
    if (c0.is_zero()) throw ZeroConstantTerm();

    // r_0 = 1/c0, then r_k = -(sum_{j=1..k} s_j r_{k-j}) / c0.
    std::vector<Rat> r(static_cast<std::size_t>(n), Rat(0));
    const Rat inv0 = inverse(c0);
    r[0] = inv0;
    for (int k = 1; k < n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += s.coeff(j) * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = -acc * inv0;
    }
    return PowSeries(std::move(r));
}

std::string PowSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < precision(); ++k) {
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
    if (first) os << "0";
    os << " + O(" << var << "^" << precision() << ")";
    return os.str();
}

}  // namespace cuspidal
