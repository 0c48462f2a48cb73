#include "cuspidal/binform.hpp"

#include <sstream>

#include "cuspidal/errors.hpp"

namespace cuspidal {

BinForm::BinForm(int degree) {
    if (degree < 0) throw DomainError("binary form needs degree >= 0");
    c_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
}

BinForm::BinForm(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("binary form needs degree >= 0");
}

BinForm BinForm::homogenize(const UniPoly& p, int degree) {
    if (p.degree() > degree)
        throw DomainError("polynomial degree exceeds form degree");
    BinForm f(degree);
    for (int i = 0; i <= p.degree(); ++i) f.c_[static_cast<std::size_t>(i)] = p.coeff(i);
    return f;
}

bool BinForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

const Rat& BinForm::coeff(int i) const {
    if (i < 0 || i > degree()) throw IndexOutOfRange("binary form coefficient index");
    return c_[static_cast<std::size_t>(i)];
}

Rat BinForm::eval(const Rat& s, const Rat& t) const {
    Rat acc(0);
    for (int i = 0; i <= degree(); ++i)
        acc += c_[static_cast<std::size_t>(i)] * pow(s, static_cast<unsigned>(i)) *
               pow(t, static_cast<unsigned>(degree() - i));
    return acc;
}

UniPoly BinForm::dehomogenize() const {
    return UniPoly(std::vector<Rat>(c_));
}

BinForm& BinForm::operator+=(const BinForm& o) {
    if (o.degree() != degree()) throw DomainError("adding forms of different degree");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BinForm operator-(const BinForm& a, const BinForm& b) {
    if (a.degree() != b.degree()) throw DomainError("subtracting forms of different degree");
    BinForm r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

BinForm operator*(const BinForm& a, const BinForm& b) {
    BinForm prod(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            prod.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return prod;
}

BinForm operator*(const Rat& s, BinForm f) {
    for (auto& c : f.c_) c *= s;
    return f;
}

BinForm pow(const BinForm& base, unsigned exponent) {
    BinForm result(std::vector<Rat>{Rat(1)});
    BinForm b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result = result * b;
        b = b * b;
        e >>= 1u;
    }
    return result;
}

std::string BinForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rat abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const int j = degree() - i;
        const bool has_var = i > 0 || j > 0;
        const bool unit = abs.is_one() && has_var;
        if (!unit) os << abs.str();
        bool star = !unit;
        if (i > 0) {
            if (star) os << "*";
            os << "s";
            if (i > 1) os << "^" << i;
            star = true;
        }
        if (j > 0) {
            if (star) os << "*";
            os << "t";
            if (j > 1) os << "^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cuspidal
