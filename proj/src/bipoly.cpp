#include "cuspidal/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "cuspidal/errors.hpp"

namespace cuspidal {

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
    BiPoly p;
    p.add_term(c, i, j);
    return p;
}

int BiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [key, c] : t_) deg = std::max(deg, key.first + key.second);
    return deg;
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(const Rat& c, int i, int j) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0) throw DomainError("negative exponent in bivariate term");
    auto [it, inserted] = t_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [key, c] : t_)
        acc += c * pow(x, static_cast<unsigned>(key.first)) *
               pow(y, static_cast<unsigned>(key.second));
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [key, c] : o.t_) add_term(c, key.first, key.second);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [key, c] : o.t_) add_term(-c, key.first, key.second);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly prod;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            prod.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return prod;
}

BiPoly operator*(const Rat& s, const BiPoly& p) {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [key, c] : p.t_) r.t_.emplace(key, s * c);
    return r;
}

BiPoly operator-(const BiPoly& p) {
    BiPoly r;
    for (const auto& [key, c] : p.t_) r.t_.emplace(key, -c);
    return r;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
    BiPoly result = BiPoly::constant(Rat(1));
    BiPoly b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result = result * b;
        b = b * b;
        e >>= 1u;
    }
    return result;
}

BiPoly BiPoly::compose(const BiPoly& px, const BiPoly& py) const {
    // Memoize the powers; exponent ranges stay small here.
    std::vector<BiPoly> xp{BiPoly::constant(Rat(1))};
    std::vector<BiPoly> yp{BiPoly::constant(Rat(1))};
    auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };
    BiPoly out;
    for (const auto& [key, c] : t_)
        out += c * (power(xp, px, key.first) * power(yp, py, key.second));
    return out;
}

BiPoly BiPoly::swap_variables() const {
    BiPoly r;
    for (const auto& [key, c] : t_) r.t_.emplace(Key{key.second, key.first}, c);
    return r;
}

BiPoly x_minus_y() {
    BiPoly p;
    p.add_term(Rat(1), 1, 0);
    p.add_term(Rat(-1), 0, 1);
    return p;
}

BiPoly divide_by_x_minus_y_power(const BiPoly& p, int k) {
    if (k < 0) throw DomainError("negative divisor power");
    if (k == 0 || p.is_zero()) return p;

    const BiPoly x = BiPoly::monomial(Rat(1), 1, 0);
    const BiPoly y = BiPoly::monomial(Rat(1), 0, 1);
    const BiPoly sheared = p.compose(x + y, y);  // now divide by X^k

    BiPoly quotient_sheared;
    for (const auto& [key, c] : sheared.terms()) {
        if (key.first < k)
            throw DivisibilityFailed("quotient by (X-Y)^" + std::to_string(k) +
                                     " leaves remainder");
        quotient_sheared.add_term(c, key.first - k, key.second);
    }
    return quotient_sheared.compose(x - y, y);
}

std::string BiPoly::str(const std::string& x, const std::string& y) const {
    if (t_.empty()) return "0";
    // Highest total degree first, then by descending X exponent.
    std::vector<std::pair<Key, Rat>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second;
        const int db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        Rat abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool has_var = key.first > 0 || key.second > 0;
        const bool unit = abs.is_one() && has_var;
        if (!unit) os << abs.str();
        bool star = !unit;
        if (key.first > 0) {
            if (star) os << "*";
            os << x;
            if (key.first > 1) os << "^" << key.first;
            star = true;
        }
        if (key.second > 0) {
            if (star) os << "*";
            os << y;
            if (key.second > 1) os << "^" << key.second;
        }
    }
    return os.str();
}

}  // namespace cuspidal
