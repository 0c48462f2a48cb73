#include "cuspidal/branch.hpp"

#include <cctype>
#include <map>
#include <string>

namespace cuspidal {

BranchGerm::BranchGerm(PowSeries x_series, PowSeries y_series)
    : x(std::move(x_series)), y(std::move(y_series)) {
    if (!x.coeff(0).is_zero() || !y.coeff(0).is_zero())
        throw NonvanishingAtZero("germ coordinates must vanish at t = 0");
    if (x.is_zero_to_precision() && y.is_zero_to_precision())
        throw DomainError("germ with both coordinates zero to precision");
}

int BranchGerm::precision() const {
    return std::min(x.precision(), y.precision());
}

int germ_multiplicity(const BranchGerm& g) {
    const auto ox = g.x.order();
    const auto oy = g.y.order();
    if (!ox && !oy) throw PrecisionExhausted("germ order not visible at this precision");
    if (!ox) return *oy;
    if (!oy) return *ox;
    return std::min(*ox, *oy);
}

namespace {

// a/b truncated to the common remaining precision; needs ord b <= ord a.
PowSeries series_divide(const PowSeries& a, const PowSeries& b) {
    const auto ob = b.order();
    if (!ob) throw PrecisionExhausted("division by a series with no visible order");
    const PowSeries bs = b.shift_down(*ob);
    const PowSeries as = a.shift_down(*ob);
    const int n = std::min(as.precision(), bs.precision());
    return as.truncate(n) * series_reciprocal(bs.truncate(n), n);
}

}  // namespace

BlowupStep blowup_step(const BranchGerm& g) {
    const int mult = germ_multiplicity(g);

    const auto ox = g.x.order();
    const auto oy = g.y.order();
    // Swap only when ord y is strictly smaller (visible y order beats an
    // invisible or larger x order).
    const bool swapped = oy.has_value() && (!ox.has_value() || *oy < *ox);

    const PowSeries& low = swapped ? g.y : g.x;
    const PowSeries& high = swapped ? g.x : g.y;

    PowSeries ratio = series_divide(high, low);
    const Rat c = ratio.coeff(0);
    PowSeries reduced = ratio.add_constant(-c);
    PowSeries low_trunc = low.truncate(reduced.precision());
    if (low_trunc.is_zero_to_precision() && reduced.is_zero_to_precision())
        throw PrecisionExhausted("proper transform invisible at remaining precision");

    return BlowupStep{mult, BranchGerm(std::move(low_trunc), std::move(reduced)), swapped, c};
}

MultiplicitySequence resolve_sequence(const BranchGerm& g) {
    std::vector<int> core;
    BranchGerm cur = g;
    for (;;) {
        const int mult = germ_multiplicity(cur);
        if (mult == 1) break;
        if (!core.empty() && mult > core.back())
            throw InternalError("blow-up multiplicities increased");
        core.push_back(mult);
        cur = blowup_step(cur).next;
    }
    if (core.empty()) return MultiplicitySequence::smooth();

    std::vector<int> full = core;
    full.insert(full.end(), static_cast<std::size_t>(core.back()) + 1, 1);
    try {
        return MultiplicitySequence(std::move(full));
    } catch (const InvalidNotation& e) {
        throw InternalError(std::string("resolver produced an invalid sequence: ") + e.what());
    }
}

MultiplicitySequence resolve_with_retry(const std::function<BranchGerm(int)>& make_germ,
                                        int initial_precision, int max_precision) {
    int n = initial_precision;
    for (;;) {
        try {
            return resolve_sequence(make_germ(n));
        } catch (const PrecisionExhausted&) {
            if (n >= max_precision) throw;
            n = std::min(2 * n, max_precision);
        }
    }
}

bool detect_even_cusp(const BranchGerm& g, int expected_r) {
    if (expected_r < 1) throw DomainError("expected_r must be >= 1");
    if (g.precision() <= 2 * expected_r + 1)
        throw PrecisionExhausted("even-cusp test needs precision > 2*expected_r + 1");

    const auto ox = g.x.order();
    if (!ox || *ox != 2) throw DomainError("even-cusp test needs ord x = 2");
    for (int k = 0; k < g.x.precision(); ++k)
        if (k != 2 && !g.x.coeff(k).is_zero())
            throw DomainError("even-cusp test needs x to be a multiple of t^2");

    // Normal form first: subtract a polynomial in x to clear the even
    // coefficients c_2 .. c_2r of y. With x the monomial alpha*t^2 the
    // correction (c_2j / alpha^j) x^j is just the monomial c_2j t^(2j), so
    // the odd coefficients never move.
    PowSeries y = g.y;
    for (int j = 1; j <= expected_r; ++j) {
        const Rat cj = y.coeff(2 * j);
        if (cj.is_zero()) continue;
        y -= PowSeries::monomial(cj, 2 * j, y.precision());
    }

    for (int j = 1; j <= 2 * expected_r - 1; j += 2)
        if (!y.coeff(j).is_zero()) return false;
    return !y.coeff(2 * expected_r + 1).is_zero();
}

UniPoly parse_branch_poly(std::string_view expr) {
    // term := [rat "*"] "t" ["^" int] | rat ; terms joined by '+'/'-'.
    // The unicode minus sign is accepted alongside '-'.
    std::map<int, Rat> terms;
    std::size_t pos = 0;

    auto skip_space = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    auto at_minus = [&]() -> bool {
        if (pos < expr.size() && expr[pos] == '-') return true;
        return expr.size() - pos >= 3 && static_cast<unsigned char>(expr[pos]) == 0xE2 &&
               static_cast<unsigned char>(expr[pos + 1]) == 0x88 &&
               static_cast<unsigned char>(expr[pos + 2]) == 0x92;
    };
    auto eat_minus = [&] { pos += expr[pos] == '-' ? 1 : 3; };
    auto read_uint = [&]() -> long {
        std::size_t start = pos;
        while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected integer", start);
        try {
            return std::stol(std::string(expr.substr(start, pos - start)));
        } catch (const std::exception&) {
            throw SyntaxError("integer out of range", start);
        }
    };

    skip_space();
    if (pos == expr.size()) throw SyntaxError("empty expression", pos);

    bool first = true;
    while (pos < expr.size()) {
        skip_space();
        int sign = 1;
        if (at_minus()) {
            sign = -1;
            eat_minus();
        } else if (pos < expr.size() && expr[pos] == '+') {
            ++pos;
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", pos);
        }
        first = false;
        skip_space();
        if (pos == expr.size()) throw SyntaxError("dangling sign", pos);

        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(expr[pos]))) {
            long num = read_uint();
            long den = 1;
            if (pos < expr.size() && expr[pos] == '/') {
                ++pos;
                den = read_uint();
                if (den == 0) throw SyntaxError("zero denominator", pos);
            }
            coeff = Rat(num, den);
            have_coeff = true;
            skip_space();
        }

        int exponent = 0;
        if (pos < expr.size() && expr[pos] == '*') {
            if (!have_coeff) throw SyntaxError("'*' without coefficient", pos);
            ++pos;
            skip_space();
        }
        if (pos < expr.size() && expr[pos] == 't') {
            ++pos;
            exponent = 1;
            if (pos < expr.size() && expr[pos] == '^') {
                ++pos;
                const std::size_t at = pos;
                const long e = read_uint();
                if (e > 65536) throw SyntaxError("exponent too large", at);
                exponent = static_cast<int>(e);
            }
        } else if (!have_coeff) {
            throw SyntaxError("expected term", pos);
        }

        auto [it, inserted] = terms.try_emplace(exponent, Rat(sign) * coeff);
        if (!inserted) it->second += Rat(sign) * coeff;
        skip_space();
    }

    std::vector<Rat> coeffs;
    for (const auto& [exp, c] : terms) {
        if (static_cast<std::size_t>(exp) >= coeffs.size())
            coeffs.resize(static_cast<std::size_t>(exp) + 1, Rat(0));
        coeffs[static_cast<std::size_t>(exp)] = c;
    }
    return UniPoly(std::move(coeffs));
}

BranchGerm parse_branch(std::string_view expr_x, std::string_view expr_y, int precision) {
    if (precision < 2) throw DomainError("branch parsing needs precision >= 2");
    const UniPoly px = parse_branch_poly(expr_x);
    const UniPoly py = parse_branch_poly(expr_y);
    if (!px.coeff(0).is_zero() || !py.coeff(0).is_zero())
        throw NonvanishingAtZero("branch expressions must vanish at t = 0");
    return BranchGerm(PowSeries::from_poly(px, precision), PowSeries::from_poly(py, precision));
}

}  // namespace cuspidal
