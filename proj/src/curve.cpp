#include "cuspidal/curve.hpp"

#include <algorithm>

#include "cuspidal/errors.hpp"

namespace cuspidal {

FamilyParams::FamilyParams(int degree, int a_value) : d(degree), a(a_value), b(degree - 2 - a_value) {
    if (d < 4) throw DegreeTooSmall("family needs degree >= 4");
    if (a < 1 || b < 1 || a < b)
        throw DomainError("family needs a >= b >= 1 with a + b = d - 2 (got a = " +
                          std::to_string(a) + ", d = " + std::to_string(d) + ")");
}

std::vector<FamilyParams> enumerate_degree(int d) {
    if (d < 4) throw DegreeTooSmall("enumeration needs degree >= 4");
    std::vector<FamilyParams> out;
    for (int a = (d - 1) / 2; a <= d - 3; ++a) out.emplace_back(d, a);
    return out;
}

namespace detail {

std::vector<Rat> taylor_coefficients_raw(int d, int a) {
    const Rat a1(2 * a - 1, 2);
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d - 2));
    coeffs.emplace_back(1);
    Rat acc(1);
    for (int k = 1; k <= d - 3; ++k) {
        acc *= a1 - Rat(k - 1);
        coeffs.push_back(acc);
    }
    return coeffs;
}

UniPoly build_f_raw(int d, int a) {
    const std::vector<Rat> ak = taylor_coefficients_raw(d, a);
    UniPoly f;
    const UniPoly t_minus_1(std::vector<Rat>{Rat(-1), Rat(1)});
    UniPoly power = UniPoly::constant(Rat(1));
    for (int k = 0; k <= d - 3; ++k) {
        f += (ak[static_cast<std::size_t>(k)] / Rat(factorial(static_cast<unsigned>(k)))) * power;
        power = power * t_minus_1;
    }
    return f;
}

UniPoly build_qtilde_raw(int d, int a) {
    const UniPoly f = build_f_raw(d, a);
    const UniPoly big_f =
        compose_square(f) + UniPoly::monomial(Rat(1), 2 * a - 1);  // f(T^2) + T^(2a-1)
    const UniPoly divisor = pow(UniPoly(std::vector<Rat>{Rat(1), Rat(1)}),
                                static_cast<unsigned>(d - 2));  // (1+T)^(d-2)

    // All derivatives of F up to order d-3 must vanish at -1; this is the
    // divisibility restated through the Taylor coefficients at -1.
    const std::vector<Rat> at_minus_1 = taylor_shift(big_f, Rat(-1));
    for (int j = 0; j <= d - 3; ++j)
        if (!at_minus_1[static_cast<std::size_t>(j)].is_zero())
            throw DivisibilityFailed("derivative order " + std::to_string(j) +
                                     " of f(T^2) + T^(2a-1) does not vanish at -1");

    UniPoly q;
    try {
        q = exact_divide(big_f, divisor);
    } catch (const NotDivisible&) {
        throw DivisibilityFailed("(1+T)^(d-2) does not divide f(T^2) + T^(2a-1)");
    }

    if (q.degree() != d - 4)
        throw DivisibilityFailed("quotient degree " + std::to_string(q.degree()) +
                                 ", expected " + std::to_string(d - 4));
    if (q.coeff(0).is_zero() || q.coeff(d - 4).is_zero() || q.eval(Rat(1)).is_zero())
        throw DivisibilityFailed("quotient endpoint coefficients or value at 1 vanish");
    return q;
}

UniPoly reverse_poly(const UniPoly& q, int size) {
    std::vector<Rat> rev(static_cast<std::size_t>(size), Rat(0));
    for (int k = 0; k < size; ++k) rev[static_cast<std::size_t>(size - 1 - k)] = q.coeff(k);
    return UniPoly(std::move(rev));
}

}  // namespace detail

std::vector<Rat> taylor_coefficients(const FamilyParams& params) {
    return detail::taylor_coefficients_raw(params.d, params.a);
}

UniPoly build_f(const FamilyParams& params) {
    return detail::build_f_raw(params.d, params.a);
}

UniPoly build_qtilde(const FamilyParams& params) {
    return detail::build_qtilde_raw(params.d, params.a);
}

Parametrization parametrization(const FamilyParams& params) {
    const int d = params.d;
    const UniPoly q = build_qtilde(params);

    const BinForm s_minus_t(std::vector<Rat>{Rat(-1), Rat(1)});  // t-coeff, s-coeff
    const BinForm core = pow(s_minus_t, static_cast<unsigned>(d - 2));
    const BinForm s2(std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    const BinForm t2(std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

    Parametrization h{s2 * core, t2 * core, s2 * t2 * BinForm::homogenize(q, d - 4)};

    // Base-point freeness at the three distinguished parameters.
    if (!h.P.eval(Rat(1), Rat(1)).is_zero() || !h.Q.eval(Rat(1), Rat(1)).is_zero() ||
        h.R.eval(Rat(1), Rat(1)).is_zero())
        throw InternalError("parametrization at (1:1) is not the expected base point pattern");
    if (h.Q.eval(Rat(0), Rat(1)).is_zero() || h.P.eval(Rat(1), Rat(0)).is_zero())
        throw InternalError("parametrization degenerates at (0:1) or (1:0)");
    return h;
}

namespace {

// fhat(X, Y) = Y^(d-3) f(X/Y).
BiPoly homogenize_f(const UniPoly& f, int d) {
    BiPoly fhat;
    for (int k = 0; k <= f.degree(); ++k) fhat.add_term(f.coeff(k), k, d - 3 - k);
    return fhat;
}

}  // namespace

EquationParts implicit_equation_parts(const FamilyParams& params) {
    const int d = params.d;
    const UniPoly f = build_f(params);
    const BiPoly fhat = homogenize_f(f, d);

    // psi = X^(2a+1) Y^(2b+1) - X^2 Y^2 fhat^2 is divisible by (X-Y)^(d-2);
    // the quotient carries the non-display terms of the printed form.
    const BiPoly psi = BiPoly::monomial(Rat(1), 2 * params.a + 1, 2 * params.b + 1) -
                       BiPoly::monomial(Rat(1), 2, 2) * fhat * fhat;
    BiPoly residual;
    try {
        residual = divide_by_x_minus_y_power(psi, d - 2);
    } catch (const DivisibilityFailed&) {
        throw DivisibilityFailed("(X-Y)^(d-2) does not divide the residual part");
    }

    return EquationParts{residual, d - 2, Rat(2) * fhat};
}

BiPoly EquationParts::combined() const {
    return residual - pow(x_minus_y(), static_cast<unsigned>(power)) +
           BiPoly::monomial(Rat(1), 1, 1) * xy_group;
}

namespace detail {

BiPoly implicit_equation_raw(int d, int a) {
    const int b = d - 2 - a;
    const UniPoly f = build_f_raw(d, a);
    const BiPoly fhat = homogenize_f(f, d);
    const BiPoly xy = BiPoly::monomial(Rat(1), 1, 1);

    const BiPoly g = pow(x_minus_y(), static_cast<unsigned>(d - 2)) - xy * fhat;
    const BiPoly ptilde = BiPoly::monomial(Rat(1), 2 * a + 1, 2 * b + 1) - g * g;

    BiPoly p;
    try {
        p = divide_by_x_minus_y_power(ptilde, d - 2);
    } catch (const DivisibilityFailed&) {
        throw DivisibilityFailed("(X-Y)^(d-2) does not divide the lifted equation");
    }
    if (p.total_degree() != d)
        throw DivisibilityFailed("affine equation has total degree " +
                                 std::to_string(p.total_degree()) + ", expected " +
                                 std::to_string(d));
    return p;
}

}  // namespace detail

BiPoly implicit_equation(const FamilyParams& params) {
    return detail::implicit_equation_raw(params.d, params.a);
}

int certification_precision(int d) {
    return (d - 1) * (d - 2) + 2;
}

BranchGerm central_cusp_germ(const FamilyParams& params, int precision) {
    const int d = params.d;
    const UniPoly q = build_qtilde(params);
    // Affine coordinates at the image of (1:1): with s = 1+u, t = 1 the
    // branch is (u^(d-2)/q(1+u), u^(d-2)/((1+u)^2 q(1+u))).
    const PowSeries q_shift = PowSeries::from_poly(shift_argument(q, Rat(1)), precision);
    const PowSeries inv_q = series_reciprocal(q_shift, precision);
    const PowSeries inv_sq = series_reciprocal(
        PowSeries::from_poly(UniPoly(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}), precision),
        precision);
    const PowSeries x = inv_q.shift_up(d - 2);
    const PowSeries y = x * inv_sq;
    return BranchGerm(x, y);
}

BranchGerm cusp_a_germ(const FamilyParams& params, int precision) {
    const int d = params.d;
    const UniPoly q = build_qtilde(params);
    // xi = s/t at (0:1): branch (xi^2, xi^2 q(xi) / (xi-1)^(d-2)).
    const UniPoly xi_minus_1(std::vector<Rat>{Rat(-1), Rat(1)});
    const PowSeries denom = PowSeries::from_poly(
        pow(xi_minus_1, static_cast<unsigned>(d - 2)), precision);
    const PowSeries x = PowSeries::monomial(Rat(1), 2, precision);
    const PowSeries y =
        x * PowSeries::from_poly(q, precision) * series_reciprocal(denom, precision);
    return BranchGerm(x, y);
}

BranchGerm cusp_b_germ(const FamilyParams& params, int precision) {
    const int d = params.d;
    const UniPoly q = build_qtilde(params);
    const UniPoly q_rev = detail::reverse_poly(q, d - 3);
    // tau = t/s at (1:0): branch (tau^2, tau^2 qrev(tau) / (1-tau)^(d-2)).
    const UniPoly one_minus_tau(std::vector<Rat>{Rat(1), Rat(-1)});
    const PowSeries denom = PowSeries::from_poly(
        pow(one_minus_tau, static_cast<unsigned>(d - 2)), precision);
    const PowSeries x = PowSeries::monomial(Rat(1), 2, precision);
    const PowSeries y =
        x * PowSeries::from_poly(q_rev, precision) * series_reciprocal(denom, precision);
    return BranchGerm(x, y);
}

bool CertificationFlags::all_passed() const {
    auto yes = [](const std::optional<bool>& v) { return v.has_value() && *v; };
    return yes(divisibility) && yes(pullback_vanishes) && yes(cusp_types) && yes(genus_identity);
}

namespace {

MultiplicitySequence compact_sequence(int m, int a) {
    std::vector<int> full(static_cast<std::size_t>(a), m);
    full.insert(full.end(), static_cast<std::size_t>(m) + 1, 1);
    return MultiplicitySequence(std::move(full));
}

std::vector<CuspRecord> expected_cusps(const FamilyParams& params) {
    return {
        CuspRecord{"1:1", "0:0:1", compact_sequence(params.d - 2, 1),
                   {params.d - 1, params.d - 2}},
        CuspRecord{"0:1", "0:1:0", compact_sequence(2, params.a), {2 * params.a + 1, 2}},
        CuspRecord{"1:0", "1:0:0", compact_sequence(2, params.b), {2 * params.b + 1, 2}},
    };
}

bool genus_identity(const FamilyParams& params) {
    const long d = params.d;
    return (d - 2) * (d - 3) / 2 + params.a + params.b == (d - 1) * (d - 2) / 2;
}

/// The equation homogenized to degree d and pulled back through (P:Q:R).
BinForm pullback(const BiPoly& equation, const Parametrization& h, int d) {
    std::vector<BinForm> powers_p{BinForm(std::vector<Rat>{Rat(1)})};
    std::vector<BinForm> powers_q{BinForm(std::vector<Rat>{Rat(1)})};
    std::vector<BinForm> powers_r{BinForm(std::vector<Rat>{Rat(1)})};
    auto power = [](std::vector<BinForm>& cache, const BinForm& base, int e) -> const BinForm& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };

    BinForm acc(d * d);
    for (const auto& [key, c] : equation.terms()) {
        const int i = key.first;
        const int j = key.second;
        const int k = d - i - j;
        if (k < 0) throw InternalError("equation term above total degree");
        acc += c * (power(powers_p, h.P, i) * power(powers_q, h.Q, j) * power(powers_r, h.R, k));
    }
    return acc;
}

}  // namespace

CuspidalCurve construct_curve(const FamilyParams& params) {
    CuspidalCurve curve{params,
                        build_f(params),
                        build_qtilde(params),
                        BinForm(0),
                        BinForm(0),
                        BinForm(0),
                        implicit_equation(params),
                        expected_cusps(params),
                        CertificationFlags{}};
    Parametrization h = parametrization(params);
    curve.P = h.P;
    curve.Q = h.Q;
    curve.R = h.R;
    curve.certified.divisibility = true;  // build_qtilde ran all of them
    curve.certified.genus_identity = genus_identity(params);
    return curve;
}

CuspidalCurve certify(const FamilyParams& params) {
    CuspidalCurve curve = construct_curve(params);

    const BinForm pulled =
        pullback(curve.affine_equation, Parametrization{curve.P, curve.Q, curve.R}, params.d);
    curve.certified.pullback_vanishes = pulled.is_zero();
    if (!*curve.certified.pullback_vanishes)
        throw CertificationFailed("pullback",
                                  "equation does not vanish along the parametrization");

    const int n0 = certification_precision(params.d);
    const int cap = 8 * n0;
    const std::array<MultiplicitySequence, 3> expected = {
        compact_sequence(params.d - 2, 1), compact_sequence(2, params.a),
        compact_sequence(2, params.b)};
    const std::array<std::function<BranchGerm(int)>, 3> makers = {
        [&](int n) { return central_cusp_germ(params, n); },
        [&](int n) { return cusp_a_germ(params, n); },
        [&](int n) { return cusp_b_germ(params, n); }};

    for (std::size_t i = 0; i < 3; ++i) {
        const MultiplicitySequence resolved = resolve_with_retry(makers[i], n0, cap);
        curve.cusps[i].sequence = resolved;
        if (!(resolved == expected[i])) {
            curve.certified.cusp_types = false;
            throw CertificationFailed("cusp types", "cusp at (" + curve.cusps[i].parameter +
                                                        ") resolved to " + resolved.str() +
                                                        ", expected " + expected[i].str());
        }
    }
    curve.certified.cusp_types = true;

    if (!*curve.certified.genus_identity)
        throw CertificationFailed("genus identity", "binomial identity fails");
    return curve;
}

}  // namespace cuspidal
