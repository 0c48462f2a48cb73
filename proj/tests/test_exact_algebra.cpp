#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cuspidal/bipoly.hpp"
#include "cuspidal/binform.hpp"
#include "cuspidal/powseries.hpp"
#include "cuspidal/rat.hpp"
#include "cuspidal/unipoly.hpp"

using namespace cuspidal;

namespace {

std::mt19937 rng(20240516);

Rat random_rat(int num_range = 20, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng), den(rng));
}

UniPoly random_poly(int max_degree = 8) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int n = deg(rng);
    std::vector<Rat> coeffs;
    for (int k = 0; k <= n; ++k) coeffs.push_back(random_rat());
    return UniPoly(std::move(coeffs));
}

UniPoly random_nonzero_poly(int max_degree = 8) {
    for (;;) {
        UniPoly p = random_poly(max_degree);
        if (!p.is_zero()) return p;
    }
}

// Independent convolution, kept free of UniPoly::operator*.
UniPoly naive_product(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, Rat(0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return UniPoly(std::move(out));
}

UniPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> v;
    for (const auto& s : coeffs) v.push_back(Rat::parse(s));
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(-3, 6).num() == -1);
    CHECK(Rat(-3, 6).den() == 2);
    CHECK(Rat(7, 1).str() == "7");
    CHECK(Rat(-7, 128).str() == "-7/128");
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("rational parsing") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK_THROWS_AS(Rat::parse("1/0"), SyntaxError);
    CHECK_THROWS_AS(Rat::parse("x"), SyntaxError);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), SyntaxError);
    // round trip
    for (int i = 0; i < 50; ++i) {
        const Rat r = random_rat(1000, 999);
        CHECK(Rat::parse(r.str()) == r);
    }
}

TEST_CASE("rational arithmetic and pow") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) / Rat(3, 4) == Rat(2, 3));
    CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(pow(Rat(5), 0) == Rat(1));
    CHECK(inverse(Rat(-3, 7)) == Rat(-7, 3));
    CHECK_THROWS_AS(inverse(Rat(0)), DomainError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("polynomial addition cancels exactly") {
    const UniPoly a = poly_from_strings({"1", "1"});    // 1 + T
    const UniPoly b = poly_from_strings({"-1", "1"});   // -1 + T
    const UniPoly sum = a + b;
    CHECK(sum == poly_from_strings({"0", "2"}));
    CHECK(sum.degree() == 1);

    // trailing-zero trim after subtraction
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
}

TEST_CASE("polynomial multiplication") {
    const UniPoly one_plus_t = poly_from_strings({"1", "1"});
    CHECK(one_plus_t * one_plus_t == poly_from_strings({"1", "2", "1"}));

    const UniPoly p = poly_from_strings({"-1/8", "3/8"});  // 3/8 T - 1/8
    const UniPoly cube = pow(one_plus_t, 3);
    const UniPoly expected = poly_from_strings({"-1/8", "0", "3/4", "1", "3/8"});
    CHECK(p * cube == expected);
    CHECK(naive_product(p, cube) == expected);
}

TEST_CASE("multiplication agrees with the independent convolution") {
    for (int i = 0; i < 60; ++i) {
        const UniPoly a = random_poly();
        const UniPoly b = random_poly();
        CHECK(a * b == naive_product(a, b));
    }
}

TEST_CASE("exact division") {
    const UniPoly p = poly_from_strings({"-1/8", "0", "3/4", "1", "3/8"});
    const UniPoly q = pow(poly_from_strings({"1", "1"}), 3);
    const UniPoly quotient = exact_divide(p, q);
    CHECK(quotient == poly_from_strings({"-1/8", "3/8"}));
    CHECK(quotient * q == p);

    CHECK(exact_divide(poly_from_strings({"-1", "0", "1"}), poly_from_strings({"-1", "1"})) ==
          poly_from_strings({"1", "1"}));

    // T^2 + 1 over T - 1 leaves remainder 2
    try {
        exact_divide(poly_from_strings({"1", "0", "1"}), poly_from_strings({"-1", "1"}));
        FAIL("expected NotDivisible");
    } catch (const NotDivisible& e) {
        CHECK(e.remainder() == poly_from_strings({"2"}));
    }

    CHECK_THROWS_AS(exact_divide(poly_from_strings({"1"}), UniPoly()), DomainError);
}

TEST_CASE("exact division round trip on random polynomials") {
    for (int i = 0; i < 80; ++i) {
        const UniPoly p = random_poly(6);
        const UniPoly q = random_nonzero_poly(5);
        CHECK(exact_divide(p * q, q) == p);
    }
}

TEST_CASE("taylor shift") {
    CHECK(taylor_shift(poly_from_strings({"0", "0", "1"}), Rat(1)) ==
          std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    CHECK(taylor_shift(poly_from_strings({"-1/8", "3/4", "3/8"}), Rat(1)) ==
          std::vector<Rat>{Rat(1), Rat(3, 2), Rat(3, 8)});
    CHECK(taylor_shift(poly_from_strings({"5"}), Rat(17, 3)) == std::vector<Rat>{Rat(5)});
}

TEST_CASE("taylor shift equals derivative evaluation and recomposes") {
    for (int i = 0; i < 40; ++i) {
        const UniPoly p = random_poly(7);
        const Rat c = random_rat(6, 4);
        const std::vector<Rat> b = taylor_shift(p, c);

        // b_k = p^(k)(c) / k!
        UniPoly derivative = p;
        Rat kfact(1);
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k > 0) {
                derivative = derivative.derivative();
                kfact *= Rat(static_cast<long>(k));
            }
            CHECK(b[k] == derivative.eval(c) / kfact);
        }

        // sum b_k (T - c)^k recomposes p exactly
        UniPoly recomposed;
        const UniPoly t_minus_c(std::vector<Rat>{-c, Rat(1)});
        UniPoly power = UniPoly::constant(Rat(1));
        for (const Rat& bk : b) {
            recomposed += bk * power;
            power = power * t_minus_c;
        }
        CHECK(recomposed == p);
    }
}

TEST_CASE("series reciprocal") {
    const PowSeries geom = series_reciprocal(
        PowSeries::from_poly(poly_from_strings({"1", "1"}), 4), 4);
    CHECK(geom == PowSeries(std::vector<Rat>{Rat(1), Rat(-1), Rat(1), Rat(-1)}));

    CHECK(series_reciprocal(PowSeries::from_poly(poly_from_strings({"2"}), 2), 2) ==
          PowSeries(std::vector<Rat>{Rat(1, 2), Rat(0)}));

    CHECK(series_reciprocal(PowSeries::from_poly(poly_from_strings({"1", "-2", "1"}), 3), 3) ==
          PowSeries(std::vector<Rat>{Rat(1), Rat(2), Rat(3)}));

    CHECK_THROWS_AS(series_reciprocal(PowSeries::zero(4), 4), ZeroConstantTerm);
    CHECK_THROWS_AS(
        series_reciprocal(PowSeries::from_poly(poly_from_strings({"1"}), 3), 5),
        PrecisionExhausted);
}

TEST_CASE("series reciprocal satisfies s * r = 1 to precision") {
    for (int i = 0; i < 40; ++i) {
        UniPoly p = random_poly(6);
        std::vector<Rat> coeffs(p.coeffs().begin(), p.coeffs().end());
        if (coeffs.empty()) coeffs.push_back(Rat(0));
        coeffs[0] = random_rat(9, 5);
        if (coeffs[0].is_zero()) coeffs[0] = Rat(1);
        const PowSeries s = PowSeries::from_poly(UniPoly(std::move(coeffs)), 12);
        const PowSeries r = series_reciprocal(s, 12);
        const PowSeries prod = s * r;
        CHECK(prod.coeff(0) == Rat(1));
        for (int k = 1; k < prod.precision(); ++k) CHECK(prod.coeff(k).is_zero());
    }
}

TEST_CASE("series arithmetic truncates to the minimum precision") {
    const PowSeries a = PowSeries::from_poly(poly_from_strings({"1", "1"}), 8);
    const PowSeries b = PowSeries::from_poly(poly_from_strings({"1", "2", "3"}), 5);
    CHECK((a + b).precision() == 5);
    CHECK((a * b).precision() == 5);
    CHECK_THROWS_AS(a.coeff(8), PrecisionExhausted);
    CHECK_THROWS_AS(a.coeff(-1), PrecisionExhausted);
    CHECK(a.shift_down(0).precision() == 8);
    CHECK(PowSeries::monomial(Rat(1), 2, 4).shift_down(1) ==
          PowSeries::monomial(Rat(1), 1, 3));
    CHECK_THROWS_AS(PowSeries::monomial(Rat(1), 0, 4).shift_down(1), DomainError);
    CHECK_THROWS_AS(PowSeries::monomial(Rat(0), 0, 4).shift_down(4), PrecisionExhausted);
}

TEST_CASE("compose square") {
    CHECK(compose_square(poly_from_strings({"1", "1"})) == poly_from_strings({"1", "0", "1"}));
    CHECK(compose_square(poly_from_strings({"-1/8", "3/4", "3/8"})) ==
          poly_from_strings({"-1/8", "0", "3/4", "0", "3/8"}));
    CHECK(compose_square(UniPoly()).is_zero());

    for (int i = 0; i < 30; ++i) {
        const UniPoly p = random_poly(6);
        const Rat x = random_rat(8, 5);
        CHECK(compose_square(p).eval(x) == p.eval(x * x));
    }
}

TEST_CASE("bivariate polynomials") {
    BiPoly p;
    p.add_term(Rat(1), 2, 0);
    p.add_term(Rat(-2), 1, 1);
    p.add_term(Rat(1), 0, 2);
    CHECK(p == x_minus_y() * x_minus_y());
    CHECK(p.total_degree() == 2);
    CHECK(p.eval(Rat(3), Rat(1)) == Rat(4));

    // zero entries are never stored
    BiPoly q = p - p;
    CHECK(q.is_zero());
    CHECK(q.term_count() == 0);

    CHECK(p.swap_variables() == p);
    BiPoly asym = BiPoly::monomial(Rat(1), 2, 1);
    CHECK(asym.swap_variables() == BiPoly::monomial(Rat(1), 1, 2));
}

TEST_CASE("division by powers of X - Y") {
    for (int i = 0; i < 25; ++i) {
        std::uniform_int_distribution<int> small(0, 3);
        BiPoly p;
        for (int t = 0; t < 5; ++t) p.add_term(random_rat(), small(rng), small(rng));
        const int k = small(rng);
        const BiPoly lifted = p * pow(x_minus_y(), static_cast<unsigned>(k));
        CHECK(divide_by_x_minus_y_power(lifted, k) == p);
    }
    CHECK_THROWS_AS(divide_by_x_minus_y_power(BiPoly::monomial(Rat(1), 1, 0), 1),
                    DivisibilityFailed);
}

TEST_CASE("binary forms") {
    // (s - t)^2 = s^2 - 2st + t^2
    const BinForm s_minus_t(std::vector<Rat>{Rat(-1), Rat(1)});
    const BinForm sq = s_minus_t * s_minus_t;
    CHECK(sq.degree() == 2);
    CHECK(sq.coeff(0) == Rat(1));
    CHECK(sq.coeff(1) == Rat(-2));
    CHECK(sq.coeff(2) == Rat(1));
    CHECK(sq.eval(Rat(3), Rat(1)) == Rat(4));
    CHECK(pow(s_minus_t, 2) == sq);

    const UniPoly q = poly_from_strings({"-1/8", "3/8"});
    const BinForm hom = BinForm::homogenize(q, 1);
    CHECK(hom.coeff(0) == Rat(-1, 8));
    CHECK(hom.coeff(1) == Rat(3, 8));
    CHECK(hom.dehomogenize() == q);
    CHECK_THROWS_AS(BinForm::homogenize(q, 0), DomainError);
}
