#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/binform.hpp"
#include "cuspidal/bipoly.hpp"
#include "cuspidal/branch.hpp"
#include "cuspidal/multseq.hpp"

// Construction and certification of the degree-d rational plane curves with
// three cusps of multiplicity sequences [(d-2), (2_a), (2_b)], a + b = d-2.
// The construction is fully determined: a truncated binomial Taylor
// expansion gives f, an exact division by (1+T)^(d-2) gives the middle
// coefficients of the parametrization, and one more exact division gives
// the affine equation.

namespace cuspidal {

struct FamilyParams {
    int d;
    int a;
    int b;

    FamilyParams(int degree, int a_value);

    friend bool operator==(const FamilyParams& p, const FamilyParams& q) {
        return p.d == q.d && p.a == q.a;
    }
};

/// All valid (a, b) for a given degree, ascending in a; floor((d-2)/2)
/// of them.
std::vector<FamilyParams> enumerate_degree(int d);

/// [a_0 .. a_{d-3}] with a_0 = 1 and a_k the falling factorial of
/// a_1 = a - 1/2.
std::vector<Rat> taylor_coefficients(const FamilyParams& params);

/// Degree d-3 truncated Taylor expansion sum a_k/k! (T-1)^k; the partial
/// expansion of T^(a - 1/2) around T = 1.
UniPoly build_f(const FamilyParams& params);

/// (f(T^2) + T^(2a-1)) / (1+T)^(d-2), an exact division of degree d-4 with
/// nonzero first and last coefficients and nonzero value at 1.
UniPoly build_qtilde(const FamilyParams& params);

struct Parametrization {
    BinForm P, Q, R;
};

/// (s^2 (s-t)^(d-2) : t^2 (s-t)^(d-2) : s^2 t^2 q(s,t)) with q the
/// homogenization of build_qtilde.
Parametrization parametrization(const FamilyParams& params);

/// Affine equation of total degree d:
/// (X^(2a+1) Y^(2b+1) - ((X-Y)^(d-2) - XY fhat)^2) / (X-Y)^(d-2).
BiPoly implicit_equation(const FamilyParams& params);

// The equation regrouped the way it prints: residual - (X-Y)^(d-2)
// + XY * xy_group.
struct EquationParts {
    BiPoly residual;
    int power;
    BiPoly xy_group;

    BiPoly combined() const;
};

EquationParts implicit_equation_parts(const FamilyParams& params);

struct CuspRecord {
    std::string parameter;  // point of P^1, e.g. "1:1"
    std::string point;      // image point, e.g. "0:0:1"
    MultiplicitySequence sequence;
    std::pair<int, int> puiseux_pair;

    friend bool operator==(const CuspRecord&, const CuspRecord&) = default;
};

struct CertificationFlags {
    std::optional<bool> divisibility;
    std::optional<bool> pullback_vanishes;
    std::optional<bool> cusp_types;
    std::optional<bool> genus_identity;

    bool all_passed() const;

    friend bool operator==(const CertificationFlags&, const CertificationFlags&) = default;
};

struct CuspidalCurve {
    FamilyParams params;
    UniPoly f;
    UniPoly q_tilde;
    BinForm P, Q, R;
    BiPoly affine_equation;
    std::vector<CuspRecord> cusps;  // always 3: central, (2_a), (2_b)
    CertificationFlags certified;

    friend bool operator==(const CuspidalCurve&, const CuspidalCurve&) = default;
};

/// Builds the curve and runs the construction-time checks only; cusp
/// records carry the expected sequences.
CuspidalCurve construct_curve(const FamilyParams& params);

/// Full certification: divisibility conditions, pullback of the equation
/// through the parametrization vanishes identically, the three chart germs
/// resolve to [(d-2), (2_a), (2_b)], and the genus identity holds. Throws
/// CertificationFailed on any miss.
CuspidalCurve certify(const FamilyParams& params);

/// Series precision used for the chart germs during certification.
int certification_precision(int d);

// Chart germs of the three cusps, exact to the requested precision.
BranchGerm central_cusp_germ(const FamilyParams& params, int precision);
BranchGerm cusp_a_germ(const FamilyParams& params, int precision);
BranchGerm cusp_b_germ(const FamilyParams& params, int precision);

namespace detail {

// Raw builders without the a >= b normalization; any 1 <= a <= d-3 works.
// Used by the symmetry checks that exchange the roles of a and b.
std::vector<Rat> taylor_coefficients_raw(int d, int a);
UniPoly build_f_raw(int d, int a);
UniPoly build_qtilde_raw(int d, int a);
BiPoly implicit_equation_raw(int d, int a);

/// Coefficient reversal q(T) -> T^(d-4) q(1/T).
UniPoly reverse_poly(const UniPoly& q, int size);

}  // namespace detail

}  // namespace cuspidal
