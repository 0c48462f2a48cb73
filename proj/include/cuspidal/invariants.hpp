#pragma once

#include <string>
#include <vector>

#include "cuspidal/multseq.hpp"

// Deformation and intersection invariants of cuspidal plane curves from
// the degree plus the multiplicity sequences alone.
//
// Two summation conventions coexist: the self-intersection formulas sum
// over the FULL canonical sequences (trailing ones included, final 1
// included), while the obstruction bounds sum the core only (entries up to
// the last one >= 2). Helpers for both live here.

namespace cuspidal {

struct CurveSingularityData {
    int d;
    std::vector<MultiplicitySequence> cusps;

    CurveSingularityData(int degree, std::vector<MultiplicitySequence> cusp_list);
};

long full_multiplicity_sum(const MultiplicitySequence& seq);
long core_multiplicity_sum(const MultiplicitySequence& seq);
/// Last entry >= 2 (the smooth sequence has none and is rejected upstream).
int terminal_core_entry(const MultiplicitySequence& seq);

struct CuspContribution {
    long eta;
    long omega;
    long value;  // eta + omega - 1

    friend bool operator==(const CuspContribution&, const CuspContribution&) = default;
};

struct ChiReport {
    long chi;  // -3(d-3) + sum of the contributions
    std::vector<CuspContribution> per_cusp;

    friend bool operator==(const ChiReport&, const ChiReport&) = default;
};

/// Euler characteristic of the logarithmic tangent bundle, computed as
/// K(K+D) from the multiplicity data.
ChiReport chi_theta(const CurveSingularityData& data);

struct CurveNumerics {
    long c_tilde_sq;  // proper transform self-intersection: 3d + s - 2 - sum m_ij
    long k_dot_c;     // K * C~ = -3d - s + sum m_ij
    long d_sq;        // reduced total transform square: 3d - 2 - sum_P (sum_j m_Pj + omega_P - 1)
    std::vector<long> e_p_sq;  // per cusp: -omega_P - 1

    friend bool operator==(const CurveNumerics&, const CurveNumerics&) = default;
};

CurveNumerics curve_numerics(const CurveSingularityData& data);

/// Alternative route for K * C~: start from -3d and add the center
/// multiplicity for every blow-up of the resolution.
long k_dot_c_blowup_recursion(const CurveSingularityData& data);

/// (d-1)(d-2) = sum of the Milnor numbers; the rationality constraint.
bool genus_identity_check(const CurveSingularityData& data);

struct ProjectionBound {
    long lhs;
    long rhs;
    bool holds;
};

/// Branching bound for the projection away from one cusp:
/// sum_others (m_j - 1) + (m_P1 - 1) <= 2(d - m - 1).
ProjectionBound projection_bound(int d, const MultiplicitySequence& from_cusp,
                                 const std::vector<MultiplicitySequence>& others);

struct ObstructionChecks {
    bool core_sum_lt_3d;           // sum of core entries over all cusps < 3d
    bool k_dot_c_lt_terminal_sum;  // K * C~ < sum of terminal core entries

    friend bool operator==(const ObstructionChecks&, const ObstructionChecks&) = default;
};

ObstructionChecks unobstructed_check(const CurveSingularityData& data);

struct RigidityReport {
    long contribution_sum;  // sum (eta + omega - 1)
    long expected;          // 3(d-3)
    bool identity_holds;
    int cusp_count;
    std::string kappa_note;
};

/// Needs at least three cusps. Reports the chi = 0 identity and how the
/// cusp count compares with the rigidity bound of ten.
RigidityReport rigidity_report(const CurveSingularityData& data);

struct InvariantReport {
    int d;
    ChiReport chi;
    CurveNumerics numerics;
    bool genus_ok;
    bool rigidity_identity_ok;
    ObstructionChecks obstruction;
    int cusp_count;
    std::string kappa_note;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport full_report(const CurveSingularityData& data);

}  // namespace cuspidal
