#include "cuspidal/invariants.hpp"

#include <numeric>

namespace cuspidal {

CurveSingularityData::CurveSingularityData(int degree, std::vector<MultiplicitySequence> cusp_list)
    : d(degree), cusps(std::move(cusp_list)) {
    if (d < 3) throw DomainError("singularity data needs degree >= 3");
    for (const auto& seq : cusps)
        if (seq.multiplicity() < 2)
            throw DomainError("every cusp needs multiplicity >= 2; got " + seq.str());
}

long full_multiplicity_sum(const MultiplicitySequence& seq) {
    long sum = 0;
    for (int m : seq.entries()) sum += m;
    return sum;
}

long core_multiplicity_sum(const MultiplicitySequence& seq) {
    long sum = 0;
    for (int m : seq.entries())
        if (m > 1) sum += m;
    return sum;
}

int terminal_core_entry(const MultiplicitySequence& seq) {
    int last = 0;
    for (int m : seq.entries())
        if (m > 1) last = m;
    if (last == 0) throw DomainError("smooth sequence has no core entry");
    return last;
}

ChiReport chi_theta(const CurveSingularityData& data) {
    ChiReport report{-3L * (data.d - 3), {}};
    for (const auto& seq : data.cusps) {
        const SequenceInvariants inv = invariants_of(seq);
        const long value = inv.eta + inv.omega - 1;
        report.per_cusp.push_back({inv.eta, inv.omega, value});
        report.chi += value;
    }
    return report;
}

CurveNumerics curve_numerics(const CurveSingularityData& data) {
    const long d = data.d;
    const long s = static_cast<long>(data.cusps.size());
    long m_total = 0;
    long d_sq = 3 * d - 2;
    CurveNumerics out;
    for (const auto& seq : data.cusps) {
        const long full = full_multiplicity_sum(seq);
        const long omega = invariants_of(seq).omega;
        m_total += full;
        d_sq -= full + omega - 1;
        out.e_p_sq.push_back(-omega - 1);
    }
    out.c_tilde_sq = 3 * d + s - 2 - m_total;
    out.k_dot_c = -3 * d - s + m_total;
    out.d_sq = d_sq;
    if (out.k_dot_c + out.c_tilde_sq != -2)
        throw InternalError("adjunction identity K*C~ + C~^2 = -2 broke");
    return out;
}

long k_dot_c_blowup_recursion(const CurveSingularityData& data) {
    // One blow-up at a point of multiplicity m turns K*C into K*C + m. The
    // centers over one cusp have the multiplicities of every entry but the
    // final 1.
    long kc = -3L * data.d;
    for (const auto& seq : data.cusps) {
        const auto& e = seq.entries();
        for (std::size_t i = 0; i + 1 < e.size(); ++i) kc += e[i];
    }
    return kc;
}

bool genus_identity_check(const CurveSingularityData& data) {
    long mu_total = 0;
    for (const auto& seq : data.cusps) mu_total += invariants_of(seq).milnor;
    return static_cast<long>(data.d - 1) * (data.d - 2) == mu_total;
}

ProjectionBound projection_bound(int d, const MultiplicitySequence& from_cusp,
                                 const std::vector<MultiplicitySequence>& others) {
    const int m = from_cusp.multiplicity();
    if (m >= d) throw DegenerateProjection("projection center multiplicity must be below d");
    long lhs = from_cusp.length() > 1 ? from_cusp.entry(1) - 1 : 0;
    for (const auto& seq : others) lhs += seq.multiplicity() - 1;
    const long rhs = 2L * (d - m - 1);
    return ProjectionBound{lhs, rhs, lhs <= rhs};
}

ObstructionChecks unobstructed_check(const CurveSingularityData& data) {
    long core_sum = 0;
    long terminal_sum = 0;
    for (const auto& seq : data.cusps) {
        core_sum += core_multiplicity_sum(seq);
        terminal_sum += terminal_core_entry(seq);
    }
    const CurveNumerics numerics = curve_numerics(data);
    return ObstructionChecks{core_sum < 3L * data.d, numerics.k_dot_c < terminal_sum};
}

RigidityReport rigidity_report(const CurveSingularityData& data) {
    const int kappa = static_cast<int>(data.cusps.size());
    if (kappa < 3)
        throw TooFewCusps("rigidity report needs at least three cusps (log-general type)");
    const ChiReport chi = chi_theta(data);
    RigidityReport report;
    report.contribution_sum = chi.chi + 3L * (data.d - 3);
    report.expected = 3L * (data.d - 3);
    report.identity_holds = report.contribution_sum == report.expected;
    report.cusp_count = kappa;
    if (kappa < 10)
        report.kappa_note = "cusp count " + std::to_string(kappa) +
                            " < 10: consistent with projective rigidity";
    else
        report.kappa_note = "cusp count " + std::to_string(kappa) +
                            " >= 10: not projectively rigid if realizable";
    return report;
}

InvariantReport full_report(const CurveSingularityData& data) {
    InvariantReport report{data.d,
                           chi_theta(data),
                           curve_numerics(data),
                           genus_identity_check(data),
                           false,
                           unobstructed_check(data),
                           static_cast<int>(data.cusps.size()),
                           ""};
    report.rigidity_identity_ok = report.chi.chi == 0;
    if (report.cusp_count >= 3) {
        report.kappa_note = rigidity_report(data).kappa_note;
    } else {
        report.kappa_note = "cusp count " + std::to_string(report.cusp_count) +
                            " < 3: rigidity comparison needs at least three cusps";
    }
    return report;
}

}  // namespace cuspidal
