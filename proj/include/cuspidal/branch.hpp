#pragma once

#include <functional>
#include <string_view>

#include "cuspidal/multseq.hpp"
#include "cuspidal/powseries.hpp"

// Multiplicity sequences of parametrized plane-curve germs, computed by
// iterated blow-up on the parametrization. Inputs must be primitive
// parametrizations; a germ like (t^4, t^6) traversing its image twice is
// not detected and gives wrong results.

namespace cuspidal {

struct BranchGerm {
    PowSeries x;
    PowSeries y;

    /// Validates x(0) = y(0) = 0 and that not both components vanish to
    /// precision.
    BranchGerm(PowSeries x_series, PowSeries y_series);

    int precision() const;
};

/// Multiplicity of the germ at the origin: min(ord x, ord y). Throws
/// PrecisionExhausted when neither order is visible.
int germ_multiplicity(const BranchGerm& g);

struct BlowupStep {
    int multiplicity;
    BranchGerm next;
    // Chart bookkeeping, used by blow-up simulations: the germ was blown up
    // in the chart of its lower-order coordinate (components swapped when
    // that was y), and the new center sits at first-chart value
    // center_shift.
    bool swapped;
    Rat center_shift;
};

/// One blow-up: with ord x <= ord y the proper transform in the x-chart is
/// (x, y/x - c), c the constant term of y/x; components swap first when
/// ord y < ord x. Precision drops by the multiplicity.
BlowupStep blowup_step(const BranchGerm& g);

/// Blow up until the germ is smooth, then append the trailing ones the
/// canonical form requires (final entry > 1 followed by that value + 1
/// ones). Throws PrecisionExhausted when the series run out of terms.
MultiplicitySequence resolve_sequence(const BranchGerm& g);

/// Retry policy around resolve_sequence: regenerate the germ at doubled
/// precision on PrecisionExhausted, up to max_precision.
MultiplicitySequence resolve_with_retry(const std::function<BranchGerm(int)>& make_germ,
                                        int initial_precision,
                                        int max_precision = 16384);

/// True iff the germ (with x a nonzero multiple of t^2) has multiplicity
/// sequence exactly (2_expected_r): after clearing the even coefficients of
/// y by a polynomial in x, the first expected_r odd coefficients vanish and
/// the next one does not. Needs precision > 2*expected_r + 1.
bool detect_even_cusp(const BranchGerm& g, int expected_r);

/// Sum-of-terms expression "q*t^k + ...", rationals as "num/den".
UniPoly parse_branch_poly(std::string_view expr);

/// Parses both coordinates; rejects expressions with a nonzero constant
/// term (NonvanishingAtZero).
BranchGerm parse_branch(std::string_view expr_x, std::string_view expr_y, int precision);

}  // namespace cuspidal
