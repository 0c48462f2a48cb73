#pragma once

#include <vector>

#include "cuspidal/bipoly.hpp"

// Embedded affine equations of the six curves of degree 4 through 7, stored
// exactly as printed: residual terms, the -(X-Y)^(d-2) block, and the
// XY-grouped part. Golden data for the equation construction.

namespace cuspidal {

struct GoldenFixture {
    int d;
    int a;
    BiPoly residual;
    BiPoly xy_group;

    BiPoly equation() const;
};

const std::vector<GoldenFixture>& golden_fixtures();

/// nullptr when the pair is not one of the six embedded equations.
const GoldenFixture* find_fixture(int d, int a);

}  // namespace cuspidal
