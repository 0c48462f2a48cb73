#include "cuspidal/fixtures.hpp"

namespace cuspidal {

namespace {

struct Term {
    long num;
    long den;
    int i;
    int j;
};

BiPoly from_terms(std::initializer_list<Term> terms) {
    BiPoly p;
    for (const auto& t : terms) p.add_term(Rat(t.num, t.den), t.i, t.j);
    return p;
}

std::vector<GoldenFixture> build_fixtures() {
    std::vector<GoldenFixture> out;

    out.push_back(GoldenFixture{
        4, 1,
        from_terms({{-1, 4, 2, 2}}),
        from_terms({{1, 1, 0, 1}, {1, 1, 1, 0}})});

    out.push_back(GoldenFixture{
        5, 2,
        from_terms({{1, 64, 2, 3}, {-9, 64, 3, 2}}),
        from_terms({{3, 2, 1, 1}, {-1, 4, 0, 2}, {3, 4, 2, 0}})});

    out.push_back(GoldenFixture{
        6, 2,
        from_terms({{7, 128, 3, 3}, {-1, 256, 4, 2}, {-1, 256, 2, 4}}),
        from_terms({{9, 8, 1, 2}, {-1, 8, 0, 3}, {9, 8, 2, 1}, {-1, 8, 3, 0}})});

    out.push_back(GoldenFixture{
        6, 3,
        from_terms({{3, 128, 3, 3}, {-25, 256, 4, 2}, {-1, 256, 2, 4}}),
        from_terms({{1, 8, 0, 3}, {-5, 8, 1, 2}, {15, 8, 2, 1}, {5, 8, 3, 0}})});

    out.push_back(GoldenFixture{
        7, 3,
        from_terms(
            {{475, 16384, 4, 3}, {-25, 16384, 5, 2}, {-75, 16384, 3, 4}, {9, 16384, 2, 5}}),
        from_terms(
            {{3, 64, 0, 4}, {-5, 16, 1, 3}, {45, 32, 2, 2}, {15, 16, 3, 1}, {-5, 64, 4, 0}})});

    out.push_back(GoldenFixture{
        7, 4,
        from_terms(
            {{459, 16384, 4, 3}, {-1225, 16384, 5, 2}, {-155, 16384, 3, 4}, {25, 16384, 2, 5}}),
        from_terms(
            {{7, 16, 1, 3}, {-5, 64, 0, 4}, {-35, 32, 2, 2}, {35, 16, 3, 1}, {35, 64, 4, 0}})});

    return out;
}

}  // namespace

BiPoly GoldenFixture::equation() const {
    return residual - pow(x_minus_y(), static_cast<unsigned>(d - 2)) +
           BiPoly::monomial(Rat(1), 1, 1) * xy_group;
}

const std::vector<GoldenFixture>& golden_fixtures() {
    static const std::vector<GoldenFixture> fixtures = build_fixtures();
    return fixtures;
}

const GoldenFixture* find_fixture(int d, int a) {
    for (const auto& fixture : golden_fixtures())
        if (fixture.d == d && fixture.a == a) return &fixture;
    return nullptr;
}

}  // namespace cuspidal
