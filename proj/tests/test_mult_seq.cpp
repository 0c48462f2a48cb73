#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cuspidal/multseq.hpp"
#include "cuspidal/serialize.hpp"

using namespace cuspidal;

namespace {

MultiplicitySequence seq(std::vector<int> entries) {
    return MultiplicitySequence(std::move(entries));
}

bool has_violation_mentioning(const ValidationReport& report, const std::string& needle) {
    return std::any_of(report.violations.begin(), report.violations.end(),
                       [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validation accepts canonical sequences") {
    CHECK(validate_sequence({2, 1, 1, 1}).ok);
    CHECK(validate_sequence({4, 2, 2, 1, 1, 1}).ok);
    CHECK(validate_sequence({1}).ok);
    CHECK(validate_sequence({3, 1, 1, 1, 1}).ok);
    CHECK(validate_sequence({6, 3, 3, 2, 1, 1, 1}).ok);  // 6 = 3+3, 3 = 2+1, 2 = 1+1
}

TEST_CASE("validation rejects rule breakers") {
    const ValidationReport tail_short = validate_sequence({3, 1, 1});
    CHECK_FALSE(tail_short.ok);
    CHECK(has_violation_mentioning(tail_short, "(ii)"));

    CHECK_FALSE(validate_sequence({1, 2}).ok);          // increasing
    CHECK_FALSE(validate_sequence({2, 1, 1}).ok);       // two ones only
    CHECK_FALSE(validate_sequence({4, 2, 1, 1, 1}).ok); // 4 = 2+1+1 with unequal run
    CHECK(validate_sequence({3, 2, 1, 1, 1}).ok);       // 3 = 2+1, run of length one
    CHECK_FALSE(validate_sequence({2, 2}).ok);          // must end in 1
    CHECK_FALSE(validate_sequence({0, 1}).ok);
    CHECK_THROWS_AS(validate_sequence({}), EmptyInput);
}

TEST_CASE("condition (i) run structure") {
    // 5 = 2+2+1 has unequal addends before the last: 2,2 equal, fine.
    CHECK(validate_sequence({5, 2, 2, 1, 1, 1}).ok);
    // 5 = 3+1+1 would need the first two addends equal; it fails instead.
    const ValidationReport r = validate_sequence({5, 3, 1, 1, 1, 1});
    CHECK_FALSE(r.ok);
    CHECK(has_violation_mentioning(r, "(i)"));
}

TEST_CASE("canonicalize pads raw lists") {
    CHECK(canonicalize(std::vector<int>{3, 3}) == seq({3, 3, 1, 1, 1, 1}));
    CHECK(canonicalize(std::vector<int>{2}) == seq({2, 1, 1, 1}));
    CHECK(canonicalize(std::vector<int>{4, 2, 2, 1, 1, 1}) == seq({4, 2, 2, 1, 1, 1}));
    CHECK(canonicalize(std::vector<int>{1}) == MultiplicitySequence::smooth());
    CHECK(canonicalize(std::vector<int>{1, 1, 1}) == MultiplicitySequence::smooth());
    CHECK_THROWS_AS(canonicalize(std::vector<int>{3, 1, 1}), PaddingAmbiguous);
    CHECK_THROWS_AS(canonicalize(std::vector<int>{5, 3}), InvalidNotation);
    CHECK_THROWS_AS(canonicalize(std::vector<int>{1, 2}), InvalidNotation);
    CHECK_THROWS_AS(canonicalize(std::vector<int>{}), EmptyInput);
}

TEST_CASE("canonicalize compact notation") {
    CHECK(canonicalize("(2_3)") == seq({2, 2, 2, 1, 1, 1}));
    CHECK(canonicalize("(5)") == seq({5, 1, 1, 1, 1, 1, 1}));
    CHECK(canonicalize("(2)") == seq({2, 1, 1, 1}));
    CHECK(canonicalize("2,2,1,1,1") == seq({2, 2, 1, 1, 1}));
    CHECK(canonicalize("(2,2,1,1,1)") == seq({2, 2, 1, 1, 1}));
    CHECK(canonicalize("3,3") == seq({3, 3, 1, 1, 1, 1}));
    CHECK_THROWS_AS(canonicalize("(1)"), InvalidNotation);
    CHECK_THROWS_AS(canonicalize("(2_0)"), InvalidNotation);
    CHECK_THROWS_AS(canonicalize("(2_"), InvalidNotation);
    CHECK_THROWS_AS(canonicalize("2,,1"), InvalidNotation);
    CHECK_THROWS_AS(canonicalize(""), EmptyInput);
}

TEST_CASE("invariants of the even-cusp family") {
    const SequenceInvariants inv = invariants_of(seq({2, 2, 1, 1, 1}));
    CHECK(inv.milnor == 4);
    CHECK(inv.delta == 2);
    CHECK(inv.eta == 2);
    CHECK(inv.omega == 1);
    CHECK(inv.k == 4);
    CHECK(inv.rho == 2);
}

TEST_CASE("invariants of the one-point family") {
    const SequenceInvariants inv = invariants_of(seq({4, 1, 1, 1, 1, 1}));
    CHECK(inv.eta == 3);
    CHECK(inv.omega == 3);
    CHECK(inv.eta + inv.omega - 1 == 5);  // 2m - 3 with m = 4
}

TEST_CASE("invariants of the smooth germ are zero") {
    const SequenceInvariants inv = invariants_of(MultiplicitySequence::smooth());
    CHECK(inv.milnor == 0);
    CHECK(inv.delta == 0);
    CHECK(inv.eta == 0);
    CHECK(inv.omega == 0);
    CHECK(inv.rho == 0);
    CHECK(inv.k == 0);
}

TEST_CASE("contact orders") {
    CHECK(contact_orders(seq({2, 2, 1, 1, 1})) == std::set<int>{2, 4, 5});
    CHECK(contact_orders(seq({3, 1, 1, 1, 1})) == std::set<int>{3, 4});
    const std::set<int> smooth = contact_orders(MultiplicitySequence::smooth(), 16);
    CHECK(smooth.size() == 16);
    CHECK(smooth.count(1) == 1);
    CHECK(smooth.count(16) == 1);
}

TEST_CASE("exceptional intersection formula") {
    const MultiplicitySequence ordinary = seq({2, 1, 1, 1});
    CHECK(exceptional_intersection(ordinary, 1, 0) == 2);
    CHECK(exceptional_intersection(ordinary, 1, 1) == 1);
    CHECK(exceptional_intersection(ordinary, 1, 2) == 0);
    CHECK(exceptional_intersection(ordinary, 2, 0) == 1);
    CHECK_THROWS_AS(exceptional_intersection(ordinary, 0, 0), IndexOutOfRange);
    CHECK_THROWS_AS(exceptional_intersection(ordinary, 1, 4), IndexOutOfRange);
    CHECK_THROWS_AS(exceptional_intersection(ordinary, 1, -1), IndexOutOfRange);
}

TEST_CASE("enumeration by delta") {
    const auto d1 = enumerate_valid(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == seq({2, 1, 1, 1}));

    const auto d2 = enumerate_valid(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == seq({2, 1, 1, 1}));
    CHECK(d2[1] == seq({2, 2, 1, 1, 1}));

    const auto d3 = enumerate_valid(3);
    CHECK(std::count(d3.begin(), d3.end(), seq({3, 1, 1, 1, 1})) == 1);
    CHECK(std::count(d3.begin(), d3.end(), seq({2, 2, 2, 1, 1, 1})) == 1);

    CHECK_THROWS_AS(enumerate_valid(0), DomainError);
}

TEST_CASE("enumerated sequences satisfy the structural properties") {
    const auto all = enumerate_valid(9);
    CHECK(all.size() > 10);
    for (const auto& s : all) {
        CAPTURE(s.str());
        CHECK(validate_sequence(s.entries()).ok);
        const SequenceInvariants inv = invariants_of(s);
        CHECK(inv.milnor % 2 == 0);
        CHECK(inv.delta <= 9);
        CHECK(inv.omega + inv.rho == inv.k - 1);
        if (inv.k >= 2) CHECK(inv.rho >= 1);

        // format round trip
        CHECK(canonicalize(s.str()) == s);
        const std::string compact = compact_notation(s);
        if (!compact.empty()) CHECK(canonicalize(compact) == s);

        // contact orders contain m0 and m0 + m1
        const std::set<int> contacts = contact_orders(s);
        CHECK(contacts.count(s.entries()[0]) == 1);
        CHECK(contacts.count(s.entries()[0] + s.entries()[1]) == 1);

        // intersection numbers fall off monotonically and die out for i = 1
        for (int i = 1; i <= s.length(); ++i) {
            int prev = exceptional_intersection(s, i, 0);
            for (int k = 1; i + k <= s.length(); ++k) {
                const int cur = exceptional_intersection(s, i, k);
                CHECK(cur <= prev);
                prev = cur;
            }
        }
        CHECK(exceptional_intersection(s, 1, s.length() - 1) == 0);
    }

    // no duplicates
    for (std::size_t i = 1; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(all[i] == all[j]);
}

TEST_CASE("closed forms for the compact families") {
    for (int m = 2; m <= 6; ++m) {
        for (int a = 1; a <= 5; ++a) {
            std::vector<int> entries(static_cast<std::size_t>(a), m);
            entries.insert(entries.end(), static_cast<std::size_t>(m) + 1, 1);
            const MultiplicitySequence s = seq(std::move(entries));
            const SequenceInvariants inv = invariants_of(s);
            CHECK(inv.eta == static_cast<long>(a) * (m - 1));
            if (m == 2) CHECK(inv.omega == 1);
            if (a == 1) CHECK(inv.omega == m - 1);
            const auto compact = s.compact_form();
            REQUIRE(compact.has_value());
            CHECK(compact->first == m);
            CHECK(compact->second == a);
        }
    }
    // contact order maximum of (2_a) matches its larger characteristic exponent
    for (int a = 1; a <= 6; ++a) {
        const MultiplicitySequence s = canonicalize("(2_" + std::to_string(a) + ")");
        CHECK(*contact_orders(s).rbegin() == 2 * a + 1);
    }
}

TEST_CASE("sequence accessors") {
    const MultiplicitySequence s = seq({4, 2, 2, 1, 1, 1});
    CHECK(s.length() == 6);
    CHECK(s.multiplicity() == 4);
    CHECK(s.entry(1) == 2);
    CHECK_THROWS_AS(s.entry(6), IndexOutOfRange);
    CHECK(s.core() == std::vector<int>{4, 2, 2});
    CHECK_FALSE(s.compact_form().has_value());
    CHECK(s.str() == "(4,2,2,1,1,1)");
    CHECK_FALSE(s.is_smooth());
    CHECK(MultiplicitySequence::smooth().is_smooth());
}
