#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cuspidal/errors.hpp"

// Multiplicity sequences of plane-curve cusps, stored in full canonical
// form: non-increasing, final entry 1, trailing ones included. A canonical
// sequence satisfies two structural rules:
//
//   (i)  each entry is the sum of a run of the following entries, all but
//        the last of which are equal:  m_{i-1} = m_i + ... + m_{i+k} with
//        m_i = ... = m_{i+k-1};
//   (ii) the final entry > 1 is followed by exactly that value + 1 ones.
//
// The smooth germ is the one-entry sequence (1) with every invariant zero.

namespace cuspidal {

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks the canonical-form rules on a raw entry list. Throws EmptyInput.
ValidationReport validate_sequence(const std::vector<int>& entries);

class MultiplicitySequence {
public:
    /// Validates; throws InvalidNotation when the rules fail.
    explicit MultiplicitySequence(std::vector<int> entries);

    static MultiplicitySequence smooth() { return MultiplicitySequence({1}); }

    const std::vector<int>& entries() const { return e_; }
    int length() const { return static_cast<int>(e_.size()); }
    int entry(int i) const;
    int multiplicity() const { return e_.front(); }  // m_0
    bool is_smooth() const { return e_.front() == 1; }

    /// (m, a) when the sequence is a copies of m followed by m+1 ones.
    std::optional<std::pair<int, int>> compact_form() const;

    /// Entries before the trailing ones (empty for the smooth germ).
    std::vector<int> core() const;

    std::string str() const;  // "(2,2,1,1,1)"

    friend bool operator==(const MultiplicitySequence& a, const MultiplicitySequence& b) {
        return a.e_ == b.e_;
    }
    friend bool operator<(const MultiplicitySequence& a, const MultiplicitySequence& b) {
        return a.e_ < b.e_;
    }

private:
    std::vector<int> e_;
};

/// Raw list whose trailing ones may be omitted; pads with (last entry + 1)
/// ones. A list already ending in ones must be in full canonical form.
MultiplicitySequence canonicalize(const std::vector<int>& raw);

/// Compact notation "(m)" / "(m_a)", or a comma-separated raw list.
MultiplicitySequence canonicalize(std::string_view notation);

struct SequenceInvariants {
    long milnor = 0;  // mu = sum m_i (m_i - 1)
    long delta = 0;   // mu / 2
    long eta = 0;     // sum (m_i - 1)
    long omega = 0;   // inner blow-up count
    long rho = 0;     // outer blow-up count
    long k = 0;       // total blow-ups = length - 1
};

SequenceInvariants invariants_of(const MultiplicitySequence& seq);

/// All intersection numbers of smooth germs through the cusp point with the
/// branch. For the smooth sequence every positive value occurs; those are
/// capped at smooth_cap.
std::set<int> contact_orders(const MultiplicitySequence& seq, int smooth_cap = 16);

/// Intersection of the k-th proper transform of the i-th exceptional curve
/// with the matching proper transform of the branch: m_{i-1} for k = 0,
/// otherwise max(0, m_{i-1} - m_i - ... - m_{i+k-1}).
int exceptional_intersection(const MultiplicitySequence& seq, int i, int k);

/// Every canonical sequence with delta <= max_delta, sorted by (delta,
/// entries). Enumeration utility for property tests.
std::vector<MultiplicitySequence> enumerate_valid(int max_delta);

}  // namespace cuspidal
