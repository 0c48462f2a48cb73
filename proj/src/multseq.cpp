#include "cuspidal/multseq.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cuspidal {

namespace {

// Indices of the condition (i) greedy check: the partial sums of the
// entries after m_{i-1} are strictly increasing, so at most one run length
// can match.
void check_condition_i(const std::vector<int>& e, ValidationReport& report) {
    const int n = static_cast<int>(e.size());
    for (int i = 1; i < n; ++i) {
        const int target = e[static_cast<std::size_t>(i - 1)];
        int total = 0;
        int j = i;
        while (total < target && j < n) total += e[static_cast<std::size_t>(j++)];
        if (total != target) {
            report.ok = false;
            report.violations.push_back(
                "condition (i) fails at index " + std::to_string(i - 1) + ": entry " +
                std::to_string(target) + " is not a sum of the following run");
            continue;
        }
        // All but the last addend (indices i .. j-2) must be equal.
        for (int s = i + 1; s <= j - 2; ++s) {
            if (e[static_cast<std::size_t>(s)] != e[static_cast<std::size_t>(i)]) {
                report.ok = false;
                report.violations.push_back(
                    "condition (i) fails at index " + std::to_string(i - 1) +
                    ": addends before the last are not all equal");
                break;
            }
        }
    }
}

void check_condition_ii(const std::vector<int>& e, ValidationReport& report) {
    int r = 0;
    int idx = static_cast<int>(e.size()) - 1;
    while (idx >= 0 && e[static_cast<std::size_t>(idx)] == 1) {
        ++r;
        --idx;
    }
    if (idx < 0) return;  // all ones: smooth, nothing to check
    const int m = e[static_cast<std::size_t>(idx)];
    if (m != r - 1) {
        report.ok = false;
        report.violations.push_back(
            "condition (ii) fails: final entry " + std::to_string(m) + " at index " +
            std::to_string(idx) + " must be followed by exactly " + std::to_string(m + 1) +
            " ones (found " + std::to_string(r) + ")");
    }
}

}  // namespace

ValidationReport validate_sequence(const std::vector<int>& entries) {
    if (entries.empty()) throw EmptyInput();
    ValidationReport report;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 1) {
            report.ok = false;
            report.violations.push_back("entry at index " + std::to_string(i) +
                                        " is not positive");
            return report;
        }
    }
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i] > entries[i - 1]) {
            report.ok = false;
            report.violations.push_back("sequence increases at index " + std::to_string(i));
            return report;
        }
    }
    if (entries.back() != 1) {
        report.ok = false;
        report.violations.push_back("final entry must be 1");
    }
    check_condition_i(entries, report);
    check_condition_ii(entries, report);
    return report;
}

MultiplicitySequence::MultiplicitySequence(std::vector<int> entries) : e_(std::move(entries)) {
    ValidationReport report = validate_sequence(e_);
    if (!report.ok) {
        std::string msg = "invalid multiplicity sequence";
        for (const auto& v : report.violations) msg += "; " + v;
        throw InvalidNotation(msg);
    }
    // Normalize the smooth germ to a single entry.
    if (e_.front() == 1) e_.assign(1, 1);
}

int MultiplicitySequence::entry(int i) const {
    if (i < 0 || i >= length()) throw IndexOutOfRange("sequence index " + std::to_string(i));
    return e_[static_cast<std::size_t>(i)];
}

std::optional<std::pair<int, int>> MultiplicitySequence::compact_form() const {
    if (is_smooth()) return std::nullopt;
    const int m = e_.front();
    int a = 0;
    std::size_t pos = 0;
    while (pos < e_.size() && e_[pos] == m) {
        ++a;
        ++pos;
    }
    const int ones = static_cast<int>(e_.size() - pos);
    for (std::size_t i = pos; i < e_.size(); ++i)
        if (e_[i] != 1) return std::nullopt;
    if (ones != m + 1) return std::nullopt;
    return std::make_pair(m, a);
}

std::vector<int> MultiplicitySequence::core() const {
    std::vector<int> c;
    for (int v : e_)
        if (v > 1) c.push_back(v);
    return c;
}

std::string MultiplicitySequence::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ",";
        os << e_[i];
    }
    os << ")";
    return os.str();
}

MultiplicitySequence canonicalize(const std::vector<int>& raw) {
    if (raw.empty()) throw EmptyInput();
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i] < 1)
            throw InvalidNotation("entry at index " + std::to_string(i) + " is not positive");
    for (std::size_t i = 1; i < raw.size(); ++i)
        if (raw[i] > raw[i - 1])
            throw InvalidNotation("sequence increases at index " + std::to_string(i));

    if (std::all_of(raw.begin(), raw.end(), [](int v) { return v == 1; }))
        return MultiplicitySequence::smooth();

    std::vector<int> full = raw;
    if (raw.back() > 1) {
        full.insert(full.end(), static_cast<std::size_t>(raw.back()) + 1, 1);
    } else {
        ValidationReport report = validate_sequence(full);
        if (!report.ok) {
            const bool tail_issue =
                std::any_of(report.violations.begin(), report.violations.end(),
                            [](const std::string& v) { return v.find("(ii)") != std::string::npos; });
            if (tail_issue) {
                std::string msg = "list ends in ones but is not in canonical form";
                for (const auto& v : report.violations) msg += "; " + v;
                throw PaddingAmbiguous(msg);
            }
        }
    }
    return MultiplicitySequence(std::move(full));
}

MultiplicitySequence canonicalize(std::string_view notation) {
    std::string s;
    for (char ch : notation)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw EmptyInput();

    if (s.front() == '(' && s.find(',') != std::string::npos) {
        // Parenthesized raw list "(2,2,1,1,1)".
        if (s.back() != ')') throw InvalidNotation("unbalanced parentheses in '" + s + "'");
        s = s.substr(1, s.size() - 2);
    } else if (s.front() == '(') {
        if (s.back() != ')') throw InvalidNotation("unbalanced parentheses in '" + s + "'");
        const std::string body = s.substr(1, s.size() - 2);
        const auto underscore = body.find('_');
        auto parse_int = [&](const std::string& text) -> int {
            if (text.empty() ||
                !std::all_of(text.begin(), text.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw InvalidNotation("bad compact notation '" + s + "'");
            return std::stoi(text);
        };
        const int m = parse_int(underscore == std::string::npos ? body
                                                                : body.substr(0, underscore));
        const int a =
            underscore == std::string::npos ? 1 : parse_int(body.substr(underscore + 1));
        if (m < 2) throw InvalidNotation("compact notation needs multiplicity >= 2");
        if (a < 1) throw InvalidNotation("compact notation needs a >= 1");
        std::vector<int> full(static_cast<std::size_t>(a), m);
        full.insert(full.end(), static_cast<std::size_t>(m) + 1, 1);
        return MultiplicitySequence(std::move(full));
    }

    std::vector<int> raw;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InvalidNotation("expected integer in sequence list");
        raw.push_back(std::stoi(s.substr(start, pos - start)));
        if (pos < s.size()) {
            if (s[pos] != ',') throw InvalidNotation("expected ',' in sequence list");
            ++pos;
            if (pos == s.size()) throw InvalidNotation("trailing ',' in sequence list");
        }
    }
    return canonicalize(raw);
}

SequenceInvariants invariants_of(const MultiplicitySequence& seq) {
    SequenceInvariants inv;
    if (seq.is_smooth()) return inv;

    const auto& e = seq.entries();
    for (int m : e) {
        inv.milnor += static_cast<long>(m) * (m - 1);
        inv.eta += m - 1;
    }
    inv.delta = inv.milnor / 2;
    inv.k = seq.length() - 1;
    for (std::size_t i = 1; i < e.size(); ++i) {
        const int prev = e[i - 1];
        const int cur = e[i];
        inv.omega += (prev + cur - 1) / cur - 1;  // ceil(prev/cur) - 1
    }
    inv.rho = inv.k - 1 - inv.omega;
    return inv;
}

std::set<int> contact_orders(const MultiplicitySequence& seq, int smooth_cap) {
    std::set<int> out;
    if (seq.is_smooth()) {
        for (int k = 1; k <= smooth_cap; ++k) out.insert(k);
        return out;
    }
    const auto& e = seq.entries();
    const int m0 = e.front();
    int run = 0;
    while (run < seq.length() && e[static_cast<std::size_t>(run)] == m0) ++run;
    // s = 0 .. run; entries beyond the stored length would all be 1 but are
    // never needed: s <= run < length.
    int sum = 0;
    for (int s = 0; s <= run; ++s) {
        sum += e[static_cast<std::size_t>(s)];
        out.insert(sum);
    }
    return out;
}

int exceptional_intersection(const MultiplicitySequence& seq, int i, int k) {
    if (i < 1 || k < 0 || i + k > seq.length())
        throw IndexOutOfRange("exceptional intersection needs 1 <= i and i + k <= length");
    const auto& e = seq.entries();
    if (k == 0) return e[static_cast<std::size_t>(i - 1)];
    long v = e[static_cast<std::size_t>(i - 1)];
    for (int j = i; j <= i + k - 1; ++j) v -= e[static_cast<std::size_t>(j)];
    return v > 0 ? static_cast<int>(v) : 0;
}

namespace {

void enumerate_cores(std::vector<int>& core, long delta_left, int max_entry,
                     std::vector<MultiplicitySequence>& out) {
    if (!core.empty()) {
        std::vector<int> full = core;
        full.insert(full.end(), static_cast<std::size_t>(core.back()) + 1, 1);
        if (validate_sequence(full).ok) out.emplace_back(std::move(full));
    }
    for (int m = 2; m <= max_entry; ++m) {
        const long cost = static_cast<long>(m) * (m - 1) / 2;
        if (cost > delta_left) break;
        core.push_back(m);
        enumerate_cores(core, delta_left - cost, m, out);
        core.pop_back();
    }
}

}  // namespace

std::vector<MultiplicitySequence> enumerate_valid(int max_delta) {
    if (max_delta < 1) throw DomainError("enumeration needs max_delta >= 1");
    std::vector<MultiplicitySequence> out;
    std::vector<int> core;
    int max_entry = 2;
    while (static_cast<long>(max_entry + 1) * max_entry / 2 <= max_delta) ++max_entry;
    enumerate_cores(core, max_delta, max_entry, out);
    std::sort(out.begin(), out.end(),
              [](const MultiplicitySequence& a, const MultiplicitySequence& b) {
                  const long da = invariants_of(a).delta;
                  const long db = invariants_of(b).delta;
                  if (da != db) return da < db;
                  return a < b;
              });
    return out;
}

}  // namespace cuspidal
