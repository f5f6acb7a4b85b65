#include "srsdual/analysis.hpp"

#include <algorithm>

#include "srsdual/error.hpp"
#include "srsdual/rewrite.hpp"

namespace srsdual {

namespace {

bool is_proper_prefix(const SymbolString& p, const SymbolString& w) {
    return p.size() < w.size() && std::equal(p.begin(), p.end(), w.begin());
}

std::optional<SymbolString> budgeted_normal_form(const Srs& srs, const SymbolString& w,
                                                 std::optional<std::size_t> budget) {
    SymbolString out = w;
    try {
        normalize_in_place(srs, out, 0, budget.value_or(static_cast<std::size_t>(-1)));
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
    return out;
}

}  // namespace

ClassReport classify(const Srs& srs) {
    ClassReport rep;
    for (const Rule& r : srs.rules()) {
        RuleClass rc;
        rc.monadic = r.rhs.size() <= 1;
        rc.dwindling = is_proper_prefix(r.rhs, r.lhs);
        rc.length_reducing = r.lhs.size() > r.rhs.size();
        rep.monadic = rep.monadic && rc.monadic;
        rep.dwindling = rep.dwindling && rc.dwindling;
        rep.length_reducing = rep.length_reducing && rc.length_reducing;
        rep.per_rule.push_back(rc);
    }
    const auto& rules = srs.rules();
    for (std::size_t i = 0; i < rules.size() && rep.inter_reduced; ++i)
        for (std::size_t j = 0; j < rules.size(); ++j)
            if (i != j && contains_factor(rules[i].lhs, rules[j].lhs)) {
                rep.inter_reduced = false;
                break;
            }
    rep.orthogonal = critical_pairs(srs).empty();
    rep.terminating_by_length = rep.length_reducing;
    return rep;
}

std::vector<CriticalPair> critical_pairs(const Srs& srs) {
    std::vector<CriticalPair> out;
    const auto& rules = srs.rules();
    auto emit = [&](const SymbolString& peak, OverlapKind kind, std::size_t i, std::size_t pi,
                    std::size_t j, std::size_t pj) {
        CriticalPair cp;
        cp.peak = peak;
        cp.kind = kind;
        cp.first_rule = i;
        cp.second_rule = j;
        cp.first_position = pi;
        cp.second_position = pj;
        cp.left_result = apply_at(srs, peak, Redex{i, pi});
        cp.right_result = apply_at(srs, peak, Redex{j, pj});
        out.push_back(std::move(cp));
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const SymbolString& l1 = rules[i].lhs;
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const SymbolString& l2 = rules[j].lhs;
            // Proper suffix of l1 of length k equals proper prefix of l2.
            for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
                if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
                SymbolString peak = l1;
                peak.insert(peak.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
                emit(peak, OverlapKind::suffix_prefix, i, 0, j, l1.size() - k);
            }
            if (i == j || l2.size() > l1.size()) continue;
            if (l1 == l2 && j < i) continue;  // identical lhs: once, as (lower, higher)
            for (std::size_t q = 0; q + l2.size() <= l1.size(); ++q)
                if (std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(q)))
                    emit(l1, OverlapKind::containment, i, 0, j, q);
        }
    }
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

ConvergenceReport check_convergent(const Srs& srs, std::size_t peak_budget) {
    ConvergenceReport rep;
    const bool terminating = srs.length_reducing();
    rep.terminating = terminating ? Verdict::yes : Verdict::unknown;
    const std::optional<std::size_t> budget =
        terminating ? std::nullopt : std::optional<std::size_t>(peak_budget);

    bool all_joined = true;
    for (const CriticalPair& cp : critical_pairs(srs)) {
        auto left = budgeted_normal_form(srs, cp.left_result, budget);
        auto right = budgeted_normal_form(srs, cp.right_result, budget);
        if (!left || !right) {
            all_joined = false;
            continue;
        }
        // Distinct normal forms of one peak refute confluence; with termination
        // (Newman) that is the same as refuting local confluence.
        if (*left != *right) {
            rep.locally_confluent = terminating ? Verdict::no : Verdict::unknown;
            rep.unjoinable_pair = cp;
            rep.convergent = false;
            return rep;
        }
    }
    rep.locally_confluent = all_joined ? Verdict::yes : Verdict::unknown;
    rep.convergent = terminating && all_joined;
    return rep;
}

}  // namespace srsdual
