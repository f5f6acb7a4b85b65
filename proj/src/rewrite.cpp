#include "srsdual/rewrite.hpp"

#include <algorithm>

#include "srsdual/analysis.hpp"
#include "srsdual/error.hpp"

namespace srsdual {

std::optional<Redex> redex_at(const Srs& srs, std::span<const Symbol> w, std::size_t position) {
    const LhsIndex& idx = srs.index();
    std::int32_t node = 0;
    std::optional<Redex> best;
    for (std::size_t i = position; i < w.size(); ++i) {
        node = idx.child(node, w[i]);
        if (node == LhsIndex::kNone) break;
        // Deeper terminals win (longest lhs); the first terminal has the lowest index.
        if (const auto& t = idx.terminal(node); !t.empty()) best = Redex{t.front(), position};
    }
    return best;
}

std::optional<Redex> leftmost_redex(const Srs& srs, std::span<const Symbol> w, std::size_t from) {
    for (std::size_t p = from; p < w.size(); ++p)
        if (auto r = redex_at(srs, w, p)) return r;
    return std::nullopt;
}

std::vector<Redex> all_redexes(const Srs& srs, std::span<const Symbol> w) {
    std::vector<Redex> out;
    const LhsIndex& idx = srs.index();
    for (std::size_t p = 0; p < w.size(); ++p) {
        std::int32_t node = 0;
        for (std::size_t i = p; i < w.size(); ++i) {
            node = idx.child(node, w[i]);
            if (node == LhsIndex::kNone) break;
            for (std::size_t r : idx.terminal(node)) out.push_back({r, p});
        }
    }
    return out;
}

SymbolString apply_at(const Srs& srs, std::span<const Symbol> w, const Redex& redex) {
    const Rule& r = srs.rule(redex.rule);
    SymbolString out;
    out.reserve(w.size() - r.lhs.size() + r.rhs.size());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(redex.position));
    out.insert(out.end(), r.rhs.begin(), r.rhs.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(redex.position + r.lhs.size()), w.end());
    return out;
}

std::optional<RewriteStep> rewrite_step(const Srs& srs, const SymbolString& w) {
    auto r = leftmost_redex(srs, w);
    if (!r) return std::nullopt;
    return RewriteStep{w, r->rule, r->position, apply_at(srs, w, *r)};
}

namespace {

// Replaces the redex in place and returns where the next leftmost redex can start.
std::size_t rewrite_in_place(const Srs& srs, SymbolString& w, const Redex& redex) {
    const Rule& r = srs.rule(redex.rule);
    const auto at = w.begin() + static_cast<std::ptrdiff_t>(redex.position);
    const auto common = std::min(r.lhs.size(), r.rhs.size());
    std::copy(r.rhs.begin(), r.rhs.begin() + static_cast<std::ptrdiff_t>(common), at);
    if (r.rhs.size() < r.lhs.size()) {
        w.erase(at + static_cast<std::ptrdiff_t>(common),
                at + static_cast<std::ptrdiff_t>(r.lhs.size()));
    } else {
        w.insert(at + static_cast<std::ptrdiff_t>(common),
                 r.rhs.begin() + static_cast<std::ptrdiff_t>(common), r.rhs.end());
    }
    // No redex started before `position`; a new one must overlap the rewritten region.
    const std::size_t reach = srs.max_lhs_length() - 1;
    return redex.position > reach ? redex.position - reach : 0;
}

}  // namespace

std::size_t normalize_in_place(const Srs& srs, SymbolString& w, std::size_t from, std::size_t budget) {
    std::size_t steps = 0;
    while (auto r = leftmost_redex(srs, w, from)) {
        if (steps == budget) throw BudgetExhausted("normalization budget of " + std::to_string(budget) + " steps exhausted");
        from = rewrite_in_place(srs, w, *r);
        ++steps;
    }
    return steps;
}

NormalizeResult normalize(const Srs& srs, const SymbolString& w, const NormalizeOptions& options) {
    if (!options.budget && !srs.length_reducing())
        throw PreconditionError("normalize: system is not length-reducing; pass an explicit step budget");
    const std::size_t budget = options.budget.value_or(static_cast<std::size_t>(-1));
    NormalizeResult res;
    res.normal_form = w;
    if (!options.trace) {
        res.steps = normalize_in_place(srs, res.normal_form, 0, budget);
        return res;
    }
    std::size_t from = 0;
    while (auto r = leftmost_redex(srs, res.normal_form, from)) {
        if (res.steps == budget) throw BudgetExhausted("normalization budget of " + std::to_string(budget) + " steps exhausted");
        SymbolString before = res.normal_form;
        from = rewrite_in_place(srs, res.normal_form, *r);
        ++res.steps;
        if (res.trace.size() < options.trace_cap)
            res.trace.push_back({std::move(before), r->rule, r->position, res.normal_form});
        else
            res.trace_truncated = true;
    }
    return res;
}

SymbolString normal_form(const Srs& srs, const SymbolString& w) {
    return normalize(srs, w).normal_form;
}

SymbolString extend_normal_form(const Srs& srs, const SymbolString& u, Symbol s) {
    SymbolString w;
    w.reserve(u.size() + 1);
    w = u;
    w.push_back(s);
    const std::size_t n = w.size();
    const std::size_t m = srs.max_lhs_length();
    normalize_in_place(srs, w, n > m ? n - m : 0);
    return w;
}

bool joinable(const Srs& srs, const SymbolString& u, const SymbolString& v) {
    if (!check_convergent(srs).convergent)
        throw PreconditionError("joinable: system is not certified convergent");
    return normal_form(srs, u) == normal_form(srs, v);
}

}  // namespace srsdual
