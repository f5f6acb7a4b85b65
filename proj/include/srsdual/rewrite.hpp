#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "srsdual/srs.hpp"

namespace srsdual {

/// input = x . lhs . y and output = x . rhs . y with |x| = position.
struct RewriteStep {
    SymbolString input;
    std::size_t rule = 0;
    std::size_t position = 0;
    SymbolString output;
};

/// A redex: rule `rule` matches at `position`.
struct Redex {
    std::size_t rule = 0;
    std::size_t position = 0;
};

/// Best redex starting exactly at `position`: longest lhs, then lowest index.
std::optional<Redex> redex_at(const Srs& srs, std::span<const Symbol> w, std::size_t position);

/// Leftmost redex with start >= from.
std::optional<Redex> leftmost_redex(const Srs& srs, std::span<const Symbol> w, std::size_t from = 0);

/// Every redex of `w` (all positions, all matching rules).
std::vector<Redex> all_redexes(const Srs& srs, std::span<const Symbol> w);

SymbolString apply_at(const Srs& srs, std::span<const Symbol> w, const Redex& redex);

/// One step at the leftmost redex, or nothing when `w` is irreducible.
std::optional<RewriteStep> rewrite_step(const Srs& srs, const SymbolString& w);

struct NormalizeOptions {
    /// Maximum number of steps. Required for systems that are not length-reducing.
    std::optional<std::size_t> budget;
    bool trace = false;
    std::size_t trace_cap = 10'000;
};

struct NormalizeResult {
    SymbolString normal_form;
    std::size_t steps = 0;
    std::vector<RewriteStep> trace;
    bool trace_truncated = false;
};

/// Leftmost-redex normalization.
/// Throws PreconditionError when the system is not length-reducing and no
/// budget is given, BudgetExhausted when the budget runs out.
NormalizeResult normalize(const Srs& srs, const SymbolString& w, const NormalizeOptions& options = {});

/// Shorthand for normalize(...).normal_form.
SymbolString normal_form(const Srs& srs, const SymbolString& w);

/// In-place normalization of `w`, assuming no redex starts before `from`.
/// Returns the number of steps taken; throws BudgetExhausted past `budget`.
std::size_t normalize_in_place(const Srs& srs, SymbolString& w, std::size_t from = 0,
                               std::size_t budget = static_cast<std::size_t>(-1));

/// NF(u . s) for irreducible u.
SymbolString extend_normal_form(const Srs& srs, const SymbolString& u, Symbol s);

/// Equal normal forms. Requires check_convergent(srs).convergent.
bool joinable(const Srs& srs, const SymbolString& u, const SymbolString& v);

}  // namespace srsdual
