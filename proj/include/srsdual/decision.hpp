#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srsdual/srs.hpp"

namespace srsdual {

/// Find W with alpha W <->*_R beta W.
struct CtQuery {
    Srs srs;
    SymbolString alpha;
    SymbolString beta;
};

/// Find non-trivial (W1, W2) with alpha1 W1 <->* alpha2 W2 and beta1 W1 <->* beta2 W2.
struct CeQuery {
    Srs srs;
    SymbolString alpha1;
    SymbolString alpha2;
    SymbolString beta1;
    SymbolString beta2;
};

enum class SearchStatus { found, exhausted };

/// `exhausted` only states that nothing verified up to `bound`.
struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<SymbolString> witness;  // empty, {W} or {W1, W2}
    std::size_t bound = 0;
    std::size_t examined = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
    bool operator==(const SearchOutcome&) const = default;
};

struct SearchOptions {
    std::size_t max_len = 0;
    /// Needed for systems not certified convergent: step budget per bounded
    /// <-> check (see bounded_equivalent).
    std::optional<std::size_t> rewrite_budget;
};

SearchOutcome ct_search(const CtQuery& q, const SearchOptions& options);
SearchOutcome ct_search(const CtQuery& q, std::size_t max_len);

/// Fixed point: delegates to ct_search with beta = lambda.
SearchOutcome fp_search(const Srs& srs, const SymbolString& alpha, const SearchOptions& options);
SearchOutcome fp_search(const Srs& srs, const SymbolString& alpha, std::size_t max_len);

/// Pairs are ordered by W2 first, then W1, each in length-lex order.
/// Non-trivial means NF(W1) != NF(W2); on the bounded route, W1 != W2 and no
/// W1 <-> W2 path shown within the budget.
SearchOutcome ce_search(const CeQuery& q, const SearchOptions& options);
SearchOutcome ce_search(const CeQuery& q, std::size_t max_len);

/// Length-lex enumeration of all words of length 0..max_len over ids 0..alphabet_size-1.
class CandidateStream {
public:
    CandidateStream(std::size_t alphabet_size, std::size_t max_len);

    /// Current candidate; valid while !done().
    const SymbolString& current() const noexcept { return current_; }
    bool done() const noexcept { return done_; }
    void advance();

private:
    std::size_t width_;
    std::size_t max_len_;
    SymbolString current_;
    bool done_ = false;
};

std::vector<SymbolString> enumerate_candidates(const Alphabet& alphabet, std::size_t max_len);

/// Bounded bidirectional breadth-first search over <->_R. `budget` caps the
/// number of generated one-step neighbours. True means a common string was
/// reached; false means "not shown within budget".
bool bounded_equivalent(const Srs& srs, const SymbolString& u, const SymbolString& v,
                        std::size_t budget);

/// Longest prefix of irreducible `u` that no suffix of length <= remaining can
/// change under normalization. Pass nullopt for an unbounded suffix.
std::size_t untouchable_prefix(const Srs& srs, const SymbolString& u,
                               std::optional<std::size_t> remaining);

/// Line-oriented report: status, witness, bound, examined.
std::string format_outcome(const Srs& srs, const SearchOutcome& outcome);

const char* to_string(SearchStatus s);

}  // namespace srsdual
