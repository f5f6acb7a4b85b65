#include "srsdual/decision.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "srsdual/analysis.hpp"
#include "srsdual/error.hpp"
#include "srsdual/rewrite.hpp"

namespace srsdual {

// ---------------------------------------------------------------------------
// Candidate order

CandidateStream::CandidateStream(std::size_t alphabet_size, std::size_t max_len)
    : width_(alphabet_size), max_len_(max_len) {}

void CandidateStream::advance() {
    if (done_) return;
    // Odometer increment in length-lex order; overflow moves to the next length.
    for (std::size_t i = current_.size(); i-- > 0;) {
        const auto next = index_of(current_[i]) + 1;
        if (next < width_) {
            current_[i] = static_cast<Symbol>(next);
            return;
        }
        current_[i] = static_cast<Symbol>(0);
    }
    if (current_.size() == max_len_ || width_ == 0) {
        done_ = true;
        return;
    }
    current_.assign(current_.size() + 1, static_cast<Symbol>(0));
}

std::vector<SymbolString> enumerate_candidates(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<SymbolString> out;
    for (CandidateStream cs(alphabet.size(), max_len); !cs.done(); cs.advance()) out.push_back(cs.current());
    return out;
}

// ---------------------------------------------------------------------------
// Pruning

std::size_t untouchable_prefix(const Srs& srs, const SymbolString& u, std::optional<std::size_t> remaining) {
    const LhsIndex& trie = srs.index();
    const std::size_t n = u.size();
    const std::size_t m = srs.max_lhs_length();
    // With a dwindling system, appending one symbol to an irreducible word fires at
    // most one rule and leaves a prefix of the word. So the boundary of the untouched
    // prefix only drops through a redex u[p..d) + (fresh symbols), costing the fresh
    // symbols, and lands at p + |rhs|. Otherwise the boundary just drops to p for free.
    const bool priced = srs.dwindling() && remaining.has_value();
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cost(n + 1, kInf);
    cost[n] = 0;
    const std::size_t limit = priced ? *remaining : kInf;
    std::size_t best = n;
    for (std::size_t d = n; d > 0; --d) {
        if (cost[d] > limit) continue;
        best = d;
        const std::size_t lowest = d >= m ? d - m + 1 : 0;
        for (std::size_t p = d; p-- > lowest;) {
            const auto node = trie.walk(std::span<const Symbol>(u).subspan(p, d - p));
            if (node == LhsIndex::kNone) continue;
            for (std::size_t r : trie.below(node)) {
                const Rule& rule = srs.rule(r);
                if (rule.lhs.size() <= d - p) continue;
                std::size_t to = p;
                std::size_t c = cost[d];
                if (srs.dwindling()) to = p + rule.rhs.size();
                if (priced) c += rule.lhs.size() - (d - p);
                if (to < d && c < cost[to]) cost[to] = c;
            }
        }
    }
    if (cost[0] <= limit) best = 0;
    return best;
}

namespace {

constexpr auto kSeparator = static_cast<Symbol>(std::numeric_limits<std::uint16_t>::max());

SymbolString state_key(const std::vector<SymbolString>& sides) {
    SymbolString key;
    for (const auto& s : sides) {
        key.insert(key.end(), s.begin(), s.end());
        key.push_back(kSeparator);
    }
    return key;
}

bool prefix_compatible(const SymbolString& a, std::size_t la, const SymbolString& b, std::size_t lb) {
    const std::size_t k = std::min(la, lb);
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k), b.begin());
}

bool prefix_of(const SymbolString& a, std::size_t la, const SymbolString& target) {
    return la <= target.size() && std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(la), target.begin());
}

struct Node {
    std::vector<SymbolString> sides;
    std::size_t parent;
    Symbol symbol;
    std::size_t depth;
};

SymbolString path_of(const std::vector<Node>& nodes, std::size_t i) {
    SymbolString w;
    while (i != 0) {
        w.push_back(nodes[i].symbol);
        i = nodes[i].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

/// Breadth-first search over words P, where the state is the tuple of normal forms
/// NF(prefix_k . P). Children are expanded in symbol order and states deduplicated,
/// so the first goal reached is the length-lex least word of length <= max_len.
template <class Goal, class Alive>
std::optional<SymbolString> state_bfs(const Srs& srs, const std::vector<SymbolString>& prefixes,
                                      std::size_t max_len, std::size_t& examined, Goal goal, Alive alive) {
    std::vector<Node> nodes;
    std::unordered_set<SymbolString, SymbolStringHash> seen;
    Node root{{}, 0, Symbol{}, 0};
    for (const auto& p : prefixes) root.sides.push_back(normal_form(srs, p));
    ++examined;
    if (goal(root.sides)) return SymbolString{};
    seen.insert(state_key(root.sides));
    nodes.push_back(std::move(root));
    const std::size_t width = srs.alphabet().size();
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth == max_len) continue;
        const std::size_t remaining = max_len - nodes[head].depth - 1;
        for (std::size_t c = 0; c < width; ++c) {
            const auto s = static_cast<Symbol>(c);
            Node child{{}, head, s, nodes[head].depth + 1};
            for (const auto& side : nodes[head].sides) child.sides.push_back(extend_normal_form(srs, side, s));
            if (!seen.insert(state_key(child.sides)).second) continue;
            ++examined;
            if (goal(child.sides)) {
                nodes.push_back(std::move(child));
                return path_of(nodes, nodes.size() - 1);
            }
            if (child.depth < max_len && alive(child.sides, remaining)) nodes.push_back(std::move(child));
        }
    }
    return std::nullopt;
}

void require_route(const Srs& srs, const SearchOptions& options, bool& convergent) {
    convergent = check_convergent(srs).convergent;
    if (!convergent && !options.rewrite_budget)
        throw PreconditionError("search: system is not certified convergent; supply a rewrite budget");
}

void check_word(const Srs& srs, const SymbolString& w, const char* what) {
    for (Symbol s : w)
        if (index_of(s) >= srs.alphabet().size())
            throw PreconditionError(std::string(what) + " contains a symbol outside the alphabet");
}

}  // namespace

// ---------------------------------------------------------------------------
// Bounded <-> exploration

namespace {

void neighbours(const Srs& srs, const SymbolString& x, std::vector<SymbolString>& out) {
    out.clear();
    for (const Redex& r : all_redexes(srs, x)) out.push_back(apply_at(srs, x, r));
    for (const Rule& rule : srs.rules()) {
        const SymbolString& from = rule.rhs;
        for (std::size_t p = 0; p + from.size() <= x.size(); ++p) {
            if (!std::equal(from.begin(), from.end(), x.begin() + static_cast<std::ptrdiff_t>(p))) continue;
            SymbolString y(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p));
            y.insert(y.end(), rule.lhs.begin(), rule.lhs.end());
            y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(p + from.size()), x.end());
            out.push_back(std::move(y));
        }
    }
}

}  // namespace

bool bounded_equivalent(const Srs& srs, const SymbolString& u, const SymbolString& v, std::size_t budget) {
    if (u == v) return true;
    std::unordered_set<SymbolString, SymbolStringHash> seen[2] = {{u}, {v}};
    std::deque<SymbolString> frontier[2] = {{u}, {v}};
    std::size_t steps = 0;
    std::vector<SymbolString> next;
    while (!frontier[0].empty() || !frontier[1].empty()) {
        // Expand one full level of the smaller non-empty frontier.
        int side = frontier[0].empty() ? 1
                 : frontier[1].empty() ? 0
                 : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
        std::deque<SymbolString> level;
        level.swap(frontier[side]);
        for (const SymbolString& x : level) {
            neighbours(srs, x, next);
            for (SymbolString& y : next) {
                if (seen[1 - side].count(y)) return true;
                // every generated step is charged, so long chains of repeats stay cheap
                if (++steps > budget) return false;
                if (seen[side].insert(y).second) frontier[side].push_back(std::move(y));
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// CT / FP

SearchOutcome ct_search(const CtQuery& q, const SearchOptions& options) {
    check_word(q.srs, q.alpha, "alpha");
    check_word(q.srs, q.beta, "beta");
    bool convergent = false;
    require_route(q.srs, options, convergent);
    SearchOutcome out;
    out.bound = options.max_len;

    if (!convergent) {
        for (CandidateStream cs(q.srs.alphabet().size(), options.max_len); !cs.done(); cs.advance()) {
            ++out.examined;
            if (bounded_equivalent(q.srs, concat(q.alpha, cs.current()), concat(q.beta, cs.current()),
                                   *options.rewrite_budget)) {
                out.status = SearchStatus::found;
                out.witness = {cs.current()};
                return out;
            }
        }
        return out;
    }

    const Srs& srs = q.srs;
    auto goal = [](const std::vector<SymbolString>& s) { return s[0] == s[1]; };
    auto alive = [&](const std::vector<SymbolString>& s, std::size_t remaining) {
        const auto a = untouchable_prefix(srs, s[0], remaining);
        const auto b = untouchable_prefix(srs, s[1], remaining);
        return prefix_compatible(s[0], a, s[1], b);
    };
    if (auto w = state_bfs(srs, {q.alpha, q.beta}, options.max_len, out.examined, goal, alive)) {
        out.status = SearchStatus::found;
        out.witness = {std::move(*w)};
    }
    return out;
}

SearchOutcome ct_search(const CtQuery& q, std::size_t max_len) {
    return ct_search(q, SearchOptions{max_len, std::nullopt});
}

SearchOutcome fp_search(const Srs& srs, const SymbolString& alpha, const SearchOptions& options) {
    // A fixed point of alpha is a common term of alpha and the empty word.
    return ct_search(CtQuery{srs, alpha, SymbolString{}}, options);
}

SearchOutcome fp_search(const Srs& srs, const SymbolString& alpha, std::size_t max_len) {
    return fp_search(srs, alpha, SearchOptions{max_len, std::nullopt});
}

// ---------------------------------------------------------------------------
// CE

SearchOutcome ce_search(const CeQuery& q, const SearchOptions& options) {
    check_word(q.srs, q.alpha1, "alpha1");
    check_word(q.srs, q.alpha2, "alpha2");
    check_word(q.srs, q.beta1, "beta1");
    check_word(q.srs, q.beta2, "beta2");
    bool convergent = false;
    require_route(q.srs, options, convergent);
    const Srs& srs = q.srs;
    const std::size_t width = srs.alphabet().size();
    SearchOutcome out;
    out.bound = options.max_len;

    for (CandidateStream outer(width, options.max_len); !outer.done(); outer.advance()) {
        const SymbolString& w2 = outer.current();
        if (!convergent) {
            const std::size_t budget = *options.rewrite_budget;
            const SymbolString lhs_a = concat(q.alpha2, w2);
            const SymbolString lhs_b = concat(q.beta2, w2);
            for (CandidateStream inner(width, options.max_len); !inner.done(); inner.advance()) {
                const SymbolString& w1 = inner.current();
                ++out.examined;
                if (w1 == w2 || bounded_equivalent(srs, w1, w2, budget)) continue;
                if (bounded_equivalent(srs, concat(q.alpha1, w1), lhs_a, budget) &&
                    bounded_equivalent(srs, concat(q.beta1, w1), lhs_b, budget)) {
                    out.status = SearchStatus::found;
                    out.witness = {w1, w2};
                    return out;
                }
            }
            continue;
        }
        const SymbolString target_a = normal_form(srs, concat(q.alpha2, w2));
        const SymbolString target_b = normal_form(srs, concat(q.beta2, w2));
        const SymbolString trivial = normal_form(srs, w2);
        auto goal = [&](const std::vector<SymbolString>& s) {
            return s[0] == target_a && s[1] == target_b && s[2] != trivial;
        };
        auto alive = [&](const std::vector<SymbolString>& s, std::size_t remaining) {
            return prefix_of(s[0], untouchable_prefix(srs, s[0], remaining), target_a) &&
                   prefix_of(s[1], untouchable_prefix(srs, s[1], remaining), target_b);
        };
        if (auto w1 = state_bfs(srs, {q.alpha1, q.beta1, SymbolString{}}, options.max_len, out.examined,
                                goal, alive)) {
            out.status = SearchStatus::found;
            out.witness = {std::move(*w1), w2};
            return out;
        }
    }
    return out;
}

SearchOutcome ce_search(const CeQuery& q, std::size_t max_len) {
    return ce_search(q, SearchOptions{max_len, std::nullopt});
}

// ---------------------------------------------------------------------------

const char* to_string(SearchStatus s) {
    return s == SearchStatus::found ? "found" : "exhausted";
}

std::string format_outcome(const Srs& srs, const SearchOutcome& outcome) {
    std::string out = "status: ";
    out += to_string(outcome.status);
    out += "\nwitness: ";
    if (outcome.witness.empty()) {
        out += "none";
    } else {
        for (std::size_t i = 0; i < outcome.witness.size(); ++i) {
            if (i) out += " | ";
            out += srs.show(outcome.witness[i]);
        }
    }
    out += "\nbound: " + std::to_string(outcome.bound);
    out += "\nexamined: " + std::to_string(outcome.examined) + "\n";
    return out;
}

}  // namespace srsdual
