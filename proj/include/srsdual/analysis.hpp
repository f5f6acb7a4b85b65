#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srsdual/srs.hpp"

namespace srsdual {

/// Per-rule findings behind a ClassReport flag.
struct RuleClass {
    bool monadic = false;
    bool dwindling = false;
    bool length_reducing = false;
};

struct ClassReport {
    bool monadic = true;
    bool dwindling = true;
    bool length_reducing = true;
    bool inter_reduced = true;
    bool orthogonal = true;
    bool terminating_by_length = true;
    std::vector<RuleClass> per_rule;
};

ClassReport classify(const Srs& srs);

enum class OverlapKind { suffix_prefix, containment };

/// Two rules applied to overlapping redexes of `peak`.
struct CriticalPair {
    SymbolString peak;
    SymbolString left_result;   // first rule applied at first_position
    SymbolString right_result;  // second rule applied at second_position
    OverlapKind kind = OverlapKind::suffix_prefix;
    std::size_t first_rule = 0;
    std::size_t second_rule = 0;
    std::size_t first_position = 0;
    std::size_t second_position = 0;
};

/// All lhs overlaps: proper suffix/prefix overlaps for every ordered rule pair
/// (self-overlaps included) plus occurrences of one lhs inside another.
/// Identical left-hand sides are reported once.
std::vector<CriticalPair> critical_pairs(const Srs& srs);

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

struct ConvergenceReport {
    Verdict terminating = Verdict::unknown;
    Verdict locally_confluent = Verdict::unknown;
    bool convergent = false;
    std::optional<CriticalPair> unjoinable_pair;
};

/// Termination is certified only by length reduction. For other systems the
/// critical pairs are still normalized under `peak_budget` steps per side.
ConvergenceReport check_convergent(const Srs& srs, std::size_t peak_budget = 10'000);

}  // namespace srsdual
