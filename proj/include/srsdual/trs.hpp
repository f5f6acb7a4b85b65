#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "srsdual/srs.hpp"

namespace srsdual::trs {

/// First-order term: variable, constant, or application of arity 1 or 2.
struct Term {
    enum class Kind { variable, constant, application };

    Kind kind = Kind::constant;
    std::string name;
    std::vector<Term> args;

    static Term var(std::string name);
    static Term constant(std::string name);
    static Term app(std::string name, std::vector<Term> args);

    bool is_var() const noexcept { return kind == Kind::variable; }
    bool operator==(const Term&) const = default;
    std::strong_ordering operator<=>(const Term& other) const;
};

/// Function name -> arity (0 for constants).
using Signature = std::map<std::string, std::size_t>;

struct TermRule {
    Term lhs;
    Term rhs;
};

struct TrsLite {
    Signature signature;
    std::vector<TermRule> rules;
};

using Substitution = std::map<std::string, Term>;

/// Leaves whose name starts with u..z are variables; all other leaves are constants.
bool is_variable_name(std::string_view name);

/// Prefix syntax with parentheses; `s - t` is sugar for sub(s, t), left-associative.
/// New symbols are added to `signature`; arity clashes throw ParseError.
Term parse_term(std::string_view text, Signature& signature);
Term parse_term(std::string_view text);

TrsLite parse_trs(std::string_view text);

/// `sub` prints infix.
std::string to_string(const Term& t);
std::string to_string(const Substitution& theta);
std::string to_string(const TrsLite& trs);

/// `x = p(a); y = p(b)`; empty text gives the empty substitution.
Substitution parse_substitution(std::string_view text, Signature& signature);

void collect_variables(const Term& t, std::set<std::string>& out);
bool is_ground(const Term& t);
std::size_t depth(const Term& t);

std::set<std::string> domain(const Substitution& theta);
/// Variables occurring in the images of theta.
std::set<std::string> variable_range(const Substitution& theta);
bool is_ground(const Substitution& theta);

/// Simultaneous replacement; variables outside Dom(theta) stay.
Term apply_subst(const Substitution& theta, const Term& t);

/// Syntactic matching of `pattern` against `t`; non-linear variables must bind equal subterms.
std::optional<Substitution> match(const Term& pattern, const Term& t);

/// Leftmost-innermost, first matching rule; throws BudgetExhausted after `budget` steps.
Term normalize_term(const TrsLite& trs, const Term& t, std::size_t budget = 100'000);

/// All one-step reducts (every position, every matching rule).
std::vector<Term> one_step_reducts(const TrsLite& trs, const Term& t);

struct Groundified {
    Substitution theta1;  // variables of Dom(theta) and VRan(theta) -> fresh constants
    Substitution theta2;  // theta1 o theta
};

/// Fresh constants k0, k1, ... skipping every name in `reserved` or in theta.
Groundified groundify(const Substitution& theta, const std::set<std::string>& reserved = {});

/// All names (functions and constants) of a signature.
std::set<std::string> names_of(const Signature& signature);

bool ct_check_terms(const TrsLite& trs, const Substitution& theta1, const Substitution& theta2,
                    const Term& t, std::size_t budget = 100'000);

/// f1(f2(...fk(x))) <-> string fk ... f1 (leftmost symbol = innermost function).
Srs unary_trs_to_srs(const TrsLite& trs);
TrsLite srs_to_unary_trs(const Srs& srs, const std::string& variable = "x");

/// Unary spine term over variable `variable` for a string.
Term word_to_term(const Alphabet& alphabet, const SymbolString& w, const std::string& variable = "x");
/// Inverse of word_to_term; nullopt when `t` is not a unary spine over a variable.
std::optional<SymbolString> term_to_word(const Alphabet& alphabet, const Term& t);

}  // namespace srsdual::trs
