#include "srsdual/trs.hpp"

#include <cctype>
#include <sstream>

#include "srsdual/error.hpp"

namespace srsdual::trs {

Term Term::var(std::string name) { return Term{Kind::variable, std::move(name), {}}; }
Term Term::constant(std::string name) { return Term{Kind::constant, std::move(name), {}}; }
Term Term::app(std::string name, std::vector<Term> args) {
    return Term{Kind::application, std::move(name), std::move(args)};
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (auto c = kind <=> other.kind; c != 0) return c;
    if (auto c = name <=> other.name; c != 0) return c;
    if (auto c = args.size() <=> other.args.size(); c != 0) return c;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (auto c = args[i] <=> other.args[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

bool is_variable_name(std::string_view name) {
    return !name.empty() && name.front() >= 'u' && name.front() <= 'z';
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr const char* kSub = "sub";

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class TermParser {
public:
    TermParser(std::string_view text, Signature& sig, std::size_t line) : text_(text), sig_(sig), line_(line) {}

    Term parse_all() {
        Term t = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void declare(const std::string& name, std::size_t arity) {
        auto [it, fresh] = sig_.emplace(name, arity);
        if (!fresh && it->second != arity)
            fail("arity mismatch for '" + name + "': " + std::to_string(it->second) + " vs " + std::to_string(arity));
    }

    Term parse_sum() {
        Term left = parse_primary();
        while (eat('-')) {
            Term right = parse_primary();
            declare(kSub, 2);
            left = Term::app(kSub, {std::move(left), std::move(right)});
        }
        return left;
    }

    Term parse_primary() {
        if (eat('(')) {
            Term t = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of term");
        std::string name(text_.substr(start, pos_ - start));
        if (eat('(')) {
            if (is_variable_name(name)) fail("variable '" + name + "' cannot be applied");
            std::vector<Term> args;
            do args.push_back(parse_sum());
            while (eat(','));
            if (!eat(')')) fail("expected ')'");
            if (args.size() > 2) fail("'" + name + "': only arities 1 and 2 are supported");
            declare(name, args.size());
            return Term::app(std::move(name), std::move(args));
        }
        if (is_variable_name(name)) return Term::var(std::move(name));
        declare(name, 0);
        return Term::constant(std::move(name));
    }

    std::string_view text_;
    Signature& sig_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, Signature& signature) {
    return TermParser(text, signature, 0).parse_all();
}

Term parse_term(std::string_view text) {
    Signature sig;
    return parse_term(text, sig);
}

TrsLite parse_trs(std::string_view text) {
    TrsLite trs;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) throw ParseError(line_no, "expected '->'");
        TermRule rule{TermParser(line.substr(0, arrow), trs.signature, line_no).parse_all(),
                      TermParser(line.substr(arrow + 2), trs.signature, line_no).parse_all()};
        if (rule.lhs.is_var()) throw ParseError(line_no, "lhs is a variable");
        std::set<std::string> lv, rv;
        collect_variables(rule.lhs, lv);
        collect_variables(rule.rhs, rv);
        for (const auto& v : rv)
            if (!lv.count(v)) throw ParseError(line_no, "rhs variable '" + v + "' does not occur in lhs");
        trs.rules.push_back(std::move(rule));
    }
    return trs;
}

Substitution parse_substitution(std::string_view text, Signature& signature) {
    Substitution theta;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        if (semi == std::string_view::npos) semi = text.size();
        std::string_view binding = text.substr(pos, semi - pos);
        pos = semi + 1;
        if (binding.find_first_not_of(" \t") == std::string_view::npos) continue;
        // Accept both `x = t` and `x -> t`.
        std::size_t sep = binding.find("->");
        std::size_t sep_len = 2;
        if (sep == std::string_view::npos) {
            sep = binding.find('=');
            sep_len = 1;
        }
        if (sep == std::string_view::npos) throw ParseError(0, "substitution binding needs '=': " + std::string(binding));
        std::string var;
        std::istringstream(std::string(binding.substr(0, sep))) >> var;
        if (!is_variable_name(var)) throw ParseError(0, "'" + var + "' is not a variable name");
        if (theta.count(var)) throw ParseError(0, "variable '" + var + "' bound twice");
        theta.emplace(var, parse_term(binding.substr(sep + sep_len), signature));
    }
    return theta;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Term& t) {
    if (t.kind != Term::Kind::application) return t.name;
    if (t.name == kSub && t.args.size() == 2) {
        const bool wrap = t.args[1].kind == Term::Kind::application && t.args[1].name == kSub;
        return to_string(t.args[0]) + " - " + (wrap ? "(" + to_string(t.args[1]) + ")" : to_string(t.args[1]));
    }
    std::string out = t.name + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        out += to_string(t.args[i]);
    }
    return out + ")";
}

std::string to_string(const Substitution& theta) {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, t] : theta) {
        if (!first) out += ", ";
        first = false;
        out += v + " -> " + to_string(t);
    }
    return out + "}";
}

std::string to_string(const TrsLite& trs) {
    std::string out;
    for (const auto& r : trs.rules) out += to_string(r.lhs) + " -> " + to_string(r.rhs) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Substitutions and matching

void collect_variables(const Term& t, std::set<std::string>& out) {
    if (t.is_var()) out.insert(t.name);
    for (const auto& a : t.args) collect_variables(a, out);
}

bool is_ground(const Term& t) {
    if (t.is_var()) return false;
    for (const auto& a : t.args)
        if (!is_ground(a)) return false;
    return true;
}

std::size_t depth(const Term& t) {
    std::size_t d = 0;
    for (const auto& a : t.args) d = std::max(d, depth(a));
    return t.args.empty() ? 0 : d + 1;
}

std::set<std::string> domain(const Substitution& theta) {
    std::set<std::string> out;
    for (const auto& [v, t] : theta) out.insert(v);
    return out;
}

std::set<std::string> variable_range(const Substitution& theta) {
    std::set<std::string> out;
    for (const auto& [v, t] : theta) collect_variables(t, out);
    return out;
}

bool is_ground(const Substitution& theta) { return variable_range(theta).empty(); }

Term apply_subst(const Substitution& theta, const Term& t) {
    if (t.is_var()) {
        auto it = theta.find(t.name);
        return it == theta.end() ? t : it->second;
    }
    Term out{t.kind, t.name, {}};
    out.args.reserve(t.args.size());
    for (const auto& a : t.args) out.args.push_back(apply_subst(theta, a));
    return out;
}

namespace {

bool match_into(const Term& pattern, const Term& t, Substitution& sigma) {
    switch (pattern.kind) {
        case Term::Kind::variable: {
            auto [it, fresh] = sigma.emplace(pattern.name, t);
            return fresh || it->second == t;  // non-linear patterns need equal bindings
        }
        case Term::Kind::constant:
            return t.kind == Term::Kind::constant && t.name == pattern.name;
        case Term::Kind::application:
            if (t.kind != Term::Kind::application || t.name != pattern.name || t.args.size() != pattern.args.size())
                return false;
            for (std::size_t i = 0; i < t.args.size(); ++i)
                if (!match_into(pattern.args[i], t.args[i], sigma)) return false;
            return true;
    }
    return false;
}

Term innermost(const TrsLite& trs, const Term& t, std::size_t& left) {
    Term cur = t;
    for (auto& a : cur.args) a = innermost(trs, a, left);
    for (const auto& rule : trs.rules) {
        if (auto sigma = match(rule.lhs, cur)) {
            if (left == 0) throw BudgetExhausted("term normalization budget exhausted");
            --left;
            return innermost(trs, apply_subst(*sigma, rule.rhs), left);
        }
    }
    return cur;
}

void reducts_into(const TrsLite& trs, const Term& t, std::vector<Term>& out) {
    for (const auto& rule : trs.rules)
        if (auto sigma = match(rule.lhs, t)) out.push_back(apply_subst(*sigma, rule.rhs));
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        std::vector<Term> inner;
        reducts_into(trs, t.args[i], inner);
        for (auto& r : inner) {
            Term copy = t;
            copy.args[i] = std::move(r);
            out.push_back(std::move(copy));
        }
    }
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& t) {
    Substitution sigma;
    if (!match_into(pattern, t, sigma)) return std::nullopt;
    return sigma;
}

Term normalize_term(const TrsLite& trs, const Term& t, std::size_t budget) {
    std::size_t left = budget;
    return innermost(trs, t, left);
}

std::vector<Term> one_step_reducts(const TrsLite& trs, const Term& t) {
    std::vector<Term> out;
    reducts_into(trs, t, out);
    return out;
}

// ---------------------------------------------------------------------------
// Grounding

std::set<std::string> names_of(const Signature& signature) {
    std::set<std::string> out;
    for (const auto& [name, arity] : signature) out.insert(name);
    return out;
}

namespace {

void collect_names(const Term& t, std::set<std::string>& out) {
    out.insert(t.name);
    for (const auto& a : t.args) collect_names(a, out);
}

}  // namespace

Groundified groundify(const Substitution& theta, const std::set<std::string>& reserved) {
    if (theta.empty()) throw PreconditionError("groundify: substitution has an empty domain");
    std::set<std::string> taken = reserved;
    for (const auto& [v, t] : theta) collect_names(t, taken);

    std::vector<std::string> vars;
    for (const auto& [v, t] : theta) vars.push_back(v);
    for (const auto& v : variable_range(theta))
        if (!theta.count(v)) vars.push_back(v);

    Groundified g;
    std::size_t counter = 0;
    for (const auto& v : vars) {
        std::string fresh;
        do fresh = "k" + std::to_string(counter++);
        while (taken.count(fresh));
        g.theta1.emplace(v, Term::constant(fresh));
    }
    for (const auto& v : vars) {
        auto it = theta.find(v);
        const Term image = it == theta.end() ? Term::var(v) : it->second;
        g.theta2.emplace(v, apply_subst(g.theta1, image));
    }
    return g;
}

bool ct_check_terms(const TrsLite& trs, const Substitution& theta1, const Substitution& theta2, const Term& t,
                    std::size_t budget) {
    if (!is_ground(theta1) || !is_ground(theta2)) throw PreconditionError("ct_check_terms: substitutions must be ground");
    return normalize_term(trs, apply_subst(theta1, t), budget) == normalize_term(trs, apply_subst(theta2, t), budget);
}

// ---------------------------------------------------------------------------
// Unary TRS <-> SRS

Term word_to_term(const Alphabet& alphabet, const SymbolString& w, const std::string& variable) {
    Term t = Term::var(variable);
    for (Symbol s : w) t = Term::app(alphabet.name(s), {std::move(t)});
    return t;
}

std::optional<SymbolString> term_to_word(const Alphabet& alphabet, const Term& t) {
    SymbolString rev;
    const Term* cur = &t;
    while (cur->kind == Term::Kind::application) {
        if (cur->args.size() != 1) return std::nullopt;
        auto s = alphabet.find(cur->name);
        if (!s) return std::nullopt;
        rev.push_back(*s);
        cur = &cur->args[0];
    }
    if (!cur->is_var()) return std::nullopt;
    return SymbolString(rev.rbegin(), rev.rend());
}

namespace {

// Function names from outermost to innermost, plus the spine variable.
std::optional<std::pair<std::vector<std::string>, std::string>> spine(const Term& t) {
    std::vector<std::string> names;
    const Term* cur = &t;
    while (cur->kind == Term::Kind::application) {
        if (cur->args.size() != 1) return std::nullopt;
        names.push_back(cur->name);
        cur = &cur->args[0];
    }
    if (!cur->is_var()) return std::nullopt;
    return std::make_pair(std::move(names), cur->name);
}

}  // namespace

Srs unary_trs_to_srs(const TrsLite& trs) {
    for (const auto& [name, arity] : trs.signature)
        if (arity != 1)
            throw PreconditionError("unary_trs_to_srs: '" + name + "' has arity " + std::to_string(arity));
    Alphabet alphabet;
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const auto l = spine(trs.rules[i].lhs);
        const auto r = spine(trs.rules[i].rhs);
        if (!l || !r || l->second != r->second)
            throw PreconditionError("unary_trs_to_srs: rule " + std::to_string(i) + " is not over a common variable spine");
        auto to_word = [&](const std::vector<std::string>& outer_first) {
            SymbolString w;
            for (auto it = outer_first.rbegin(); it != outer_first.rend(); ++it) w.push_back(alphabet.intern(*it));
            return w;
        };
        Rule rule;
        rule.lhs = to_word(l->first);
        rule.rhs = to_word(r->first);
        rules.push_back(std::move(rule));
    }
    for (const auto& [name, arity] : trs.signature) alphabet.intern(name);
    return Srs(std::move(alphabet), std::move(rules));
}

TrsLite srs_to_unary_trs(const Srs& srs, const std::string& variable) {
    TrsLite trs;
    for (const auto& n : srs.alphabet().names()) trs.signature.emplace(n, 1);
    for (const Rule& r : srs.rules())
        trs.rules.push_back({word_to_term(srs.alphabet(), r.lhs, variable), word_to_term(srs.alphabet(), r.rhs, variable)});
    return trs;
}

}  // namespace srsdual::trs
