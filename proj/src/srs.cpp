#include "srsdual/srs.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "srsdual/error.hpp"

namespace srsdual {

LhsIndex::LhsIndex(std::size_t alphabet_size, const std::vector<Rule>& rules)
    : width_(alphabet_size) {
    auto add_node = [&](std::size_t depth) {
        children_.insert(children_.end(), width_, kNone);
        terminal_.emplace_back();
        below_.emplace_back();
        depth_.push_back(depth);
        return static_cast<std::int32_t>(depth_.size() - 1);
    };
    add_node(0);
    for (const Rule& r : rules) {
        std::int32_t node = 0;
        below_[0].push_back(r.index);
        for (Symbol s : r.lhs) {
            auto slot = static_cast<std::size_t>(node) * width_ + index_of(s);
            if (children_[slot] == kNone) {
                const auto fresh = add_node(depth_[static_cast<std::size_t>(node)] + 1);
                children_[slot] = fresh;
            }
            node = children_[slot];
            below_[static_cast<std::size_t>(node)].push_back(r.index);
        }
        terminal_[static_cast<std::size_t>(node)].push_back(r.index);
    }
}

std::int32_t LhsIndex::walk(std::span<const Symbol> word) const {
    std::int32_t node = 0;
    for (Symbol s : word) {
        if (index_of(s) >= width_) return kNone;
        node = child(node, s);
        if (node == kNone) return kNone;
    }
    return node;
}

Srs::Srs(Alphabet alphabet, std::vector<Rule> rules) {
    auto data = std::make_shared<Data>();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        Rule& r = rules[i];
        r.index = i;
        if (r.lhs.empty()) throw PreconditionError("rule " + std::to_string(i) + ": empty lhs");
        if (r.lhs == r.rhs) throw PreconditionError("rule " + std::to_string(i) + ": lhs equals rhs");
        for (const auto* side : {&r.lhs, &r.rhs})
            for (Symbol s : *side)
                if (index_of(s) >= alphabet.size())
                    throw PreconditionError("rule " + std::to_string(i) + ": symbol outside alphabet");
        data->max_lhs = std::max(data->max_lhs, r.lhs.size());
        data->length_reducing = data->length_reducing && r.rhs.size() < r.lhs.size();
        data->dwindling = data->dwindling && r.rhs.size() < r.lhs.size() &&
                          std::equal(r.rhs.begin(), r.rhs.end(), r.lhs.begin());
    }
    data->index = LhsIndex(alphabet.size(), rules);
    data->alphabet = std::move(alphabet);
    data->rules = std::move(rules);
    data_ = std::move(data);
}

bool structurally_equal(const Srs& a, const Srs& b) {
    if (!(a.alphabet() == b.alphabet()) || a.rules().size() != b.rules().size()) return false;
    for (std::size_t i = 0; i < a.rules().size(); ++i)
        if (a.rule(i).lhs != b.rule(i).lhs || a.rule(i).rhs != b.rule(i).rhs) return false;
    return true;
}

namespace {

std::vector<std::string> tokenize(std::string_view text, bool chars) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) {
        if (!chars || tok == "eps") {
            out.push_back(tok);
            continue;
        }
        for (char c : tok) out.emplace_back(1, c);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Srs parse_srs(std::string_view text, const SrsParseOptions& options) {
    Alphabet alphabet;
    bool declared = false;
    std::vector<Rule> rules;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        std::string_view comment;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            comment = trim(line.substr(hash + 1));
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.starts_with("alphabet:")) {
            if (declared || !rules.empty())
                throw ParseError(line_no, "alphabet line must appear once, before any rule");
            declared = true;
            for (const auto& tok : tokenize(line.substr(9), options.chars)) {
                if (tok == "eps" || tok == "->") throw ParseError(line_no, "reserved token in alphabet: " + tok);
                if (alphabet.find(tok)) throw ParseError(line_no, "duplicate alphabet symbol: " + tok);
                alphabet.intern(tok);
            }
            continue;
        }

        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) throw ParseError(line_no, "expected '->'");
        if (line.find("->", arrow + 2) != std::string_view::npos)
            throw ParseError(line_no, "more than one '->'");
        const auto lhs_tokens = tokenize(line.substr(0, arrow), options.chars);
        const auto rhs_tokens = tokenize(line.substr(arrow + 2), options.chars);
        if (lhs_tokens.empty() || (lhs_tokens.size() == 1 && lhs_tokens[0] == "eps"))
            throw ParseError(line_no, "empty lhs");
        if (rhs_tokens.empty()) throw ParseError(line_no, "empty rhs (write 'eps' for the empty string)");

        auto to_word = [&](const std::vector<std::string>& toks, bool allow_eps) {
            SymbolString w;
            if (allow_eps && toks.size() == 1 && toks[0] == "eps") return w;
            for (const auto& tok : toks) {
                if (tok == "eps") throw ParseError(line_no, "'eps' must stand alone");
                if (declared) {
                    auto s = alphabet.find(tok);
                    if (!s) throw ParseError(line_no, "undeclared symbol: " + tok);
                    w.push_back(*s);
                } else {
                    w.push_back(alphabet.intern(tok));
                }
            }
            return w;
        };
        Rule r;
        r.lhs = to_word(lhs_tokens, false);
        r.rhs = to_word(rhs_tokens, true);
        if (r.lhs == r.rhs) throw ParseError(line_no, "rule with lhs = rhs");
        r.tag = std::string(comment);  // a trailing comment on a rule line is its tag
        rules.push_back(std::move(r));
    }
    return Srs(std::move(alphabet), std::move(rules));
}

Srs parse_srs(std::istream& in, const SrsParseOptions& options) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_srs(text, options);
}

std::string format_srs(const Srs& srs) {
    std::string out = "alphabet:";
    for (const auto& n : srs.alphabet().names()) out += " " + n;
    out += '\n';
    for (const Rule& r : srs.rules()) {
        out += srs.show(r.lhs) + " -> " + srs.show(r.rhs);
        if (!r.tag.empty()) out += "  # " + r.tag;
        out += '\n';
    }
    return out;
}

}  // namespace srsdual
