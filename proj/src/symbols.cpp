#include "srsdual/symbols.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "srsdual/error.hpp"

namespace srsdual {

Alphabet::Alphabet(const std::vector<std::string>& names) {
    for (const auto& n : names) {
        if (find(n)) throw PreconditionError("duplicate symbol name: " + n);
        intern(n);
    }
}

Symbol Alphabet::intern(std::string_view name) {
    if (auto s = find(name)) return *s;
    if (name.empty()) throw PreconditionError("empty symbol name");
    if (names_.size() >= std::numeric_limits<std::uint16_t>::max())
        throw PreconditionError("alphabet too large");
    const auto s = static_cast<Symbol>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), s);
    return s;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

Symbol Alphabet::at(std::size_t i) const {
    if (i >= names_.size()) throw std::out_of_range("symbol id out of range");
    return static_cast<Symbol>(i);
}

std::string to_string(const Alphabet& alphabet, std::span<const Symbol> word) {
    if (word.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.name(word[i]);
    }
    return out;
}

SymbolString parse_word(const Alphabet& alphabet, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.size() == 1 && tokens[0] == "eps" && !alphabet.find("eps")) return {};
    SymbolString w;
    w.reserve(tokens.size());
    for (const auto& tok : tokens) {
        auto s = alphabet.find(tok);
        if (!s) throw ParseError(0, "unknown symbol '" + tok + "'");
        w.push_back(*s);
    }
    return w;
}

SymbolString parse_word_chars(const Alphabet& alphabet, std::string_view text) {
    if (text == "eps") return {};
    SymbolString w;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        auto s = alphabet.find(std::string_view(&c, 1));
        if (!s) throw ParseError(0, std::string("unknown symbol '") + c + "'");
        w.push_back(*s);
    }
    return w;
}

SymbolString concat(std::span<const Symbol> a, std::span<const Symbol> b) {
    SymbolString out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool contains_factor(std::span<const Symbol> hay, std::span<const Symbol> needle) {
    if (needle.empty()) return true;
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace srsdual
