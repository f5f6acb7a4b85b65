#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace srsdual {

/// Dense index into an Alphabet. Ids are 0..size()-1 in interning order.
enum class Symbol : std::uint16_t {};

constexpr std::size_t index_of(Symbol s) noexcept { return static_cast<std::size_t>(s); }

/// A finite word over an alphabet; the empty vector is lambda.
using SymbolString = std::vector<Symbol>;

/// Interned table of symbol display names.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(const std::vector<std::string>& names);

    /// Returns the existing symbol for `name` or appends a new one.
    Symbol intern(std::string_view name);
    std::optional<Symbol> find(std::string_view name) const;
    const std::string& name(Symbol s) const { return names_.at(index_of(s)); }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Symbol with id `i`.
    Symbol at(std::size_t i) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> ids_;
};

/// Space-separated display names, or `eps` for lambda.
std::string to_string(const Alphabet& alphabet, std::span<const Symbol> word);

/// Parses whitespace-separated tokens (`eps` alone denotes lambda).
/// Throws ParseError on an unknown token.
SymbolString parse_word(const Alphabet& alphabet, std::string_view text);

/// Parses each non-space character as one symbol name.
SymbolString parse_word_chars(const Alphabet& alphabet, std::string_view text);

SymbolString concat(std::span<const Symbol> a, std::span<const Symbol> b);

/// True iff `needle` occurs as a contiguous factor of `hay`.
bool contains_factor(std::span<const Symbol> hay, std::span<const Symbol> needle);

struct SymbolStringHash {
    std::size_t operator()(const SymbolString& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Symbol s : w) {
            h ^= index_of(s) + 1;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

}  // namespace srsdual
