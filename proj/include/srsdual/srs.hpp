#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srsdual/symbols.hpp"

namespace srsdual {

struct Rule {
    SymbolString lhs;
    SymbolString rhs;
    std::size_t index = 0;
    std::string tag;  // empty when untagged; D / I / II / III for encoded systems
};

/// Trie over all left-hand sides. Node 0 is the root.
class LhsIndex {
public:
    static constexpr std::int32_t kNone = -1;

    LhsIndex() = default;
    LhsIndex(std::size_t alphabet_size, const std::vector<Rule>& rules);

    std::int32_t child(std::int32_t node, Symbol s) const {
        return children_[static_cast<std::size_t>(node) * width_ + index_of(s)];
    }
    /// Rules whose lhs ends exactly at `node`, in increasing rule index.
    const std::vector<std::size_t>& terminal(std::int32_t node) const {
        return terminal_[static_cast<std::size_t>(node)];
    }
    /// Rules whose lhs passes through `node` (has its path as a prefix).
    const std::vector<std::size_t>& below(std::int32_t node) const {
        return below_[static_cast<std::size_t>(node)];
    }
    std::size_t depth(std::int32_t node) const { return depth_[static_cast<std::size_t>(node)]; }
    std::size_t node_count() const noexcept { return depth_.size(); }

    /// Node reached by walking `word` from the root, or kNone.
    std::int32_t walk(std::span<const Symbol> word) const;

private:
    std::size_t width_ = 0;
    std::vector<std::int32_t> children_;
    std::vector<std::vector<std::size_t>> terminal_;
    std::vector<std::vector<std::size_t>> below_;
    std::vector<std::size_t> depth_;
};

/// An immutable string-rewriting system: alphabet plus ordered rules.
/// Copies share the underlying data.
class Srs {
public:
    /// Validates |lhs| >= 1, lhs != rhs and symbol ranges; renumbers rule indices.
    Srs(Alphabet alphabet, std::vector<Rule> rules);

    const Alphabet& alphabet() const noexcept { return data_->alphabet; }
    const std::vector<Rule>& rules() const noexcept { return data_->rules; }
    const Rule& rule(std::size_t i) const { return data_->rules.at(i); }
    const LhsIndex& index() const noexcept { return data_->index; }

    std::size_t max_lhs_length() const noexcept { return data_->max_lhs; }
    /// |l| > |r| for every rule, i.e. termination is certified by length.
    bool length_reducing() const noexcept { return data_->length_reducing; }
    /// rhs is a proper prefix of lhs for every rule.
    bool dwindling() const noexcept { return data_->dwindling; }

    SymbolString word(std::string_view text) const { return parse_word(alphabet(), text); }
    std::string show(std::span<const Symbol> w) const { return to_string(alphabet(), w); }

private:
    struct Data {
        Alphabet alphabet;
        std::vector<Rule> rules;
        LhsIndex index;
        std::size_t max_lhs = 0;
        bool length_reducing = true;
        bool dwindling = true;
    };
    std::shared_ptr<const Data> data_;
};

bool structurally_equal(const Srs& a, const Srs& b);

struct SrsParseOptions {
    /// Each non-space character is a symbol instead of whitespace tokens.
    bool chars = false;
};

Srs parse_srs(std::string_view text, const SrsParseOptions& options = {});
Srs parse_srs(std::istream& in, const SrsParseOptions& options = {});

/// Canonical text form: an `alphabet:` line followed by one rule per line.
/// Tags are emitted as trailing `# tag` comments.
std::string format_srs(const Srs& srs);

}  // namespace srsdual
