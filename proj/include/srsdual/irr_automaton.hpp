#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "srsdual/srs.hpp"

namespace srsdual {

/// Complete DFA for IRR(R): accepts exactly the words containing no lhs as a factor.
class IrrAutomaton {
public:
    using State = std::uint32_t;

    IrrAutomaton(std::size_t alphabet_size, State start, std::vector<State> transitions,
                 std::vector<bool> accepting);

    State start() const noexcept { return start_; }
    std::size_t state_count() const noexcept { return accepting_.size(); }
    std::size_t alphabet_size() const noexcept { return width_; }
    State next(State q, Symbol s) const { return delta_[q * width_ + index_of(s)]; }
    bool accepting(State q) const { return accepting_[q]; }
    bool accepts(std::span<const Symbol> w) const;

private:
    std::size_t width_;
    State start_;
    std::vector<State> delta_;
    std::vector<bool> accepting_;
};

/// Aho-Corasick dictionary automaton over all lhs strings; every state that has
/// seen a complete lhs is merged into one absorbing dead state.
IrrAutomaton irr_automaton(const Srs& srs);

bool is_irreducible(const Srs& srs, std::span<const Symbol> w);

/// One line per state: `<id> <accepting 0|1> <succ per symbol...>`, after a
/// commented header naming the alphabet order and the start state.
std::string to_table(const IrrAutomaton& a, const Alphabet& alphabet);

std::string to_dot(const IrrAutomaton& a, const Alphabet& alphabet);

}  // namespace srsdual
