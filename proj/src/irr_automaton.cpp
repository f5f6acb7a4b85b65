#include "srsdual/irr_automaton.hpp"

#include <queue>
#include <sstream>

#include "srsdual/error.hpp"

namespace srsdual {

IrrAutomaton::IrrAutomaton(std::size_t alphabet_size, State start, std::vector<State> transitions,
                           std::vector<bool> accepting)
    : width_(alphabet_size), start_(start), delta_(std::move(transitions)), accepting_(std::move(accepting)) {
    if (delta_.size() != width_ * accepting_.size())
        throw PreconditionError("IrrAutomaton: transition table size mismatch");
    for (State q : delta_)
        if (q >= accepting_.size()) throw PreconditionError("IrrAutomaton: successor out of range");
    if (start_ >= accepting_.size()) throw PreconditionError("IrrAutomaton: start out of range");
}

bool IrrAutomaton::accepts(std::span<const Symbol> w) const {
    State q = start_;
    for (Symbol s : w) q = next(q, s);
    return accepting(q);
}

IrrAutomaton irr_automaton(const Srs& srs) {
    const LhsIndex& trie = srs.index();
    const std::size_t width = srs.alphabet().size();
    const std::size_t nodes = trie.node_count();

    // Aho-Corasick goto/failure completion over the lhs trie.
    std::vector<std::int32_t> go(nodes * width, 0);
    std::vector<std::int32_t> fail(nodes, 0);
    std::vector<bool> hit(nodes, false);
    std::queue<std::int32_t> bfs;
    for (std::size_t c = 0; c < width; ++c) {
        const auto child = trie.child(0, static_cast<Symbol>(c));
        if (child != LhsIndex::kNone) {
            go[c] = child;
            fail[static_cast<std::size_t>(child)] = 0;
            bfs.push(child);
        }
    }
    hit[0] = !trie.terminal(0).empty();
    while (!bfs.empty()) {
        const auto u = bfs.front();
        bfs.pop();
        const auto uu = static_cast<std::size_t>(u);
        hit[uu] = !trie.terminal(u).empty() || hit[static_cast<std::size_t>(fail[uu])];
        for (std::size_t c = 0; c < width; ++c) {
            const auto child = trie.child(u, static_cast<Symbol>(c));
            const auto via_fail = go[static_cast<std::size_t>(fail[uu]) * width + c];
            if (child != LhsIndex::kNone) {
                go[uu * width + c] = child;
                fail[static_cast<std::size_t>(child)] = via_fail;
                bfs.push(child);
            } else {
                go[uu * width + c] = via_fail;
            }
        }
    }

    // Renumber live nodes densely; every hit node collapses into one dead state.
    std::vector<IrrAutomaton::State> id(nodes);
    IrrAutomaton::State next_id = 0;
    for (std::size_t n = 0; n < nodes; ++n)
        if (!hit[n]) id[n] = next_id++;
    const IrrAutomaton::State dead = next_id;
    for (std::size_t n = 0; n < nodes; ++n)
        if (hit[n]) id[n] = dead;

    const std::size_t states = static_cast<std::size_t>(dead) + 1;
    std::vector<IrrAutomaton::State> delta(states * width, dead);
    std::vector<bool> accepting(states, true);
    accepting[dead] = false;
    for (std::size_t n = 0; n < nodes; ++n) {
        if (hit[n]) continue;
        for (std::size_t c = 0; c < width; ++c)
            delta[id[n] * width + c] = id[static_cast<std::size_t>(go[n * width + c])];
    }
    return IrrAutomaton(width, id[0], std::move(delta), std::move(accepting));
}

bool is_irreducible(const Srs& srs, std::span<const Symbol> w) {
    return irr_automaton(srs).accepts(w);
}

std::string to_table(const IrrAutomaton& a, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "# alphabet:";
    for (const auto& n : alphabet.names()) out << ' ' << n;
    out << "\n# states: " << a.state_count() << "\n# start: " << a.start() << '\n';
    for (IrrAutomaton::State q = 0; q < a.state_count(); ++q) {
        out << q << ' ' << (a.accepting(q) ? 1 : 0);
        for (std::size_t c = 0; c < a.alphabet_size(); ++c) out << ' ' << a.next(q, static_cast<Symbol>(c));
        out << '\n';
    }
    return out.str();
}

std::string to_dot(const IrrAutomaton& a, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "digraph irr {\n  rankdir=LR;\n  init [shape=point];\n  init -> q" << a.start() << ";\n";
    for (IrrAutomaton::State q = 0; q < a.state_count(); ++q)
        out << "  q" << q << " [shape=" << (a.accepting(q) ? "doublecircle" : "circle") << "];\n";
    for (IrrAutomaton::State q = 0; q < a.state_count(); ++q)
        for (std::size_t c = 0; c < a.alphabet_size(); ++c)
            out << "  q" << q << " -> q" << a.next(q, static_cast<Symbol>(c)) << " [label=\""
                << alphabet.name(static_cast<Symbol>(c)) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace srsdual
