#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "srsdual/irr_automaton.hpp"
#include "srsdual/rewrite.hpp"

using namespace srsdual;

namespace {

bool naive_irreducible(const Srs& s, const SymbolString& w) {
    for (const Rule& r : s.rules())
        if (contains_factor(w, r.lhs)) return false;
    return true;
}

}  // namespace

TEST_CASE("cancellation system accepts only unmixed powers") {
    const Srs s = parse_srs("s p -> eps\np s -> eps");
    const IrrAutomaton a = irr_automaton(s);
    testgen::for_each_word_upto(2, 6, [&](const SymbolString& w) {
        bool uniform = true;
        for (Symbol c : w) uniform &= c == w.front();
        CHECK(a.accepts(w) == uniform);
    });
}

TEST_CASE("zero rules accept everything") {
    const Srs s = parse_srs("alphabet: a b");
    const IrrAutomaton a = irr_automaton(s);
    testgen::for_each_word_upto(2, 5, [&](const SymbolString& w) { CHECK(a.accepts(w)); });
}

TEST_CASE("lhs occurrences are rejected") {
    const Srs s = parse_srs("alphabet: x a b c y\na b c -> a b");
    const IrrAutomaton a = irr_automaton(s);
    CHECK_FALSE(a.accepts(s.word("x a b c y")));
    CHECK(a.accepts(s.word("a b")));
    CHECK(a.accepts(s.word("a b a b")));
    CHECK(is_irreducible(s, s.word("x a b y")));
    CHECK(is_irreducible(s, {}));
    CHECK_FALSE(is_irreducible(parse_srs("s p -> eps"), parse_srs("s p -> eps").word("s p")));
}

TEST_CASE("automaton is complete and deterministic") {
    const Srs s = parse_srs("a b -> a\nb b a -> eps\nc -> b", {.chars = true});
    const IrrAutomaton a = irr_automaton(s);
    CHECK(a.alphabet_size() == 3);
    for (IrrAutomaton::State q = 0; q < a.state_count(); ++q)
        for (std::size_t c = 0; c < 3; ++c) CHECK(a.next(q, s.alphabet().at(c)) < a.state_count());
}

TEST_CASE("exports") {
    const Srs s = parse_srs("s p -> eps\np s -> eps");
    const IrrAutomaton a = irr_automaton(s);
    const std::string table = to_table(a, s.alphabet());
    CHECK(table.find("# alphabet: s p") != std::string::npos);
    std::size_t rows = 0;
    for (char c : table) rows += c == '\n';
    CHECK(rows == a.state_count() + 3);
    const std::string dot = to_dot(a, s.alphabet());
    CHECK(dot.starts_with("digraph"));
    CHECK(dot.find("doublecircle") != std::string::npos);
}

TEST_CASE("property: automaton agrees with naive scanning and with rewrite_step") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const Srs s = testgen::random_srs(rng, 3, 4, 3);
        const IrrAutomaton a = irr_automaton(s);
        testgen::for_each_word_upto(3, 6, [&](const SymbolString& w) {
            const bool naive = naive_irreducible(s, w);
            if (a.accepts(w) != naive) FAIL_CHECK(format_srs(s) << " on " << s.show(w));
            if (naive == rewrite_step(s, w).has_value()) FAIL_CHECK("rewrite_step disagrees");
        });
    }
}
