#include <doctest.h>

#include <random>
#include <set>

#include "gen.hpp"
#include "srsdual/analysis.hpp"
#include "srsdual/error.hpp"
#include "srsdual/gpcp.hpp"
#include "srsdual/rewrite.hpp"

using namespace srsdual;

namespace {

const Srs& cancel() {
    static const Srs s = parse_srs("s p -> eps\np s -> eps");
    return s;
}

// Every string reachable from w (length-reducing systems only).
std::set<SymbolString> reachable(const Srs& s, const SymbolString& w) {
    std::set<SymbolString> seen{w};
    std::vector<SymbolString> todo{w};
    while (!todo.empty()) {
        const SymbolString u = todo.back();
        todo.pop_back();
        for (const Redex& r : all_redexes(s, u))
            if (const auto v = apply_at(s, u, r); seen.insert(v).second) todo.push_back(v);
    }
    return seen;
}

SymbolString random_strategy_nf(const Srs& s, SymbolString w, std::mt19937_64& rng) {
    for (;;) {
        const auto reds = all_redexes(s, w);
        if (reds.empty()) return w;
        std::uniform_int_distribution<std::size_t> pick(0, reds.size() - 1);
        w = apply_at(s, w, reds[pick(rng)]);
    }
}

}  // namespace

TEST_CASE("single steps") {
    const Srs& s = cancel();
    const auto st = rewrite_step(s, s.word("s s p"));
    REQUIRE(st);
    CHECK(st->position == 1);
    CHECK(st->rule == 0);
    CHECK(s.show(st->output) == "s");
    CHECK_FALSE(rewrite_step(s, s.word("s s")));

    const Srs abc = parse_srs("abc -> ab", {.chars = true});
    const auto st2 = rewrite_step(abc, parse_word_chars(abc.alphabet(), "abc"));
    REQUIRE(st2);
    const SymbolString in = parse_word_chars(abc.alphabet(), "aabcc");
    const auto st3 = rewrite_step(abc, in);
    REQUIRE(st3);
    CHECK(st3->position == 1);
    CHECK(st3->output == parse_word_chars(abc.alphabet(), "aabc"));
    CHECK(st3->input == in);
}

TEST_CASE("tie-break: longest lhs, then lowest index") {
    const Srs s = parse_srs("ab -> a\nabc -> b\nab -> c", {.chars = true});
    const auto r = redex_at(s, parse_word_chars(s.alphabet(), "abc"), 0);
    REQUIRE(r);
    CHECK(r->rule == 1);
    const auto r2 = redex_at(s, parse_word_chars(s.alphabet(), "abb"), 0);
    REQUIRE(r2);
    CHECK(r2->rule == 0);
    CHECK_FALSE(redex_at(s, parse_word_chars(s.alphabet(), "abb"), 1));
    const auto lm = leftmost_redex(s, parse_word_chars(s.alphabet(), "abab"), 1);
    REQUIRE(lm);
    CHECK(lm->position == 2);
}

TEST_CASE("normalization examples") {
    const Srs& s = cancel();
    CHECK(s.show(normal_form(s, s.word("s s p"))) == "s");
    CHECK(normal_form(s, {}).empty());
    const NormalizeResult r = normalize(s, s.word("s s p p s"), {.trace = true});
    CHECK(s.show(r.normal_form) == "s");
    CHECK(r.steps == 2);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].output == r.trace[1].input);

    const CtEncoding g1 = encode(parse_gpcp("start: a | a a\nend: a a | a"));
    CHECK(normal_form(g1.srs, g1.srs.word("cent1 a1 B c0")).empty());
}

TEST_CASE("trace cap and budgets") {
    const Srs& s = cancel();
    const NormalizeResult r = normalize(s, s.word("s s s p p p"), {.trace = true, .trace_cap = 1});
    CHECK(r.steps == 3);
    CHECK(r.trace.size() == 1);
    CHECK(r.trace_truncated);
    CHECK_THROWS_AS(normalize(s, s.word("s s s p p p"), {.budget = 2}), BudgetExhausted);

    const Srs loop = parse_srs("a -> b\nb -> a");
    CHECK_THROWS_AS(normalize(loop, loop.word("a")), PreconditionError);
    CHECK_THROWS_AS(normalize(loop, loop.word("a"), {.budget = 50}), BudgetExhausted);
    const Srs grow = parse_srs("a -> b b");
    CHECK(grow.show(normalize(grow, grow.word("a a"), {.budget = 10}).normal_form) == "b b b b");
}

TEST_CASE("joinability") {
    const Srs& s = cancel();
    CHECK(joinable(s, s.word("s p"), {}));
    CHECK_FALSE(joinable(s, s.word("s s"), s.word("s")));
    CHECK(joinable(s, s.word("s s p"), s.word("s p s")));
    CHECK_THROWS_AS(joinable(parse_srs("a b -> b\na b -> a"), {}, {}), PreconditionError);
}

TEST_CASE("incremental normal forms") {
    const Srs& s = cancel();
    CHECK(s.show(extend_normal_form(s, s.word("s s"), s.word("p")[0])) == "s");
    SymbolString w = s.word("s s p p");
    CHECK(normalize_in_place(s, w) == 2);
    CHECK(w.empty());
}

TEST_CASE("property: normal forms are irreducible and reachable") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const Srs s = testgen::random_length_reducing(rng, 3, 4, 3);
        for (int j = 0; j < 10; ++j) {
            const SymbolString w = testgen::random_word(rng, 3, 0, 7);
            const NormalizeResult r = normalize(s, w);
            CHECK_FALSE(rewrite_step(s, r.normal_form));
            CHECK(reachable(s, w).count(r.normal_form) == 1);
            CHECK(r.steps <= w.size() * w.size());
        }
    }
}

TEST_CASE("property: every step strictly shortens a length-reducing word") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const Srs s = testgen::random_length_reducing(rng, 3, 4, 3);
        SymbolString w = testgen::random_word(rng, 3, 0, 10);
        while (const auto st = rewrite_step(s, w)) {
            CHECK(st->output.size() < st->input.size());
            const Rule& rule = s.rule(st->rule);
            CHECK(SymbolString(w.begin() + static_cast<std::ptrdiff_t>(st->position),
                               w.begin() + static_cast<std::ptrdiff_t>(st->position + rule.lhs.size())) == rule.lhs);
            w = st->output;
        }
    }
}

TEST_CASE("property: context closure") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const Srs s = testgen::random_srs(rng, 3, 4, 3);
        const SymbolString u = testgen::random_word(rng, 3, 1, 6);
        const SymbolString x = testgen::random_word(rng, 3, 0, 4);
        const SymbolString y = testgen::random_word(rng, 3, 0, 4);
        const SymbolString xuy = concat(concat(x, u), y);
        for (const Redex& r : all_redexes(s, u)) {
            const SymbolString v = apply_at(s, u, r);
            const Redex shifted{r.rule, r.position + x.size()};
            CHECK(apply_at(s, xuy, shifted) == concat(concat(x, v), y));
            bool listed = false;
            for (const Redex& q : all_redexes(s, xuy)) listed |= q.rule == shifted.rule && q.position == shifted.position;
            CHECK(listed);
        }
    }
}

TEST_CASE("property: strategy independence on convergent systems") {
    std::mt19937_64 rng(24);
    int tested = 0;
    while (tested < 60) {
        const Srs s = testgen::random_length_reducing(rng, 3, 4, 3);
        if (!check_convergent(s).convergent) continue;
        ++tested;
        for (int j = 0; j < 30; ++j) {
            const SymbolString w = testgen::random_word(rng, 3, 0, 8);
            CHECK(random_strategy_nf(s, w, rng) == normal_form(s, w));
        }
    }
}
