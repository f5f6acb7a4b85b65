#include <doctest.h>

#include <random>
#include <set>

#include "gen.hpp"
#include "srsdual/analysis.hpp"
#include "srsdual/decision.hpp"
#include "srsdual/error.hpp"
#include "srsdual/gpcp.hpp"
#include "srsdual/rewrite.hpp"

using namespace srsdual;

namespace {

const char* const kG1 = "start: a | a a\nend: a a | a\n";
const char* const kG2 = "start: b | b a\ntile: a a | a\nend: a | a\n";

// Index sequences 1..n of length <= k that solve `inst`, by plain enumeration.
std::set<std::vector<std::size_t>> all_solutions(const GpcpInstance& inst, std::size_t k) {
    std::set<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> level{{}};
    for (std::size_t len = 0; len <= k; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& seq : level) {
            const auto [x, y] = concatenations(inst, seq);
            if (x == y) out.insert(seq);
            for (std::size_t i = 1; i <= inst.tile_count(); ++i) {
                auto ext = seq;
                ext.push_back(i);
                next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<std::string> rule_strings(const Srs& s, const std::string& tag) {
    std::vector<std::string> out;
    for (const Rule& r : s.rules())
        if (r.tag == tag) out.push_back(s.show(r.lhs) + " -> " + s.show(r.rhs));
    return out;
}

}  // namespace

TEST_CASE("parse instances") {
    const GpcpInstance g1 = parse_gpcp(kG1);
    CHECK(g1.tile_count() == 0);
    CHECK(to_string(g1.alphabet, g1.start.top) == "a");
    CHECK(to_string(g1.alphabet, g1.start.bottom) == "a a");
    CHECK(to_string(g1.alphabet, g1.domino(1).top) == "a a");

    const GpcpInstance g2 = parse_gpcp(kG2);
    CHECK(g2.tile_count() == 1);
    CHECK(to_string(g2.alphabet, g2.domino(1).top) == "a a");
    CHECK(to_string(g2.alphabet, g2.domino(2).bottom) == "a");
    CHECK(parse_gpcp(format_gpcp(g2)).tiles == g2.tiles);

    CHECK_THROWS_AS(parse_gpcp("start: a | \nend: a | a"), ParseError);
    CHECK_THROWS_AS(parse_gpcp("start: a | a"), ParseError);
    CHECK_THROWS_AS(parse_gpcp("end: a | a"), ParseError);
    CHECK_THROWS_AS(parse_gpcp("start: a | a\nstart: a | a\nend: a | a"), ParseError);
    CHECK_THROWS_AS(parse_gpcp("start: a a\nend: a | a"), ParseError);
    CHECK_THROWS_AS(parse_gpcp("start: a | a\nmiddle: a | a\nend: a | a"), ParseError);
}

TEST_CASE("brute-force solver") {
    const GpcpInstance g1 = parse_gpcp(kG1);
    const auto s1 = gpcp_brute_force(g1, 2);
    REQUIRE(s1);
    CHECK(s1->indices.empty());
    CHECK(to_string(g1.alphabet, s1->match) == "a a a");

    const GpcpInstance g2 = parse_gpcp(kG2);
    const auto s2 = gpcp_brute_force(g2, 2);
    REQUIRE(s2);
    CHECK(s2->indices == std::vector<std::size_t>{1});
    CHECK(to_string(g2.alphabet, s2->match) == "b a a a");
    CHECK(verifies(g2, *s2));
    CHECK_FALSE(gpcp_brute_force(g2, 0));

    CHECK_FALSE(gpcp_brute_force(parse_gpcp("start: a | a a\nend: a b | a"), 3));
}

TEST_CASE("binarization") {
    const GpcpInstance g2 = parse_gpcp(kG2);
    CHECK(is_binary(g2));
    const BinarizedInstance same = binarize(g2);
    CHECK(same.table.identity);
    CHECK(same.instance.start == g2.start);

    GpcpInstance xyz;
    xyz.alphabet = Alphabet({"x", "y", "z"});
    xyz.start = {parse_word(xyz.alphabet, "x z"), parse_word(xyz.alphabet, "y")};
    xyz.end = {parse_word(xyz.alphabet, "y"), parse_word(xyz.alphabet, "y")};
    CHECK_FALSE(is_binary(xyz));
    const BinarizedInstance bin = binarize(xyz);
    CHECK_FALSE(bin.table.identity);
    CHECK(to_string(bin.instance.alphabet, bin.instance.start.top) == "a a b b");
    CHECK(to_string(bin.instance.alphabet, bin.instance.start.bottom) == "a b");
    const SymbolString w = parse_word(xyz.alphabet, "z x y");
    CHECK(bin.table.invert(bin.table.apply(w)) == w);
    CHECK_THROWS_AS(bin.table.invert(parse_word(bin.instance.alphabet, "b")), PreconditionError);
}

TEST_CASE("encoding of G1 and G2") {
    const CtEncoding g1 = encode(parse_gpcp(kG1));
    CHECK(g1.srs.rules().size() == 16);
    CHECK(rule_strings(g1.srs, "D").size() == 12);
    CHECK(rule_strings(g1.srs, "I").front() == "cent1 a1 B c0 -> eps");
    CHECK(rule_strings(g1.srs, "II").empty());
    CHECK(rule_strings(g1.srs, "III").size() == 2);
    CHECK(g1.srs.show(g1.image(1, parse_word(g1.instance.alphabet, "a"))) == "a1 a2 a3");
    CHECK(g1.srs.show(g1.alpha) == "cent1");
    CHECK(g1.srs.show(g1.beta) == "cent2");

    const CtEncoding g2 = encode(parse_gpcp(kG2));
    CHECK(g2.srs.rules().size() == 18);
    CHECK(rule_strings(g2.srs, "II") == std::vector<std::string>{"a1 a1 B c1 -> eps", "a1 a2 c1 B -> eps"});
    CHECK(g2.controls.size() == 3);
    CHECK(g2.srs.show(g2.image(1, parse_word(g2.instance.alphabet, "b"))) == "b1 b2 b3");
    CHECK(g2.srs.show(g2.image(2, parse_word(g2.instance.alphabet, "a b"))) == "a1 a2 b1 b2");
    CHECK(g2.srs.show(g2.image(3, parse_word(g2.instance.alphabet, "b a"))) == "b1 a1");

    for (const CtEncoding* e : {&g1, &g2}) {
        const ClassReport r = classify(e->srs);
        CHECK(r.dwindling);
        CHECK(r.orthogonal);
        CHECK(critical_pairs(e->srs).empty());
        CHECK(check_convergent(e->srs).convergent);
    }
    CHECK_THROWS_AS(encode(parse_gpcp("start: x | x\nend: x | x")), PreconditionError);
}

TEST_CASE("encoder file output") {
    const std::string text = format_encoding(encode(parse_gpcp(kG1)));
    CHECK(text.starts_with("# alpha: cent1\n# beta: cent2\n"));
    CHECK(structurally_equal(parse_srs(text), encode(parse_gpcp(kG1)).srs));
    const std::string bin = format_encoding(encode_any(parse_gpcp("start: x | x y\nend: y | y")));
    CHECK(bin.find("# binarization:") != std::string::npos);
}

TEST_CASE("witness translation for G1") {
    const CtEncoding g1 = encode(parse_gpcp(kG1));
    const GpcpSolution sol{{}, parse_word(g1.instance.alphabet, "a a a")};
    const CtWitness w = witness_from_solution(g1, sol);
    CHECK(g1.srs.show(w.word) == "a1 a2 a3 a1 a2 a3 a1 a2 a3 c1 B c0");
    CHECK(g1.srs.show(w.tail) == "c1 B c0");
    CHECK(verify_witness(g1, w.word));
    CHECK(normal_form(g1.srs, concat(g1.alpha, w.word)).empty());
    CHECK(normal_form(g1.srs, concat(g1.beta, w.word)).empty());
    CHECK(solution_from_witness(g1, w.word) == sol);

    CHECK_THROWS_AS(witness_from_solution(g1, {{}, parse_word(g1.instance.alphabet, "a a")}), PreconditionError);
    CHECK_FALSE(verify_witness(g1, {}));
    CHECK_THROWS_AS(solution_from_witness(g1, g1.srs.word("c0")), PreconditionError);
}

TEST_CASE("witness translation for G2") {
    const CtEncoding g2 = encode(parse_gpcp(kG2));
    const GpcpSolution sol{{1}, parse_word(g2.instance.alphabet, "b a a a")};
    const CtWitness w = witness_from_solution(g2, sol);
    CHECK(g2.srs.show(w.word) == "b1 b2 b3 a1 a2 a3 a1 a2 a3 a1 a2 a3 c2 B c1 B c0");
    CHECK(verify_witness(g2, w.word));
    CHECK(solution_from_witness(g2, w.word) == sol);

    const SymbolString swapped = concat(g2.image(1, sol.match), g2.srs.word("c2 B c0 B c1"));
    CHECK_FALSE(verify_witness(g2, swapped));
}

TEST_CASE("tail form") {
    const CtEncoding g2 = encode(parse_gpcp(kG2));
    CHECK(is_tail_form(g2, g2.srs.word("c0")));
    CHECK(is_tail_form(g2, g2.srs.word("c1 B c0")));
    CHECK(is_tail_form(g2, g2.srs.word("c1 B c1 B c0")));
    CHECK_FALSE(is_tail_form(g2, g2.srs.word("B c0")));
    CHECK_FALSE(is_tail_form(g2, g2.srs.word("c2 B c0")));
    CHECK_FALSE(is_tail_form(g2, g2.srs.word("c1 B")));
    CHECK_FALSE(is_tail_form(g2, {}));
}

TEST_CASE("ct on G2's encoding finds a witness of the predicted shape") {
    const CtEncoding g2 = encode(parse_gpcp(kG2));
    const SearchOutcome r = ct_search({g2.srs, g2.alpha, g2.beta}, 17);
    REQUIRE(r.found());
    CHECK(verify_witness(g2, r.witness[0]));
    const GpcpSolution back = solution_from_witness(g2, r.witness[0]);
    CHECK(verifies(g2.instance, back));
    CHECK(back.indices == std::vector<std::size_t>{1});
}

TEST_CASE("ct on an unsolvable encoding stays exhausted") {
    // every y component is longer than its x component, so no match exists
    const CtEncoding e = encode(parse_gpcp("start: a | a a\ntile: b | b b\nend: a | a a"));
    CHECK_FALSE(gpcp_brute_force(e.instance, 4));
    CHECK(ct_search({e.srs, e.alpha, e.beta}, 12).status == SearchStatus::exhausted);
}

TEST_CASE("property: binarization preserves solution index sets") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 150; ++i) {
        GpcpInstance inst;
        inst.alphabet = Alphabet({"x", "y", "z"});
        auto word = [&] { return testgen::random_word(rng, 3, 1, 3); };
        inst.start = {word(), word()};
        for (int t = 0; t < 2; ++t) inst.tiles.push_back({word(), word()});
        inst.end = {word(), word()};
        const BinarizedInstance bin = binarize(inst);
        CHECK(all_solutions(inst, 3) == all_solutions(bin.instance, 3));
    }
}

TEST_CASE("property: encoder well-formedness and round-trips") {
    std::mt19937_64 rng(52);
    int solved = 0;
    for (int i = 0; i < 200; ++i) {
        const GpcpInstance inst = testgen::random_gpcp(rng, 3, 3);
        const CtEncoding enc = encode(inst);
        const std::size_t n = inst.tile_count();
        CHECK(enc.srs.rules().size() == 12 + 2 + 2 * n + 2);
        const ClassReport r = classify(enc.srs);
        CHECK(r.dwindling);
        CHECK(r.length_reducing);
        CHECK(r.orthogonal);
        CHECK(check_convergent(enc.srs).convergent);
        const auto sol = gpcp_brute_force(inst, 4);
        if (!sol) continue;
        ++solved;
        const CtWitness w = witness_from_solution(enc, *sol);
        CHECK(verify_witness(enc, w.word));
        CHECK(solution_from_witness(enc, w.word) == *sol);
    }
    CHECK(solved > 2);
}

namespace {

// gammas over `symbols` with |gamma| <= max_len that erase both hypothesis prefixes
std::vector<SymbolString> erasing_tails(const CtEncoding& enc, const std::vector<Symbol>& symbols,
                                        std::size_t max_len, std::size_t w_len = 3) {
    const Srs& s = enc.srs;
    std::vector<SymbolString> h3s, h2s, out;
    for (const SymbolString& w : enumerate_candidates(enc.instance.alphabet, w_len)) {
        h3s.push_back(concat(concat(enc.alpha, enc.image(3, w)), s.word("B")));
        h2s.push_back(concat(enc.beta, enc.image(2, w)));
    }
    testgen::for_each_word_upto(symbols.size(), max_len, [&](const SymbolString& code) {
        SymbolString gamma;
        for (Symbol c : code) gamma.push_back(symbols[index_of(c)]);
        bool first = false, second = false;
        for (const auto& p : h3s) first = first || normal_form(s, concat(p, gamma)).empty();
        if (!first) return;
        for (const auto& p : h2s) second = second || normal_form(s, concat(p, gamma)).empty();
        if (second) out.push_back(gamma);
    });
    return out;
}

}  // namespace

TEST_CASE("property: erasing control tails have the tail form") {
    const CtEncoding g2 = encode(parse_gpcp(kG2));
    std::vector<Symbol> controls = g2.controls;
    controls.push_back(g2.marker_b);
    const auto tails = erasing_tails(g2, controls, 6, 7);
    CHECK(tails.size() >= 3);
    for (const SymbolString& gamma : tails)
        if (!is_tail_form(g2, gamma)) FAIL_CHECK(g2.srs.show(gamma));
}

TEST_CASE("tails with letter symbols escape the tail form") {
    // c0 closes the start domino and a1 c2 is the end domino's own redex
    const CtEncoding g2 = encode(parse_gpcp(kG2));
    std::vector<Symbol> all;
    for (std::size_t i = 0; i < g2.srs.alphabet().size(); ++i) all.push_back(g2.srs.alphabet().at(i));
    std::set<std::string> odd;
    for (const SymbolString& gamma : erasing_tails(g2, all, 3))
        if (!is_tail_form(g2, gamma)) odd.insert(g2.srs.show(gamma));
    CHECK(odd.count("c0 a1 c2") == 1);
    const Srs& s = g2.srs;
    CHECK(normal_form(s, s.word("cent1 b1 B c0 a1 c2")).empty());
    CHECK(normal_form(s, s.word("cent2 b1 b2 a1 a2 c0 a1 c2")).empty());
}
