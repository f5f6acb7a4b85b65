#include <doctest.h>

#include "srsdual/error.hpp"
#include "srsdual/symbols.hpp"

using namespace srsdual;

TEST_CASE("interning is dense and idempotent") {
    Alphabet a;
    CHECK(a.intern("s") == Symbol{0});
    CHECK(a.intern("p") == Symbol{1});
    CHECK(a.intern("s") == Symbol{0});
    CHECK(a.size() == 2);
    CHECK(a.name(Symbol{1}) == "p");
    CHECK(a.find("q") == std::nullopt);
    CHECK(a.at(1) == Symbol{1});
    CHECK_THROWS(a.at(2));
}

TEST_CASE("word parsing and printing") {
    const Alphabet a({"cent1", "a1", "B", "c0"});
    const SymbolString w = parse_word(a, "  cent1 a1\tB c0 ");
    REQUIRE(w.size() == 4);
    CHECK(to_string(a, w) == "cent1 a1 B c0");
    CHECK(parse_word(a, "eps").empty());
    CHECK(parse_word(a, "").empty());
    CHECK(to_string(a, SymbolString{}) == "eps");
    CHECK_THROWS_AS(parse_word(a, "a2"), ParseError);
}

TEST_CASE("character mode") {
    const Alphabet a({"s", "p"});
    CHECK(parse_word_chars(a, "s ps") == parse_word(a, "s p s"));
    CHECK_THROWS_AS(parse_word_chars(a, "sx"), ParseError);
}

TEST_CASE("factor search") {
    const Alphabet a({"a", "b", "c"});
    const SymbolString w = parse_word(a, "a a b c c");
    CHECK(contains_factor(w, parse_word(a, "a b c")));
    CHECK(contains_factor(w, SymbolString{}));
    CHECK_FALSE(contains_factor(w, parse_word(a, "a c")));
    CHECK(concat(parse_word(a, "a"), parse_word(a, "b c")) == parse_word(a, "a b c"));
}
