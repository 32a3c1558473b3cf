#include <doctest.h>

#include <random>

#include "twistlab/errors.hpp"
#include "twistlab/word.hpp"

using namespace twistlab;

TEST_CASE("token parsing") {
    const auto w = parse_word("c3 b0^-1 s4 tc");
    REQUIRE(w.size() == 4);
    CHECK(w[0] == TwistSymbol::c(3));
    CHECK(w[1] == TwistSymbol::b(0, -1));
    CHECK(w[2] == TwistSymbol::sigma(4));
    CHECK(w[3] == TwistSymbol::named("tc"));
    CHECK(parse_word("c") == TwistWord({TwistSymbol::named("c")}));
    CHECK(parse_word("c1c2") == parse_word("c1 c2"));
    CHECK(parse_word("sigma2") == parse_word("s2"));
    CHECK(parse_word("c10 c11^{-1}") == TwistWord({TwistSymbol::c(10), TwistSymbol::c(11, -1)}));
    CHECK(parse_word("").empty());
}

TEST_CASE("digit shorthand and grouping") {
    CHECK(parse_word("121") == parse_word("c1 c2 c1"));
    CHECK(parse_word("(21)^-6").size() == 12);
    CHECK(parse_word("(21)^-6") == parse_word("(c1^-1 c2^-1)^6"));
    CHECK(parse_word("(1234)^-1") == parse_word("c4^-1 c3^-1 c2^-1 c1^-1"));
    // The exponent binds to the last digit only.
    CHECK(parse_word("1211^-1") == parse_word("c1 c2 c1 c1^-1"));
    CHECK(parse_word("(s5 s4 s3 s2 s1)^6").size() == 30);
    CHECK(parse_word("((12)^2 3)^2") == parse_word("1212312123"));
    CHECK(parse_word("1^0").empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_word("(12"), ParseError);
    CHECK_THROWS_AS(parse_word("12)"), ParseError);
    CHECK_THROWS_AS(parse_word("c1^"), ParseError);
    CHECK_THROWS_AS(parse_word("103"), ParseError);
    CHECK_THROWS_AS(parse_word("c1 ! c2"), ParseError);
}

TEST_CASE("word algebra") {
    const auto w = parse_word("c1 c2^-1 b3");
    CHECK(w.inverse() == parse_word("b3^-1 c2 c1^-1"));
    CHECK(w.inverse().inverse() == w);
    CHECK(w.power(2) == w * w);
    CHECK(w.power(-1) == w.inverse());
    CHECK(w.subword(1, 2) == parse_word("c2^-1 b3"));
    CHECK(w.spliced(1, 1, parse_word("c5 c6")) == parse_word("c1 c5 c6 b3"));
    CHECK_THROWS(w.subword(2, 5));
}

TEST_CASE("formatting") {
    CHECK(format_word(parse_word("c1 c2^-1 s3 b0")) == "c1 c2^-1 s3 b0");
    CHECK(format_word(parse_word("123451234123121(21)^-6"), WordStyle::compact) == "123451234123121(21)^-6");
    CHECK(format_word(parse_word("12345(1234)^-1 11234(1123)^-1 21123(2112)^-1"), WordStyle::compact) ==
          "12345(1234)^-1 11234(1123)^-1 21123(2112)^-1");
    CHECK(format_word(parse_word("1232^-1"), WordStyle::compact) == "1232^-1");
    // Falls back to tokens outside c1..c9.
    CHECK(format_word(parse_word("s1 s2"), WordStyle::compact) == "s1 s2");
}

TEST_CASE("compact format round-trips") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<unsigned> idx(1, 5);
    std::uniform_int_distribution<int> len(0, 30), sign(0, 3);
    for (int t = 0; t < 500; ++t) {
        TwistWord w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(TwistSymbol::c(idx(rng), sign(rng) == 0 ? -1 : 1));
        CHECK(parse_word(format_word(w, WordStyle::compact)) == w);
        CHECK(parse_word(format_word(w)) == w);
    }
}
