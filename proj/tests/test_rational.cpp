#include "doctest.h"

#include "chordlie/rational.hpp"

using namespace chordlie;

TEST_CASE("rat_str canonical forms") {
    CHECK(rat_str(Rat(0)) == "0");
    CHECK(rat_str(Rat(3)) == "3");
    CHECK(rat_str(Rat(-1)) == "-1");
    CHECK(rat_str(Rat(3, 2)) == "3/2");
    CHECK(rat_str(Rat(-7, 3)) == "-7/3");
}

TEST_CASE("rat_parse accepts integers, fractions, signs") {
    CHECK(rat_parse("0") == 0);
    CHECK(rat_parse("12") == 12);
    CHECK(rat_parse("-5") == -5);
    CHECK(rat_parse("+5") == 5);
    CHECK(rat_parse("3/2") == Rat(3, 2));
    CHECK(rat_parse("-3/2") == Rat(-3, 2));
    CHECK(rat_parse("4/6") == Rat(2, 3));   // canonicalized
    CHECK(rat_parse("-4/6") == Rat(-2, 3));
}

TEST_CASE("rat_parse round-trips rat_str") {
    for (const char* s : {"0", "1", "-1", "3/2", "-22/7", "1000000000000/7"})
        CHECK(rat_str(rat_parse(s)) == s);
}

TEST_CASE("rat_parse rejects malformed input") {
    for (const char* s : {"", "abc", "1/", "/2", "1/0", "1//2", "1/2/3", "2.5", "- 1", "1 2"})
        CHECK_THROWS_AS(rat_parse(s), parse_error);
}
