#include "doctest.h"

#include <map>
#include <set>

#include "chordlie/diagram.hpp"
#include "chordlie/literals.hpp"

using namespace chordlie;

namespace {

LinearDiagram lin(const std::string& s) { return parse_linear_literal(s); }

StandardDiagram std_diag(const std::string& s) {
    SignedStandard r = standardize(lin(s));
    REQUIRE(r.sign == 1);
    return r.diagram;
}

}  // namespace

TEST_CASE("validate rejects malformed diagrams") {
    CHECK_THROWS_AS(validate({{1, 1}}), std::invalid_argument);        // degenerate
    CHECK_THROWS_AS(validate({{1, 3}}), std::invalid_argument);        // out of range
    CHECK_THROWS_AS(validate({{0, 1}}), std::invalid_argument);        // out of range
    CHECK_THROWS_AS(validate({{1, 2}, {2, 3}}), std::invalid_argument);  // reuse
    CHECK_NOTHROW(validate(lin("2>1")));
    CHECK_NOTHROW(validate(lin("1>3 2>4")));
}

TEST_CASE("standardize flips with sign -1 per flip and sorts") {
    SignedStandard r = standardize(lin("2>1"));
    CHECK(r.sign == -1);
    CHECK(r.diagram == std_diag("1>2"));

    r = standardize(lin("3>4 2>1"));
    CHECK(r.sign == -1);
    CHECK(r.diagram == std_diag("1>2 3>4"));

    r = standardize(lin("4>3 2>1"));
    CHECK(r.sign == 1);
    CHECK(r.diagram == std_diag("1>2 3>4"));
}

TEST_CASE("rotate: one wrap per step, sign -1") {
    SignedStandard r = rotate(std_diag("1>2 3>5 4>6"));
    CHECK(r.sign == -1);
    CHECK(r.diagram == std_diag("1>5 2>3 4>6"));

    r = rotate(std_diag("1>2"));
    CHECK(r.sign == -1);
    CHECK(r.diagram == std_diag("1>2"));

    r = rotate(std_diag("1>3 2>4"));
    CHECK(r.sign == -1);
    CHECK(r.diagram == std_diag("1>3 2>4"));
}

TEST_CASE("rotation orbit signs alternate and the signed class is rotation-invariant") {
    for (int m = 1; m <= 3; ++m) {
        for (const auto& d : enumerate_linear(m)) {
            const auto orbit = rotation_orbit(d);
            REQUIRE(orbit.size() == static_cast<std::size_t>(2 * m));
            const auto base = canonical_cyclic(d.chords);
            for (std::size_t s = 0; s < orbit.size(); ++s) {
                CHECK(orbit[s].sign == (s % 2 == 0 ? 1 : -1));
                // The raw s-fold rotation standardizes to (sign_s, diagram_s);
                // its signed canonical class must equal the base class.
                const auto at = canonical_cyclic(orbit[s].diagram.chords);
                REQUIRE(at.has_value() == base.has_value());
                if (base) {
                    CHECK(at->cls == base->cls);
                    CHECK(orbit[s].sign * at->sign == base->sign);
                }
            }
        }
    }
}

TEST_CASE("canonical_cyclic examples") {
    CHECK_FALSE(canonical_cyclic(lin("1>3 2>4")).has_value());  // odd index

    auto r = canonical_cyclic(lin("1>2 3>4"));
    REQUIRE(r);
    CHECK(r->sign == 1);
    CHECK(r->cls.rep == std_diag("1>2 3>4"));
    CHECK(r->cls.index == 2);

    r = canonical_cyclic(lin("2>3 4>1"));
    REQUIRE(r);
    CHECK(r->sign == 1);
    CHECK(r->cls.rep == std_diag("1>2 3>4"));
}

TEST_CASE("index_of") {
    CHECK(index_of(std_diag("1>2")) == 1);
    CHECK(index_of(std_diag("1>2 3>4")) == 2);
    CHECK(index_of(std_diag("1>3 2>4")) == 1);
    // Isolated chords repeat with period 2 under rotation at every m.
    CHECK(index_of(std_diag("1>2 3>4 5>6")) == 2);
    CHECK(index_of(std_diag("1>2 3>4 5>6 7>8")) == 2);
    CHECK(index_of(std_diag("1>2 3>5 4>6")) == 6);
}

TEST_CASE("dimensions and index histograms, m = 1..6") {
    const std::size_t lc_dims[] = {1, 3, 15, 105, 945, 10395};
    const std::size_t c_dims[] = {0, 1, 2, 17, 88, 897};
    const std::map<int, int> hists[] = {
        {{1, 1}},
        {{1, 1}, {2, 1}},
        {{1, 1}, {2, 1}, {3, 2}, {6, 1}},
        {{1, 1}, {2, 2}, {4, 5}, {8, 10}},
        {{1, 1}, {2, 2}, {5, 16}, {10, 86}},
        {{1, 1}, {2, 3}, {3, 4}, {4, 5}, {6, 52}, {12, 837}},
    };
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(enumerate_linear(m).size() == lc_dims[m - 1]);
        CHECK(enumerate_cyclic_basis(m).size() == c_dims[m - 1]);
        CHECK(index_histogram(m) == hists[m - 1]);
    }
}

TEST_CASE("enumerate_linear caps") {
    CHECK_THROWS_AS(enumerate_linear(9), cap_exceeded);
    CHECK_THROWS_AS(enumerate_linear(0), std::invalid_argument);
    CHECK_NOTHROW(enumerate_linear(9, 9));
}

TEST_CASE("cyclic basis representatives for m = 3 and m = 4") {
    const auto b3 = enumerate_cyclic_basis(3);
    REQUIRE(b3.size() == 2);
    CHECK(b3[0].rep == std_diag("1>2 3>4 5>6"));
    CHECK(b3[0].index == 2);
    CHECK(b3[1].rep == std_diag("1>2 3>5 4>6"));
    CHECK(b3[1].index == 6);

    const char* expected4[] = {
        "1>2 3>4 5>6 7>8", "1>2 3>4 5>7 6>8", "1>2 3>4 5>8 6>7", "1>2 3>5 4>7 6>8",
        "1>2 3>5 4>8 6>7", "1>2 3>6 4>7 5>8", "1>2 3>6 4>8 5>7", "1>2 3>7 4>6 5>8",
        "1>2 3>7 4>8 5>6", "1>2 3>8 4>6 5>7", "1>2 3>8 4>7 5>6", "1>3 2>4 5>7 6>8",
        "1>3 2>5 4>7 6>8", "1>3 2>6 4>7 5>8", "1>3 2>6 4>8 5>7", "1>4 2>6 3>7 5>8",
        "1>4 2>7 3>6 5>8",
    };
    const auto b4 = enumerate_cyclic_basis(4);
    REQUIRE(b4.size() == 17);
    for (std::size_t i = 0; i < b4.size(); ++i) {
        CAPTURE(i);
        CHECK(b4[i].rep == std_diag(expected4[i]));
    }
}

TEST_CASE("omega_diagram") {
    CHECK_THROWS_AS(omega_diagram(1), std::invalid_argument);
    const CyclicClass o2 = omega_diagram(2);
    CHECK(o2.rep == std_diag("1>2 3>4"));
    CHECK(o2.index == 2);
    CHECK(omega_diagram(4).index == 2);
}

TEST_CASE("one-crossing classes d_ab") {
    CHECK_FALSE(d_ab(1, 1).has_value());
    CHECK_FALSE(d_ab(4, 4).has_value());

    auto d12 = d_ab(1, 2);
    REQUIRE(d12);
    CHECK(d12->sign == -1);
    CHECK(d12->cls.rep == std_diag("1>2 3>4 5>8 6>7"));
    CHECK(d12->cls.index == 8);

    auto d13 = d_ab(1, 3);
    REQUIRE(d13);
    CHECK(d13->sign == -1);
    CHECK(d13->cls.rep == std_diag("1>2 3>4 5>6 7>10 8>9"));
    CHECK(d13->cls.index == 10);

    auto d31 = d_ab(3, 1);
    REQUIRE(d31);
    CHECK(d31->sign == 1);
    CHECK(d31->cls.rep == d13->cls.rep);

    auto d25 = d_ab(2, 5);
    REQUIRE(d25);
    CHECK(d25->sign == -1);
    CHECK(d25->cls.rep == std_diag("1>2 3>4 5>6 7>8 9>10 11>16 12>13 14>15"));
    CHECK(d25->cls.index == 16);
}

TEST_CASE("d_ab antisymmetry sweep, a,b <= 5") {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            INFO("a=", a, " b=", b);
            const auto ab = d_ab(a, b), ba = d_ab(b, a);
            if (a == b) {
                CHECK_FALSE(ab.has_value());
                continue;
            }
            REQUIRE(ab);
            REQUIRE(ba);
            CHECK(ab->cls == ba->cls);
            CHECK(ab->sign == -ba->sign);
        }
    }
}
