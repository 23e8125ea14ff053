#include "doctest.h"

#include <functional>
#include <string>

#include "chordlie/chord_lie.hpp"
#include "chordlie/diagram.hpp"
#include "chordlie/literals.hpp"
#include "chordlie/sp_tensor.hpp"

using namespace chordlie;

namespace {

std::size_t error_pos(const std::function<void()>& f) {
    try {
        f();
    } catch (const parse_error& e) {
        return e.pos;
    }
    FAIL("expected a parse_error");
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("linear diagram literals") {
    const LinearDiagram d{{1, 2}, {3, 4}};
    CHECK(parse_linear_literal("1>2 3>4") == d);
    CHECK(parse_linear_literal("lin: 1>2 3>4") == d);
    CHECK(parse_linear_literal("  lin:  1>2   3>4  ") == d);
    CHECK(parse_linear_literal("3>4 2>1") == LinearDiagram{{3, 4}, {2, 1}});
    CHECK(format_chords(parse_linear_literal("1>2 3>4")) == "1>2 3>4");
    CHECK(format_linear(standardize(parse_linear_literal("2>1 3>4")).diagram) == "lin: 1>2 3>4");
}

TEST_CASE("linear literal rejections carry positions") {
    CHECK(error_pos([] { parse_linear_literal(""); }) == 0);
    CHECK(error_pos([] { parse_linear_literal("1>2 3"); }) == 5);
    CHECK(error_pos([] { parse_linear_literal("1>2 x"); }) == 4);
    CHECK_THROWS_AS(parse_linear_literal("1>2 2>3"), parse_error);  // not a matching
    CHECK_THROWS_AS(parse_linear_literal("1>1"), parse_error);
    CHECK_THROWS_AS(parse_linear_literal("1>2 3>4 extra"), parse_error);
}

TEST_CASE("linear vector literals fold signs and orientations") {
    CHECK(parse_lc_vector("0").empty());
    CHECK(format_lc_vector(LCVector{}) == "0");
    CHECK(parse_lc_vector("2>1") == parse_lc_vector("-1 * 1>2"));
    CHECK(parse_lc_vector("3/2 * 1>2 + -1/2 * lin: 1>2") == parse_lc_vector("1>2"));
    CHECK(parse_lc_vector("1>2 + -1 * 1>2").empty());
    CHECK(parse_lc_vector("1>2 - 1>2").empty());
    CHECK(parse_lc_vector("E0") == e0());
    CHECK(parse_lc_vector("-E0") == parse_lc_vector("1/2 * 1>2"));
    CHECK(parse_lc_vector("2 * E0 + 1>2") == LCVector{});
    CHECK_THROWS_AS(parse_lc_vector("E0x"), parse_error);
    CHECK(error_pos([] { parse_lc_vector("1>2 +"); }) == 5);
    CHECK(error_pos([] { parse_lc_vector("1>2 1>3"); }) == 0);  // duplicate vertex
}

TEST_CASE("cyclic vector literals canonicalize and drop vanishing classes") {
    CHECK(parse_c_vector("0").empty());
    CHECK(parse_c_vector("1>3 2>4").empty());  // odd index
    CHECK(parse_c_vector("omega(2)") == cvec(omega_diagram(2)));
    CHECK(parse_c_vector("cyc: 3>4 1>2") == cvec(omega_diagram(2)));
    CHECK(parse_c_vector("cyc[index=2]: 1>2 3>4") == cvec(omega_diagram(2)));
    CHECK(parse_c_vector("d(2,1) + d(1,2)").empty());
    CHECK(parse_c_vector("d(1,1)").empty());
    CHECK(parse_c_vector("2 * omega(2) - 2 * omega(2)").empty());
    CHECK_THROWS_AS(parse_c_vector("omega(1)"), parse_error);
    CHECK_THROWS_AS(parse_c_vector("d(0,2)"), parse_error);
    CHECK_THROWS_AS(parse_c_vector("cyc[index=4]: 1>2 3>4"), parse_error);
    CHECK_THROWS_AS(parse_c_vector("cyc[idx=2]: 1>2 3>4"), parse_error);
}

TEST_CASE("vector literals round-trip through their rendering") {
    const CVector cv = parse_c_vector("omega(2) + 3 * omega(3) + -1/2 * d(1,2)");
    CHECK(parse_c_vector(format_c_vector(cv)) == cv);

    const LCVector lcv =
        bracket_linear(parse_lc_vector("1>3 2>4"), parse_lc_vector("1>2 3>4"));
    CHECK(parse_lc_vector(format_lc_vector(lcv)) == lcv);

    const CVector br = bracket_cyclic(parse_c_vector("d(1,2)"), parse_c_vector("d(2,5)"));
    CHECK(parse_c_vector(format_c_vector(br)) == br);

    CHECK(parse_c_vector(format_c_vector(CVector{})).empty());
    CHECK(parse_lc_vector(format_lc_vector(LCVector{})).empty());
}

TEST_CASE("tensor literals") {
    const Tensor om = omega_tensor(SymplecticSpace(2));
    CHECK(parse_tensor("g=2: 1 * A1 B1 + -1 * B1 A1 + 1 * A2 B2 + -1 * B2 A2") == om);
    CHECK(parse_tensor(format_tensor(om)) == om);
    CHECK(format_tensor(Tensor{}) == "g=1: 0");
    CHECK(parse_tensor("g=1: 0").is_zero());
    CHECK(parse_tensor("g=1: 0").g == 1);
    CHECK(parse_tensor("g=1: A1 B1 - B1 A1") == omega_tensor(SymplecticSpace(1)));
    CHECK(parse_tensor("g=3: 5/3 * A3") == tensor_scale(parse_tensor("g=3: 1 * A3"), Rat(5, 3)));

    CHECK(error_pos([] { parse_tensor("h=1: 1 * A1"); }) == 0);
    CHECK(error_pos([] { parse_tensor("g=1: 1 * A2"); }) == 9);
    CHECK_THROWS_AS(parse_tensor("g=0: 1 * A1"), parse_error);
    CHECK_THROWS_AS(parse_tensor("g=1: 1 *"), parse_error);
    CHECK_THROWS_AS(parse_tensor("g=1: C1"), parse_error);
}

TEST_CASE("format_tensor orders words by length then lexicographically") {
    Tensor t;
    t.g = 1;
    add_term(t, Word{1, 0}, 2);   // B1 A1
    add_term(t, Word{0}, 1);      // A1
    add_term(t, Word{0, 1}, -1);  // A1 B1
    CHECK(format_tensor(t) == "g=1: 1 * A1 + -1 * A1 B1 + 2 * B1 A1");
}

TEST_CASE("polynomial vector field rendering") {
    CHECK(format_pvf(PolyVectorField{}) == "0");
    CHECK(format_pvf(kappa(parse_lc_vector("1>2 3>4"))) == "-2 * x^2 d/dx");
    CHECK(format_pvf(PolyVectorField{{1, Rat(1, 2)}, {3, Rat(-2)}}) ==
          "1/2 * x^1 d/dx + -2 * x^3 d/dx");
}

TEST_CASE("json rendering") {
    const auto jl = vector_json(parse_lc_vector("E0"));
    CHECK(jl["algebra"] == "LC");
    REQUIRE(jl["terms"].size() == 1);
    CHECK(jl["terms"][0]["coeff"] == "-1/2");
    CHECK(jl["terms"][0]["diagram"] == "lin: 1>2");

    const auto jc = vector_json(parse_c_vector("omega(2)"));
    CHECK(jc["algebra"] == "C");
    REQUIRE(jc["terms"].size() == 1);
    CHECK(jc["terms"][0]["coeff"] == "1");
    CHECK(jc["terms"][0]["diagram"] == "cyc[index=2]: 1>2 3>4");

    CHECK(vector_json(LCVector{})["terms"].empty());
}
