#include "doctest.h"

#include <vector>

#include "chordlie/linalg.hpp"

using namespace chordlie;

namespace {

SparseRationalMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
    SparseRationalMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return m;
}

SparseRationalMatrix transpose(const SparseRationalMatrix& m) {
    SparseRationalMatrix t(m.cols, m.rows);
    for (const auto& [rc, v] : m.entries) t.set(rc.second, rc.first, v);
    return t;
}

bool in_kernel(const SparseRationalMatrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(static_cast<std::size_t>(m.rows), Rat(0));
    for (const auto& [rc, val] : m.entries)
        out[static_cast<std::size_t>(rc.first)] += val * v[static_cast<std::size_t>(rc.second)];
    for (const auto& x : out)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("set/add/get maintain sparsity") {
    SparseRationalMatrix m(2, 2);
    m.set(0, 0, Rat(1, 2));
    CHECK(m.nnz() == 1);
    m.add(0, 0, Rat(-1, 2));
    CHECK(m.nnz() == 0);
    CHECK(m.get(0, 0) == nullptr);
    m.set(1, 1, 3);
    m.set(1, 1, 0);
    CHECK(m.nnz() == 0);
}

TEST_CASE("dump is 1-indexed row-major 'row col p/q' lines") {
    SparseRationalMatrix m(2, 3);
    m.set(0, 1, Rat(1, 2));
    m.set(1, 0, -3);
    m.set(0, 0, 2);
    CHECK(m.dump() == "1 1 2\n1 2 1/2\n2 1 -3\n");
}

TEST_CASE("rank of simple matrices") {
    CHECK(rank(SparseRationalMatrix(0, 5)) == 0);
    CHECK(rank(SparseRationalMatrix(5, 0)) == 0);
    CHECK(rank(from_rows({{1, 0}, {0, 1}}, 2)) == 2);
    CHECK(rank(from_rows({{1, 2}, {2, 4}}, 2)) == 1);
    CHECK(rank(from_rows({{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 6)}}, 2)) == 1);
    CHECK(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3)) == 2);
}

TEST_CASE("kernel vectors satisfy M v = 0 and count cols - rank") {
    const SparseRationalMatrix m = from_rows(
        {{1, 2, 3, 0}, {0, 1, 1, -1}, {1, 3, 4, -1}}, 4);  // row3 = row1 + row2
    const auto res = eliminate(m, true);
    CHECK(res.rank == 2);
    CHECK(res.kernel.size() == 2);
    for (const auto& v : res.kernel) CHECK(in_kernel(m, v));
}

TEST_CASE("kernel of a zero map is the identity-like basis") {
    const auto kernel = kernel_basis(SparseRationalMatrix(3, 3));
    REQUIRE(kernel.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(kernel[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("full-rank square matrix has empty kernel") {
    const auto kernel = kernel_basis(from_rows({{2, 1}, {1, 1}}, 2));
    CHECK(kernel.empty());
}

TEST_CASE("rank is transpose-invariant") {
    const SparseRationalMatrix ms[] = {
        from_rows({{1, 2, 3}, {4, 5, 6}}, 3),
        from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}, 3),
        from_rows({{Rat(2, 3), 0, 1}, {0, 0, 0}, {4, 0, 6}}, 3),
    };
    for (const auto& m : ms) CHECK(rank(m) == rank(transpose(m)));
}

TEST_CASE("deterministic exactness on an ill-conditioned-looking system") {
    // Rows built from large primes; floating point would lose these ranks.
    SparseRationalMatrix m(3, 3);
    m.set(0, 0, Rat("1000000007"));
    m.set(0, 1, Rat("998244353"));
    m.set(1, 0, Rat("2000000014"));  // 2 * row 0
    m.set(1, 1, Rat("1996488706"));
    m.set(2, 2, Rat(1, 1000000007));
    CHECK(rank(m) == 2);
    const auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    CHECK(in_kernel(m, kernel[0]));
}

TEST_CASE("elimination respects the dimension cap") {
    const int old_cap = elimination_dimension_cap();
    set_elimination_dimension_cap(2);
    CHECK_THROWS_AS(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3)), cap_exceeded);
    CHECK(rank(from_rows({{1, 0}, {0, 1}}, 2)) == 2);
    set_elimination_dimension_cap(old_cap);
    CHECK_THROWS_AS(set_elimination_dimension_cap(0), std::invalid_argument);
}
