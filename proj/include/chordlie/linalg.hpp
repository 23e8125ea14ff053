#pragma once

// Exact sparse rational linear algebra: rank and right-kernel bases via
// fraction-free (Bareiss-style) elimination with Markowitz pivot selection.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordlie/rational.hpp"

namespace chordlie {

struct SparseRationalMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Rat> entries;  // (row, col) -> nonzero value

    SparseRationalMatrix() = default;
    SparseRationalMatrix(int r, int c) : rows(r), cols(c) {}

    // Stores v at (r, c); erasing the entry when v == 0.  0-based indices.
    void set(int r, int c, const Rat& v);
    // Adds v into (r, c), erasing the entry if the sum vanishes.
    void add(int r, int c, const Rat& v);
    const Rat* get(int r, int c) const;
    std::size_t nnz() const { return entries.size(); }

    // Debug dump: one "row col p/q" line per entry, 1-indexed, row-major.
    std::string dump() const;
};

// Process-wide elimination size cap (rows and cols each); eliminate throws
// cap_exceeded beyond it.  Overridable from the CLI via --cap-linalg.
int elimination_dimension_cap();
void set_elimination_dimension_cap(int cap);

// Exact rank over the rationals.
int rank(const SparseRationalMatrix& m);

// Exact basis of {v : M v = 0}; size cols - rank.  Each vector is dense of
// length cols with a positive leading entry in its free coordinate.
std::vector<std::vector<Rat>> kernel_basis(const SparseRationalMatrix& m);

// Rank and kernel from one elimination (the two ops above share this).
struct EliminationResult {
    int rank = 0;
    std::vector<std::vector<Rat>> kernel;
};
EliminationResult eliminate(const SparseRationalMatrix& m, bool want_kernel);

}  // namespace chordlie
