#pragma once

// Higher-level analyses: the center of the cyclic algebra via a single test
// element, the center probe of the linear algebra, Chevalley-Eilenberg
// homology at fixed weight, and the Euler-characteristic series.

#include <vector>

#include "chordlie/chord_lie.hpp"
#include "chordlie/linalg.hpp"

namespace chordlie {

// Basis of {X in degree m : [X, d_ab(m, 2m+1)] = 0}; computed, not assumed.
// The expected answer is the span of omega_diagram(m).
std::vector<CVector> center_of_C(int m, int cap = kCenterCap);

// Basis of {X in degrees <= max_degree : [X, b] = 0 for every basis b of
// degrees 1 and 2}; expected empty.  max_degree <= 4.
std::vector<LCVector> center_probe_LC(int max_degree);

enum class Algebra { C, LC, LC1 };  // LC1 = linear algebra without degree 1

// A graded basis element: an m-chord diagram (for Algebra::C the canonical
// class representative).  Weight = m - 1.
struct GradedDiagram {
    int m = 0;
    StandardDiagram d;
    friend bool operator==(const GradedDiagram&, const GradedDiagram&) = default;
    friend auto operator<=>(const GradedDiagram&, const GradedDiagram&) = default;
};

using Chain = std::vector<GradedDiagram>;  // strictly increasing exterior word

struct WeightedChainBasis {
    int k = 0;
    int w = 0;
    std::vector<Chain> basis;
};

// All degree-k exterior words of total weight w, deterministic order.
WeightedChainBasis weighted_chain_basis(Algebra a, int k, int w, int weight_cap = kWeightCap);

// Matrix of the boundary C_k(w) -> C_{k-1}(w):
// d(x_1 ^ ... ^ x_k) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ rest (0-based i, j),
// in the weighted_chain_basis bases.  Satisfies d_{k-1} d_k = 0.
SparseRationalMatrix ce_differential(Algebra a, int k, int w, int weight_cap = kWeightCap);

// Betti numbers (dim H_0, ..., dim H_k_max) at weight w.
std::vector<int> homology_dims(Algebra a, int w, int k_max, int weight_cap = kWeightCap);

// Chain dimensions of the degree->=2 complex at weight w from the closed-form
// partition count over double factorials; entry k-1 is dim C_k(w), k = 1..w.
std::vector<long long> chain_dims_closed_form(int w);

// Euler characteristic at weight w (degree->=2 complex), two routes:
// alternating sum of closed-form chain dimensions (w <= cap, default 6), and
// alternating sum of computed Betti numbers (w <= weight_cap).
long long euler_char_dims(int w, int cap = 6);
long long euler_char_ranks(int w, int weight_cap = kWeightCap);

}  // namespace chordlie
