#pragma once

// Genus-g symplectic vector space, degree-truncated tensor algebra,
// derivations, and the invariant-tensor map that grounds the combinatorial
// brackets: a diagram maps to a permuted power of the symplectic form, and a
// derivation is encoded as an element of H (x) T acting on generators by
// X (x) u : Y -> (Y . X) u.

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chordlie/chord_lie.hpp"
#include "chordlie/diagram.hpp"
#include "chordlie/rational.hpp"

namespace chordlie {

// Basis symbols are encoded 0..2g-1: A_i = 2(i-1), B_i = 2(i-1)+1.
struct SymplecticSpace {
    int g;
    explicit SymplecticSpace(int genus);
    int symbols() const { return 2 * g; }
};

// A_i . B_i = +1, B_i . A_i = -1, all other basis pairs 0.  The sign is
// pinned by the contraction identity b_prime(omega, omega) = -omega.
int pairing(int x, int y);

std::string symbol_name(int s);  // "A1", "B1", ...

// Words over the symbol alphabet; a char per symbol, degree = length.
using Word = std::string;

struct Tensor {
    int g = 1;
    std::unordered_map<Word, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.g == b.g && a.terms == b.terms;
    }
};

// A derivation stored as its H (x) T tensor; every word nonempty.
using Derivation = Tensor;

void add_term(Tensor& t, const Word& w, const Rat& c);
Tensor tensor_add(const Tensor& a, const Tensor& b);
Tensor tensor_sub(const Tensor& a, const Tensor& b);
Tensor tensor_scale(const Tensor& a, const Rat& c);
// -1 if zero or inhomogeneous, else the common word length.
int homogeneous_degree(const Tensor& t);

// The symplectic form: sum_i A_i B_i - B_i A_i.
Tensor omega_tensor(const SymplecticSpace& s);

// One rotation step on words, X_1...X_n -> X_n X_1...X_{n-1}; this is the
// direction matching the diagram vertex map v -> v+1.
Tensor tensor_rotate(const Tensor& t);

// Cyclic symmetrizer per homogeneous degree; kills degree 0.
Tensor n_tensor(const Tensor& t);

// Diagram to tensor: chord (i,j) contributes sum_k (A_k at i)(B_k at j) -
// (B_k at i)(A_k at j); a product over chords, (2g)^m words of degree 2m.
Tensor a_linear(const LinearDiagram& c, const SymplecticSpace& s);
Tensor a_lc(const LCVector& x, const SymplecticSpace& s);

// Class to tensor: n_tensor(a_linear(rep)), linear extension.
Tensor a_cyclic(const CVector& x, const SymplecticSpace& s);

// Action of a derivation on one generator: sum over words X u of (y . X) u.
Tensor derivation_on_generator(const Derivation& d, int symbol);

// Leibniz extension to tensors; throws cap_exceeded when an output word
// would exceed degree_cap.
Tensor derivation_apply(const Derivation& d, const Tensor& t,
                        int degree_cap = kTensorDegreeCap);

// Packs per-generator actions back into H (x) T:
// D = sum_i B_i (x) D(A_i) - A_i (x) D(B_i).
Derivation derivation_reconstruct(const SymplecticSpace& s,
                                  const std::vector<Tensor>& action_on_symbol);

// D1 D2 - D2 D1 on every generator, repackaged via the reconstruction.
Derivation derivation_commutator(const Derivation& d1, const Derivation& d2,
                                 int degree_cap = kTensorDegreeCap);

// True when lhs acts on every generator exactly as [D1, D2] does; the
// per-generator comparison never materializes the repackaged commutator, so
// it scales to degrees where derivation_commutator would not.
bool commutator_acts_like(const Tensor& lhs, const Derivation& d1,
                          const Derivation& d2, int degree_cap = kTensorDegreeCap);

// Closed form for the bracket of the symmetrizations N(u), N(v) of
// homogeneous tensors: -sum_{s,t} (X_s . Y_t) N(cyclic tails); avoids
// composing derivations.  Requires degrees >= 2.
Tensor bracket_formula(const Tensor& u, const Tensor& v);

// Degree-2 contraction: b_prime(X1 X2, Y1 Y2) = -(X1 . Y1) X2 Y2, bilinear.
Tensor b_prime(const Tensor& u, const Tensor& v);

// Exact kernel basis of n_tensor on degree-n words; cap on n * (2g)^n.
std::vector<Tensor> kernel_of_n(int n, const SymplecticSpace& s,
                                long long cap_entries = 1000000);

// Deterministic word ordering helpers (lexicographic rank in base 2g).
std::vector<Word> all_words(int n, const SymplecticSpace& s);

}  // namespace chordlie
