#pragma once

// Chord-diagram value types and canonical forms.
//
// A linear chord diagram is a perfect matching of {1,...,2m} whose chords are
// ordered pairs (i,j).  The standard label flips every chord to i<j, at the
// cost of a sign -1 per flip.  Rotation acts on vertices by v -> v+1 (mod 2m,
// representatives 1..2m); one rotation step of a standard diagram reverses
// exactly one chord, so each step carries sign -1.  A cyclic class is the
// lexicographically least standard diagram over the rotation orbit; classes
// whose orbit has odd size (odd index) are zero and never materialized.

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chordlie/rational.hpp"

namespace chordlie {

using Chord = std::pair<int, int>;        // ordered endpoints, vertices 1-based
using LinearDiagram = std::vector<Chord>; // m ordered chords, any orientation

// A diagram with every chord oriented i<j and chords sorted by first endpoint.
struct StandardDiagram {
    std::vector<Chord> chords;

    int m() const { return static_cast<int>(chords.size()); }
    friend bool operator==(const StandardDiagram&, const StandardDiagram&) = default;
    friend auto operator<=>(const StandardDiagram&, const StandardDiagram&) = default;
};

struct SignedStandard {
    int sign = 1;  // +1 or -1
    StandardDiagram diagram;
};

// Canonical representative of a rotation orbit of even size.
struct CyclicClass {
    StandardDiagram rep;  // lex-least standard diagram in the orbit
    int index = 0;        // number of distinct underlying diagrams; even

    int m() const { return rep.m(); }
    friend bool operator==(const CyclicClass& a, const CyclicClass& b) {
        return a.rep == b.rep;
    }
    friend auto operator<=>(const CyclicClass& a, const CyclicClass& b) {
        return a.rep <=> b.rep;
    }
};

struct SignedClass {
    int sign = 1;
    CyclicClass cls;
};

// Throws std::invalid_argument unless d is a perfect matching of {1..2m}
// with no degenerate chord.
void validate(const LinearDiagram& d);

// Flips chords to i<j (sign -1 each) and sorts by first endpoint.
SignedStandard standardize(const LinearDiagram& d);

// Vertex map v -> v+1 (mod 2m) applied to every endpoint; no re-labeling.
LinearDiagram rotate_raw(const LinearDiagram& d);

// One rotation step of a standard diagram, re-standardized; sign is always -1
// because exactly one chord wraps past 2m.
SignedStandard rotate(const StandardDiagram& d);

// The 2m standardized rotations of d with the accumulated sign at each step.
std::vector<SignedStandard> rotation_orbit(const StandardDiagram& d);

// Number of distinct underlying diagrams among all rotations; divides 2m.
int index_of(const StandardDiagram& d);

// nullopt when the index is odd (the class is zero); otherwise the canonical
// class with sign = standardization sign times (-1)^(steps to the minimum).
std::optional<SignedClass> canonical_cyclic(const LinearDiagram& d);

// The m consecutive isolated chords {(1,2),(3,4),...,(2m-1,2m)}.
LinearDiagram isolated_chords(int m);

// Canonical class of the closing of isolated_chords(m); throws for m <= 1
// (the m=1 class has odd index and vanishes).
CyclicClass omega_diagram(int m);

// The one-crossing family: a isolated chords, one long chord crossing b
// shifted isolated chords.  Yields the raw diagram before canonicalization.
LinearDiagram d_ab_linear(int a, int b);

// Canonical class of d_ab_linear; nullopt when a == b (odd index, zero).
// Satisfies d_ab(b,a) = -d_ab(a,b).
std::optional<SignedClass> d_ab(int a, int b);

// All standard perfect matchings of {1..2m}, smallest-free-vertex-first
// order; length (2m-1)!!.  Throws cap_exceeded beyond the cap.
std::vector<StandardDiagram> enumerate_linear(int m, int cap = kEnumCap);

// One canonical class per even-index orbit, sorted by representative.
// Accepts m = 1 and returns {} (that space is zero).
std::vector<CyclicClass> enumerate_cyclic_basis(int m, int cap = kEnumCap);

// index -> number of rotation orbits of enumerate_linear(m) with that index.
std::map<int, int> index_histogram(int m, int cap = kEnumCap);

}  // namespace chordlie
