#pragma once

// The two Lie algebra structures on chord diagrams:
//   - the cyclic (rotation-invariant) algebra spanned by canonical classes,
//     with the bracket built from the vertex-1 amalgamation summed over all
//     rotations of both factors;
//   - the linear algebra spanned by standard matchings, with the bracket
//     built from the t-th amalgamation;
// plus the symmetrizer n_map connecting them, the polynomial-vector-field
// homomorphism kappa, and the grading element e0.

#include <map>

#include "chordlie/diagram.hpp"
#include "chordlie/linalg.hpp"
#include "chordlie/rational.hpp"

namespace chordlie {

using CVector = std::map<CyclicClass, Rat>;         // cyclic classes -> coeff
using LCVector = std::map<StandardDiagram, Rat>;    // standard matchings -> coeff
using PolyVectorField = std::map<int, Rat>;         // degree m -> coeff of x^m d/dx

// Accumulate, dropping the entry when the sum vanishes.
void add_term(CVector& v, const CyclicClass& k, const Rat& c);
void add_term(LCVector& v, const StandardDiagram& k, const Rat& c);
void add_term(PolyVectorField& v, int degree, const Rat& c);

// Accumulate the canonical class of a linear diagram (no-op when zero).
void add_canonical(CVector& v, const LinearDiagram& d, const Rat& c);

// Single-term constructors.
CVector cvec(const CyclicClass& k, const Rat& c = 1);
CVector cvec(const std::optional<SignedClass>& s, const Rat& c = 1);
LCVector lcvec(const StandardDiagram& d, const Rat& c = 1);

// Joins two diagrams along their chords at vertex 1: the bridging chord (x,y)
// follows the four-case table on the endpoint positions, the remaining chords
// of c shift by -1 and those of c' by +2m-2.  Throws std::invalid_argument
// unless both diagrams have a chord touching vertex 1.
LinearDiagram linear_amalgamate(const LinearDiagram& c, const LinearDiagram& cp);

// The t-th amalgamation: delete vertex t from c', delete vertex 1 from c,
// splice the rest of c into the hole and bridge the two freed partners.
// Requires 2 <= t <= 2l; the result is a standard matching of m+l-1 chords.
StandardDiagram t_amalgamate(const StandardDiagram& c, int t, const StandardDiagram& cp);

// Bilinear bracket on canonical classes: for each pair of representatives,
// sum the canonicalized amalgamations of all rotation pairs.
CVector bracket_cyclic(const CVector& x, const CVector& y);

// Bilinear bracket on matchings: [c,c'] = -sum_t c *_t c' + sum_s c' *_s c.
LCVector bracket_linear(const LCVector& x, const LCVector& y);

// Cyclic symmetrizer: a matching of even index maps to (2m/index) times its
// canonical class; odd index maps to zero.  Linear extension.
CVector n_map(const LCVector& x);

// kappa sends every m-chord matching to -2 x^m d/dx; a Lie homomorphism onto
// polynomial vector fields with [x^a d/dx, x^b d/dx] = (b-a) x^{a+b-1} d/dx.
PolyVectorField kappa(const LCVector& x);
PolyVectorField pvf_bracket(const PolyVectorField& x, const PolyVectorField& y);

// The grading element -1/2 {(1,2)}: ad(e0) has eigenvalue m-1 on m-chord
// matchings.
LCVector e0();

// Matrix of ad(z) from the degree-(source_degree) basis into the span of the
// image classes; columns follow the enumeration order, rows the first-seen
// order of image keys.
struct CAdMatrix {
    SparseRationalMatrix mat;
    std::vector<CyclicClass> cols;   // source basis
    std::vector<CyclicClass> rows;   // image classes, first-seen order
};
CAdMatrix ad_matrix(const CVector& z, int source_degree, int cap = kEnumCap);

struct LCAdMatrix {
    SparseRationalMatrix mat;
    std::vector<StandardDiagram> cols;
    std::vector<StandardDiagram> rows;
};
LCAdMatrix ad_matrix(const LCVector& z, int source_degree, int cap = kEnumCap);

}  // namespace chordlie
