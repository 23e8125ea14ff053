#pragma once

// Text literals and JSON emission.
//
// Diagram literal:   lin: 1>2 3>5 4>6      (ordered chords, i>j points i to j)
// Cyclic rendering:  cyc[index=2]: 1>2 3>4
// Vector literal:    3/2 * lin: 1>2 3>4 + -1 * lin: 1>3 2>4
//   Cyclic-algebra terms: omega(m), d(a,b), or cyc: <chords> (canonicalized);
//   the rendered form cyc[index=k]: <chords> parses back, with k checked.
//   Linear-algebra extra: the reserved literal E0 = -1/2 * lin: 1>2.
// Tensor literal:    g=2: 1 * A1 B1 + -1 * B1 A1
// Parse errors carry a 0-based position.

#include <string>

#include "json.hpp"

#include "chordlie/chord_lie.hpp"
#include "chordlie/sp_tensor.hpp"

namespace chordlie {

std::string format_chords(const std::vector<Chord>& chords);
std::string format_linear(const StandardDiagram& d);   // with "lin: " prefix
std::string format_cyclic(const CyclicClass& c);       // with "cyc[index=k]: " prefix
std::string format_lc_vector(const LCVector& v);       // "0" when empty
std::string format_c_vector(const CVector& v);
std::string format_tensor(const Tensor& t);
std::string format_pvf(const PolyVectorField& v);      // e.g. "-2 * x^3 d/dx"

LinearDiagram parse_linear_literal(const std::string& s);  // accepts "lin:" prefix
LCVector parse_lc_vector(const std::string& s);
CVector parse_c_vector(const std::string& s);
Tensor parse_tensor(const std::string& s);

nlohmann::json vector_json(const LCVector& v);  // {"algebra":"LC","terms":[...]}
nlohmann::json vector_json(const CVector& v);   // {"algebra":"C","terms":[...]}

}  // namespace chordlie
