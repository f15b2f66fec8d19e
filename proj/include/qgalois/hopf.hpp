#pragma once

#include <map>
#include <vector>

#include "qgalois/algebra.hpp"
#include "qgalois/element.hpp"
#include "qgalois/tensor.hpp"

namespace qgalois {

// Comultiplication on the letter generators, extended multiplicatively:
//   E_i |-> E_i (x) 1 + K_i (x) E_i
//   F_i |-> F_i (x) K_i^-1 + 1 (x) F_i
//   K^g |-> K^g (x) K^g
// The carrier must be of kind U or grU.
TensorElement coproduct(const Element& e, const AlgebraSpec& carrier);

// Counit: 1 on every pure torus word, 0 on every word containing an upper or
// lower letter. Works for any element regardless of the algebra it came from.
Scalar counit(const Element& e);

// Antipode, the anti-multiplicative extension of
//   S(E_i) = -K_i^-1 E_i,  S(F_i) = -F_i K_i,  S(K^g) = K^-g.
// The carrier must be of kind U or grU.
Element antipode(const Element& e, const AlgebraSpec& carrier);

// Right coaction of the symmetry algebra on the twisted family:
//   X_i |-> X_i (x) 1 + Z_i (x) E_i
//   Y_i |-> Y_i (x) K_i^-1 + 1 (x) F_i
//   Z^g |-> Z^g (x) K^g
// `comodule` must be of kind Alambda or torus; `carrier` of kind U or grU.
TensorElement coaction(const Element& e, const AlgebraSpec& comodule, const AlgebraSpec& carrier);

// Iterated comultiplication flattened into n-tuples of words: n_legs = 1
// returns the element itself, n_legs = 2 matches coproduct, and higher counts
// expand the rightmost leg repeatedly (any other association order agrees by
// coassociativity).
using Legs = std::vector<NormalWord>;
using LegTable = std::map<Legs, Scalar>;
LegTable sweedler_legs(const Element& e, int n_legs, const AlgebraSpec& carrier);

}  // namespace qgalois
