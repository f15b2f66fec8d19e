#pragma once

#include "qgalois/algebra.hpp"
#include "qgalois/element.hpp"
#include "qgalois/functional.hpp"
#include "qgalois/word.hpp"

namespace qgalois {

// Which side of the product the functional deforms:
//   Left      x . y = sum f(x1, y1) x2 y2
//   Right     x . y = sum x1 y1 f(x2, y2)
//   TwoSided  x . y = sum f(x1, y1) x2 y2 finv(x3, y3), finv solved on the fly
enum class TwistSide { Left, Right, TwoSided };

// Twisted product computed from first principles: comultiply, evaluate the
// functional on the outer legs, multiply the inner legs in the carrier. Used
// as an independent oracle against structurally presented products. The
// carrier must be of kind U or grU; out-of-domain evaluations propagate.
Element twisted_product_oracle(const Element& x, const Element& y, const Functional& f,
                               TwistSide side, const AlgebraSpec& carrier);

// Exact check of f(x1,y1) f(x2 y2, z) = f(y1,z1) f(x, y2 z2) together with
// nothing else; throws OutsideDomainError if any required value is not
// evaluable.
bool cocycle_condition_check(const Functional& f, const NormalWord& x, const NormalWord& y,
                             const NormalWord& z, const AlgebraSpec& carrier);

}  // namespace qgalois
