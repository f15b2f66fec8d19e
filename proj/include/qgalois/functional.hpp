#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgalois/algebra.hpp"
#include "qgalois/element.hpp"
#include "qgalois/params.hpp"
#include "qgalois/word.hpp"

namespace qgalois {

// The bilinear functionals the twisting machinery is built from:
//   SigmaLambda     bicharacter on the torus exponents, lambda_ij on (K_i, K_j)
//   SigmaTilde      its pullback along the projection that kills E and F letters
//   Rho             the dual-pairing cocycle: 1 on grouplikes, -delta_ij/(q^di - q^-di) on (E_i, F_j)
//   RhoInverse      convolution inverse of Rho, generator table solved at construction
//   SigmaRho        the composite SigmaTilde * RhoInverse, given by its own table
//   ConvolutionUnit counit (x) counit, the unit of convolution
enum class FunctionalKind { SigmaLambda, SigmaTilde, Rho, RhoInverse, SigmaRho, ConvolutionUnit };

std::string to_string(FunctionalKind kind);

// Which argument patterns a functional can evaluate. Pure torus words are
// welcome everywhere they appear below.
//   TorusPairs  both arguments must be pure torus words
//   Standard    both-upper, both-lower, or lower-left/upper-right words;
//               upper-left/lower-right only as a single-letter pair
//   Total       any pair of words
enum class FunctionalDomain { TorusPairs, Standard, Total };

class Functional {
public:
    FunctionalKind kind() const { return kind_; }
    FunctionalDomain domain() const { return domain_; }
    const ParamSet& params() const { return params_; }

    // Value on the grouplike pair (K_i, K_j); (K_i^s, K_j^s') scales as base^(s s').
    Scalar pair_base(int i, int j) const;

    // Value on a pair of single letters (torus letters carry their exponent).
    Scalar letter_value(const Letter& x, const Letter& y) const;

private:
    friend Functional make_functional(FunctionalKind, const ParamSet&);
    friend Functional convolution_inverse(const Functional&);

    Functional(FunctionalKind kind, FunctionalDomain domain, ParamSet params);

    std::size_t idx(int i, int j) const;

    FunctionalKind kind_;
    FunctionalDomain domain_;
    ParamSet params_;
    std::vector<Scalar> pair_base_;
    std::map<std::pair<Letter, Letter>, Scalar> table_;
};

Functional make_functional(FunctionalKind kind, const ParamSet& params);

// Bicharacter on torus exponent tuples: prod_{i,j} lambda_ij^(g_i h_j).
Scalar sigma_lambda_eval(const std::vector<int>& g, const std::vector<int>& h, const ParamSet& params);

// Evaluate f on a pair of normalized words (resp. elements, extended
// bilinearly). Closed-form kinds evaluate directly; table-backed kinds peel
// letters recursively through the carrier's comultiplication. Throws
// OutsideDomainError when the argument pattern is not covered.
Scalar evaluate(const Functional& f, const NormalWord& x, const NormalWord& y, const AlgebraSpec& carrier);
Scalar evaluate(const Functional& f, const Element& x, const Element& y, const AlgebraSpec& carrier);

// Convolution inverse. Closed-form kinds invert their parameter table; the
// table-backed kinds are inverted by solving the convolution equations on
// generator pairs (grouplike pairs first, then letter-against-grouplike, then
// letter-letter classes, each reducing to previously solved values).
Functional convolution_inverse(const Functional& f);

// Evaluator view of the convolution product (f * g)(x, y) = sum over the
// coproduct legs of f(x1, y1) g(x2, y2). Holds references only.
class Convolution {
public:
    Convolution(const Functional& f, const Functional& g) : f_(&f), g_(&g) {}
    Scalar operator()(const NormalWord& x, const NormalWord& y, const AlgebraSpec& carrier) const;

private:
    const Functional* f_;
    const Functional* g_;
};

inline Convolution convolve(const Functional& f, const Functional& g) { return Convolution(f, g); }

}  // namespace qgalois
