#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "qgalois/algebra.hpp"
#include "qgalois/scalar.hpp"
#include "qgalois/word.hpp"

namespace qgalois {

// Restriction of the twisted algebra to its torus subalgebra: keeps the
// parameter set and produces the torus-only presentation. Rejects any other
// input kind.
AlgebraSpec restrict_i_star(const AlgebraSpec& alambda);

// Truncated cotensor computation. The source span is Z^gamma (x) K^delta
// with every exponent in [-cap, cap]; each basis vector is mapped by
// (coaction (x) id) - (id (x) coaction) and the exact kernel of that map is
// returned as sparse combinations over `source`. Throws CapTooSmallError
// when the capped span is empty (cap < 0).
struct CotensorTruncation {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> source;
    std::vector<std::map<int, Scalar>> kernel;
};
CotensorTruncation cotensor_truncated(const AlgebraSpec& alambda,
                                      const AlgebraSpec& carrier,
                                      const AlgebraSpec& torus,
                                      int cap);

// Checks multiplicativity of the grouplike embedding mu(K^gamma) =
// K^gamma (x) K^gamma, where the left leg multiplies through the left
// sigma_rho-twisted product and the group algebra side through its
// sigma_lambda-twisted product. Compares the closed-form route against the
// peeled twisted-product route.
bool mu_check(const std::vector<int>& g, const std::vector<int>& h, const ParamSet& params);

// Commutator table of the invertible torus generators together with the
// declared parameter family. The coarse layer u_ij is the scalar of the
// normal form of Z_i Z_j Z_i^-1 Z_j^-1; two constructions in the same
// commutator class may still carry distinct declared families (sign choices
// of the parameters are invisible to u).
class HomotopyInvariant {
  public:
    HomotopyInvariant(int rank, std::vector<Scalar> u, std::vector<Scalar> declared);

    int rank() const { return rank_; }
    const Scalar& u(int i, int j) const;
    const Scalar& declared_lambda(int i, int j) const;

  private:
    int rank_;
    std::vector<Scalar> u_;
    std::vector<Scalar> declared_;
};

HomotopyInvariant homotopy_invariant(const AlgebraSpec& alambda);
bool same_commutator_class(const HomotopyInvariant& a, const HomotopyInvariant& b);
bool same_declared_family(const HomotopyInvariant& a, const HomotopyInvariant& b);

// Exact kernel of a |-> coaction(a) - a (x) 1 on the span of normal words
// with at most `len_cap` letters outside the torus block and torus exponents
// in [-torus_cap, torus_cap]. Fills `basis_out` (when non-null) with the
// enumerated words in column order.
std::vector<std::map<int, Scalar>> coinvariant_kernel(const AlgebraSpec& alambda,
                                                      const AlgebraSpec& carrier,
                                                      int len_cap,
                                                      int torus_cap,
                                                      std::vector<NormalWord>* basis_out = nullptr);

}  // namespace qgalois
