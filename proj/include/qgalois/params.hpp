#pragma once

#include <tuple>
#include <vector>

#include "qgalois/cartan.hpp"
#include "qgalois/scalar.hpp"

namespace qgalois {

/// Specialized parameters: the quantum parameter q and the full twisting table
/// lambda_ij, bound to one Cartan datum.
/// Invariants: q != 0 and q^(2 d_i) != 1 for all i; every lambda_ij != 0;
/// lambda_ii = 1 and lambda_ij lambda_ji = 1.
class ParamSet {
public:
    ParamSet(Scalar q, std::vector<std::vector<Scalar>> lambda, CartanDatum datum);

    int rank() const { return datum_.rank(); }
    const Scalar& q() const { return q_; }
    const CartanDatum& cartan() const { return datum_; }

    /// lambda_ij, 1-based indices.
    const Scalar& lam(int i, int j) const;
    /// q^(d_i), 1-based index.
    Scalar q_d(int i) const;
    int a(int i, int j) const;  // Cartan entry, 1-based
    int d(int i) const;         // symmetrizer, 1-based

private:
    Scalar q_;
    std::vector<std::vector<Scalar>> lambda_;
    CartanDatum datum_;
};

/// Entries of the upper lambda triangle: (i, j, value) with 1 <= i < j <= rank.
using LambdaEntries = std::vector<std::tuple<int, int, Scalar>>;

/// Builds a ParamSet, completing the lambda table by lambda_ii = 1 and
/// lambda_ji = lambda_ij^-1. Unlisted pairs default to 1.
/// Throws: Error (invalid datum, duplicate entry), IndexError (bad pair),
/// ZeroParameterError (q = 0 or lambda = 0), RootOfUnityError (q^(2 d_i) = 1).
ParamSet make_params(const Scalar& q, const LambdaEntries& lambda_upper, const CartanDatum& datum);

}  // namespace qgalois
