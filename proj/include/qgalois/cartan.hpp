#pragma once

#include <string>
#include <vector>

namespace qgalois {

/// Symmetrizable Cartan datum: integer matrix a (t x t) together with
/// symmetrizers d so that d_i a_ij = d_j a_ji.
struct CartanDatum {
    std::vector<std::vector<int>> a;
    std::vector<int> d;

    int rank() const { return static_cast<int>(d.size()); }
};

enum class CartanFamily { A, B, C, D, G2 };

CartanFamily cartan_family_from_string(const std::string& name);
std::string to_string(CartanFamily f);

/// Standard datum for the family at the given rank.
/// Supported ranks: A >= 1, B >= 2, C >= 2, D >= 3, G2 == 2; rank <= 8 throughout.
/// Throws UnsupportedRankError otherwise.
CartanDatum cartan_preset(CartanFamily family, int rank);

struct ValidationReport {
    bool ok = true;
    std::string message;  // first violation, with the offending indices
};

/// Checks a_ii = 2, a_ij <= 0 off the diagonal, d_i in {1,2,3},
/// and the symmetrizability identity d_i a_ij = d_j a_ji.
ValidationReport validate(const CartanDatum& datum);

}  // namespace qgalois
