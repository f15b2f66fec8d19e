#pragma once

#include <map>
#include <vector>

#include "qgalois/scalar.hpp"

namespace qgalois {

// Exact kernel of a sparse linear map given by its columns over an ordered
// key type. Returns one combination per kernel dimension, each a sparse
// vector of column indices; Gaussian elimination by columns with the smallest
// key as pivot, so the result is deterministic.
template <class Key>
std::vector<std::map<int, Scalar>> exact_kernel(const std::vector<std::map<Key, Scalar>>& columns) {
    const auto subtract_scaled = [](auto& a, const auto& b, const Scalar& factor) {
        for (const auto& [k, v] : b) {
            auto it = a.find(k);
            if (it == a.end()) {
                Scalar nv = -(factor * v);
                if (!nv.is_zero()) a.emplace(k, std::move(nv));
            } else {
                it->second -= factor * v;
                if (it->second.is_zero()) a.erase(it);
            }
        }
    };

    std::map<Key, std::size_t> pivot_of_key;
    std::vector<std::map<Key, Scalar>> pivots;
    std::vector<std::map<int, Scalar>> pivot_combos;
    std::vector<std::map<int, Scalar>> kernel;

    for (std::size_t c = 0; c < columns.size(); ++c) {
        std::map<Key, Scalar> vec = columns[c];
        std::map<int, Scalar> combo{{static_cast<int>(c), Scalar(1)}};
        bool placed = false;
        while (!vec.empty()) {
            const Key& lead = vec.begin()->first;
            const auto it = pivot_of_key.find(lead);
            if (it == pivot_of_key.end()) {
                pivot_of_key.emplace(lead, pivots.size());
                pivots.push_back(std::move(vec));
                pivot_combos.push_back(std::move(combo));
                placed = true;
                break;
            }
            const Scalar factor = vec.begin()->second / pivots[it->second].begin()->second;
            subtract_scaled(vec, pivots[it->second], factor);
            subtract_scaled(combo, pivot_combos[it->second], factor);
        }
        if (!placed) kernel.push_back(std::move(combo));
    }
    return kernel;
}

}  // namespace qgalois
