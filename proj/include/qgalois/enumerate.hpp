#pragma once

#include <vector>

#include "qgalois/word.hpp"

namespace qgalois {

// All exponent tuples in [-cap, cap]^rank, lexicographically ascending.
// Empty when cap < 0.
std::vector<std::vector<int>> exponent_box(int rank, int cap);

// All index words over {1, ..., rank} of length at most len_cap, shortest
// first, lexicographic within a length.
std::vector<std::vector<int>> index_words(int rank, int len_cap);

// All normal words with |lower| + |upper| <= len_cap and every torus
// exponent in [-torus_cap, torus_cap], in a fixed deterministic order.
std::vector<NormalWord> words_up_to(int rank, int len_cap, int torus_cap);

// The one-letter words F_i, E_i, K_i, K_i^-1 for every index.
std::vector<NormalWord> single_letter_words(int rank);

}  // namespace qgalois
