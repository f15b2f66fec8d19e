#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

namespace qgalois {

/// The three letter blocks of the normal form: lower-triangular generators
/// (F or Y), upper-triangular generators (E or X), and torus generators
/// (K or Z, invertible).
enum class Block { Lower, Upper, Torus };

/// One generator letter. exponent is +1 or -1 for torus letters and +1 otherwise.
struct Letter {
    Block block;
    int index;     // 1-based
    int exponent;  // torus: +1 or -1; lower/upper: +1

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

/// Basis word of the block normal form: a free word in lower indices, then a
/// free word in upper indices, then an ordered torus Laurent monomial.
/// No relations are imposed inside the lower and upper blocks.
/// Ordering is lexicographic on (lower, upper, torus); it is the canonical
/// print order of elements.
struct NormalWord {
    std::vector<int> lower;
    std::vector<int> upper;
    std::vector<int> torus;  // Laurent exponents, size = rank

    static NormalWord unit(int rank) {
        NormalWord w;
        w.torus.assign(static_cast<std::size_t>(rank), 0);
        return w;
    }

    int rank() const { return static_cast<int>(torus.size()); }
    bool torus_only() const { return lower.empty() && upper.empty(); }
    bool is_unit() const {
        return torus_only() && std::all_of(torus.begin(), torus.end(), [](int e) { return e == 0; });
    }
    /// Number of lower and upper letters (torus letters excluded).
    int length() const { return static_cast<int>(lower.size() + upper.size()); }
    /// Total letter count, torus letters counted with multiplicity.
    int letter_count() const {
        return length() + std::accumulate(torus.begin(), torus.end(), 0,
                                          [](int acc, int e) { return acc + (e < 0 ? -e : e); });
    }

    /// The word as the ordered product of its letters.
    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        for (int i : lower) out.push_back({Block::Lower, i, 1});
        for (int i : upper) out.push_back({Block::Upper, i, 1});
        for (int i = 0; i < rank(); ++i) {
            const int sign = torus[i] < 0 ? -1 : 1;
            for (int k = 0; k < (torus[i] < 0 ? -torus[i] : torus[i]); ++k) {
                out.push_back({Block::Torus, i + 1, sign});
            }
        }
        return out;
    }

    bool operator==(const NormalWord&) const = default;
    auto operator<=>(const NormalWord&) const = default;
};

/// Which subalgebra a basis word belongs to. Torus-only words belong to both
/// the upper and the lower subalgebra; words mixing the two blocks to neither.
enum class WordSide { TorusOnly, Upper, Lower, Mixed };

inline WordSide word_side(const NormalWord& w) {
    if (w.lower.empty() && w.upper.empty()) return WordSide::TorusOnly;
    if (w.lower.empty()) return WordSide::Upper;
    if (w.upper.empty()) return WordSide::Lower;
    return WordSide::Mixed;
}

}  // namespace qgalois
