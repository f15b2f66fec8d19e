#include "qgalois/enumerate.hpp"

#include <cstddef>

namespace qgalois {

std::vector<std::vector<int>> exponent_box(int rank, int cap) {
    std::vector<std::vector<int>> out;
    if (cap < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(rank), -cap);
    while (true) {
        out.push_back(cur);
        int pos = rank - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == cap) {
            cur[static_cast<std::size_t>(pos)] = -cap;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<std::vector<int>> index_words(int rank, int len_cap) {
    std::vector<std::vector<int>> out{{}};
    std::size_t layer_begin = 0;
    for (int len = 1; len <= len_cap; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t k = layer_begin; k < layer_end; ++k) {
            for (int i = 1; i <= rank; ++i) {
                std::vector<int> w = out[k];
                w.push_back(i);
                out.push_back(std::move(w));
            }
        }
        layer_begin = layer_end;
    }
    return out;
}

std::vector<NormalWord> words_up_to(int rank, int len_cap, int torus_cap) {
    const std::vector<std::vector<int>> blocks = index_words(rank, len_cap);
    const std::vector<std::vector<int>> box = exponent_box(rank, torus_cap);
    std::vector<NormalWord> out;
    for (const auto& lo : blocks) {
        for (const auto& up : blocks) {
            if (static_cast<int>(lo.size() + up.size()) > len_cap) continue;
            for (const auto& gamma : box) {
                NormalWord w;
                w.lower = lo;
                w.upper = up;
                w.torus = gamma;
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

std::vector<NormalWord> single_letter_words(int rank) {
    std::vector<NormalWord> out;
    for (int i = 1; i <= rank; ++i) {
        NormalWord f = NormalWord::unit(rank);
        f.lower.push_back(i);
        out.push_back(std::move(f));
        NormalWord e = NormalWord::unit(rank);
        e.upper.push_back(i);
        out.push_back(std::move(e));
        for (int s : {1, -1}) {
            NormalWord k = NormalWord::unit(rank);
            k.torus[static_cast<std::size_t>(i - 1)] = s;
            out.push_back(std::move(k));
        }
    }
    return out;
}

}  // namespace qgalois
