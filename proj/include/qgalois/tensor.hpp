#pragma once

#include <map>
#include <utility>

#include "qgalois/algebra.hpp"
#include "qgalois/element.hpp"
#include "qgalois/word.hpp"

namespace qgalois {

// Element of a two-fold tensor product, stored as an exact linear combination
// of pairs of normalized words. The two factors may live in different
// algebras (for instance a comodule on the left and its symmetry algebra on
// the right); the pair of specs only matters when multiplying.
class TensorElement {
public:
    using Key = std::pair<NormalWord, NormalWord>;

    TensorElement() = default;

    static TensorElement unit(int rank_left, int rank_right) {
        TensorElement t;
        t.add_term(NormalWord::unit(rank_left), NormalWord::unit(rank_right), Scalar(1));
        return t;
    }

    void add_term(NormalWord left, NormalWord right, Scalar c) {
        if (c.is_zero()) return;
        Key k{std::move(left), std::move(right)};
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(const NormalWord& left, const NormalWord& right) const {
        const auto it = terms_.find(Key{left, right});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    TensorElement& operator+=(const TensorElement& other) {
        for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
        return *this;
    }

    friend TensorElement operator*(const Scalar& c, const TensorElement& t) {
        TensorElement out;
        if (c.is_zero()) return out;
        for (const auto& [k, v] : t.terms_) out.terms_.emplace(k, c * v);
        return out;
    }

    bool operator==(const TensorElement&) const = default;

private:
    std::map<Key, Scalar> terms_;
};

// a (x) b with no multiplication involved.
inline TensorElement tensor_of(const Element& a, const Element& b) {
    TensorElement out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, ca * cb);
    }
    return out;
}

// Componentwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2, the left
// factors multiplied in `left` and the right factors in `right`.
inline TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                                     const AlgebraSpec& left, const AlgebraSpec& right) {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const Element l = append_word(Element::term(ka.first, Scalar(1)), kb.first, left);
            const Element r = append_word(Element::term(ka.second, Scalar(1)), kb.second, right);
            const Scalar c = ca * cb;
            for (const auto& [wl, cl] : l.terms()) {
                for (const auto& [wr, cr] : r.terms()) out.add_term(wl, wr, c * cl * cr);
            }
        }
    }
    return out;
}

}  // namespace qgalois
