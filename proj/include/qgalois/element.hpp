#pragma once

#include <map>
#include <utility>

#include "qgalois/scalar.hpp"
#include "qgalois/word.hpp"

namespace qgalois {

/// Finite formal sum of normal words with exact rational coefficients.
/// Invariants: at most one entry per word, never a zero coefficient.
/// Terms iterate in canonical order (the NormalWord ordering).
class Element {
public:
    Element() = default;

    static Element unit(int rank) { return term(NormalWord::unit(rank), 1); }
    static Element term(NormalWord w, Scalar c) {
        Element e;
        e.add_term(std::move(w), std::move(c));
        return e;
    }
    /// Single-letter element.
    static Element generator(Block block, int index, int exponent, int rank) {
        NormalWord w = NormalWord::unit(rank);
        switch (block) {
            case Block::Lower: w.lower.push_back(index); break;
            case Block::Upper: w.upper.push_back(index); break;
            case Block::Torus: w.torus[index - 1] = exponent; break;
        }
        return term(std::move(w), 1);
    }

    void add_term(NormalWord w, Scalar c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<NormalWord, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a word (zero if absent).
    Scalar coeff(const NormalWord& w) const {
        const auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    Element& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element e) { return e *= s; }
    Element operator-() const {
        Element e = *this;
        for (auto& [w, c] : e.terms_) c = -c;
        return e;
    }

    bool operator==(const Element&) const = default;

private:
    std::map<NormalWord, Scalar> terms_;
};

}  // namespace qgalois
