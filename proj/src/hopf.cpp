#include "qgalois/hopf.hpp"

#include <utility>

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

void require_bialgebra_carrier(const AlgebraSpec& carrier) {
    if (carrier.kind() != AlgebraKind::U && carrier.kind() != AlgebraKind::GrU) {
        throw Error("carrier of kind " + to_string(carrier.kind()) +
                    " has no coproduct here; use U or grU");
    }
}

NormalWord torus_word(int rank, int index, int exponent) {
    NormalWord w = NormalWord::unit(rank);
    w.torus[index - 1] = exponent;
    return w;
}

NormalWord upper_word(int rank, int index) {
    NormalWord w = NormalWord::unit(rank);
    w.upper = {index};
    return w;
}

NormalWord lower_word(int rank, int index) {
    NormalWord w = NormalWord::unit(rank);
    w.lower = {index};
    return w;
}

// Coproduct and coaction share the same letter images up to renaming; the
// left legs are words of the respective algebra, the right legs live in the
// symmetry algebra.
TensorElement letter_legs(const Letter& g, int rank) {
    TensorElement out;
    switch (g.block) {
        case Block::Upper:
            out.add_term(upper_word(rank, g.index), NormalWord::unit(rank), Scalar(1));
            out.add_term(torus_word(rank, g.index, 1), upper_word(rank, g.index), Scalar(1));
            break;
        case Block::Lower:
            out.add_term(lower_word(rank, g.index), torus_word(rank, g.index, -1), Scalar(1));
            out.add_term(NormalWord::unit(rank), lower_word(rank, g.index), Scalar(1));
            break;
        case Block::Torus:
            out.add_term(torus_word(rank, g.index, g.exponent), torus_word(rank, g.index, g.exponent),
                         Scalar(1));
            break;
    }
    return out;
}

TensorElement comultiply(const Element& e, const AlgebraSpec& left, const AlgebraSpec& right) {
    const int rank = left.rank();
    TensorElement out;
    for (const auto& [w, c] : e.terms()) {
        TensorElement acc = TensorElement::unit(rank, rank);
        for (const Letter& g : w.letters()) {
            acc = tensor_multiply(acc, letter_legs(g, rank), left, right);
        }
        out += c * acc;
    }
    return out;
}

}  // namespace

TensorElement coproduct(const Element& e, const AlgebraSpec& carrier) {
    require_bialgebra_carrier(carrier);
    return comultiply(e, carrier, carrier);
}

Scalar counit(const Element& e) {
    Scalar out(0);
    for (const auto& [w, c] : e.terms()) {
        if (w.torus_only()) out += c;
    }
    return out;
}

Element antipode(const Element& e, const AlgebraSpec& carrier) {
    require_bialgebra_carrier(carrier);
    const int rank = carrier.rank();
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element acc = Element::unit(rank);
        const std::vector<Letter> letters = w.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            RawElement image;
            switch (it->block) {
                case Block::Upper:
                    image = {RawTerm{Scalar(-1),
                                     {Letter{Block::Torus, it->index, -1}, Letter{Block::Upper, it->index, 1}}}};
                    break;
                case Block::Lower:
                    image = {RawTerm{Scalar(-1),
                                     {Letter{Block::Lower, it->index, 1}, Letter{Block::Torus, it->index, 1}}}};
                    break;
                case Block::Torus:
                    image = {RawTerm{Scalar(1), {Letter{Block::Torus, it->index, -it->exponent}}}};
                    break;
            }
            acc = multiply(acc, normal_form(image, carrier), carrier);
        }
        out += c * acc;
    }
    return out;
}

TensorElement coaction(const Element& e, const AlgebraSpec& comodule, const AlgebraSpec& carrier) {
    if (comodule.kind() != AlgebraKind::ALambda && comodule.kind() != AlgebraKind::Torus) {
        throw Error("coaction is defined on the twisted family and its torus part, not on " +
                    to_string(comodule.kind()));
    }
    require_bialgebra_carrier(carrier);
    if (comodule.rank() != carrier.rank()) throw IndexError("comodule and carrier rank differ");
    return comultiply(e, comodule, carrier);
}

LegTable sweedler_legs(const Element& e, int n_legs, const AlgebraSpec& carrier) {
    if (n_legs < 1) throw IndexError("leg count must be positive");
    LegTable out;
    if (n_legs == 1) {
        for (const auto& [w, c] : e.terms()) out.emplace(Legs{w}, c);
        return out;
    }
    const TensorElement two = coproduct(e, carrier);
    for (const auto& [pair, c] : two.terms()) {
        const LegTable rest = sweedler_legs(Element::term(pair.second, Scalar(1)), n_legs - 1, carrier);
        for (const auto& [legs, c2] : rest) {
            Legs key;
            key.reserve(legs.size() + 1);
            key.push_back(pair.first);
            key.insert(key.end(), legs.begin(), legs.end());
            auto [it, inserted] = out.try_emplace(std::move(key), c * c2);
            if (!inserted) {
                it->second += c * c2;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace qgalois
