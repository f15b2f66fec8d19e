#include <map>
#include <vector>

#include "doctest.h"
#include "qgalois/algebra.hpp"
#include "qgalois/cartan.hpp"
#include "qgalois/errors.hpp"
#include "qgalois/hopf.hpp"
#include "qgalois/params.hpp"
#include "qgalois/tensor.hpp"

using namespace qgalois;

namespace {

ParamSet params_a1() { return make_params(Scalar(2), {}, cartan_preset(CartanFamily::A, 1)); }

ParamSet params_a2() {
    return make_params(Scalar(2), {{1, 2, Scalar(3)}}, cartan_preset(CartanFamily::A, 2));
}

Letter up(int i) { return Letter{Block::Upper, i, 1}; }
Letter low(int i) { return Letter{Block::Lower, i, 1}; }
Letter tor(int i, int e) { return Letter{Block::Torus, i, e}; }

RawElement raw(std::vector<Letter> letters) { return {RawTerm{Scalar(1), std::move(letters)}}; }

NormalWord word(int rank, std::vector<int> lower, std::vector<int> upper, std::vector<int> torus) {
    NormalWord w = NormalWord::unit(rank);
    w.lower = std::move(lower);
    w.upper = std::move(upper);
    w.torus = std::move(torus);
    return w;
}

// Collapse one tensor leg through the counit; the other leg survives.
Element eps_on_left(const TensorElement& t) {
    Element out;
    for (const auto& [k, c] : t.terms()) {
        if (k.first.torus_only()) out.add_term(k.second, c);
    }
    return out;
}

Element eps_on_right(const TensorElement& t) {
    Element out;
    for (const auto& [k, c] : t.terms()) {
        if (k.second.torus_only()) out.add_term(k.first, c);
    }
    return out;
}

using Triple = std::map<std::vector<NormalWord>, Scalar>;

void triple_insert(Triple& t, std::vector<NormalWord> key, const Scalar& c) {
    auto [it, inserted] = t.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

// (coproduct (x) id) after a two-leg expansion whose left legs live in `left`.
Triple expand_left_leg(const TensorElement& two, const AlgebraSpec& left) {
    Triple out;
    for (const auto& [k, c] : two.terms()) {
        const TensorElement inner = coproduct(Element::term(k.first, Scalar(1)), left);
        for (const auto& [k2, c2] : inner.terms()) {
            triple_insert(out, {k2.first, k2.second, k.second}, c * c2);
        }
    }
    return out;
}

// (id (x) coproduct) after a two-leg expansion whose right legs live in `right`.
Triple expand_right_leg(const TensorElement& two, const AlgebraSpec& right) {
    Triple out;
    for (const auto& [k, c] : two.terms()) {
        const TensorElement inner = coproduct(Element::term(k.second, Scalar(1)), right);
        for (const auto& [k2, c2] : inner.terms()) {
            triple_insert(out, {k.first, k2.first, k2.second}, c * c2);
        }
    }
    return out;
}

// Multiply the antipode of one leg against the other leg, in coproduct order.
Element antipode_convolution(const Element& e, const AlgebraSpec& carrier, bool antipode_on_left) {
    Element out;
    const TensorElement two = coproduct(e, carrier);
    for (const auto& [k, c] : two.terms()) {
        const Element l = Element::term(k.first, Scalar(1));
        const Element r = Element::term(k.second, Scalar(1));
        const Element prod = antipode_on_left ? multiply(antipode(l, carrier), r, carrier)
                                              : multiply(l, antipode(r, carrier), carrier);
        out += c * prod;
    }
    return out;
}

}  // namespace

TEST_CASE("coproduct of the letter generators") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a1());
    const Element e1 = normal_form(raw({up(1)}), u);
    const TensorElement de = coproduct(e1, u);
    CHECK(de.size() == 2);
    CHECK(de.coeff(word(1, {}, {1}, {0}), NormalWord::unit(1)) == Scalar(1));
    CHECK(de.coeff(word(1, {}, {}, {1}), word(1, {}, {1}, {0})) == Scalar(1));

    const Element f1 = normal_form(raw({low(1)}), u);
    const TensorElement df = coproduct(f1, u);
    CHECK(df.size() == 2);
    CHECK(df.coeff(word(1, {1}, {}, {0}), word(1, {}, {}, {-1})) == Scalar(1));
    CHECK(df.coeff(NormalWord::unit(1), word(1, {1}, {}, {0})) == Scalar(1));

    const Element k_sq = Element::term(word(1, {}, {}, {2}), Scalar(1));
    const TensorElement dk = coproduct(k_sq, u);
    CHECK(dk.size() == 1);
    CHECK(dk.coeff(word(1, {}, {}, {2}), word(1, {}, {}, {2})) == Scalar(1));
}

TEST_CASE("coproduct of a mixed word, frozen table") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a1());
    const TensorElement d = coproduct(normal_form(raw({up(1), low(1)}), u), u);
    CHECK(d.size() == 6);
    CHECK(d.coeff(word(1, {1}, {1}, {0}), word(1, {}, {}, {-1})) == Scalar(1));
    CHECK(d.coeff(word(1, {}, {}, {-1}), word(1, {}, {}, {-1})) == Scalar(-2, 3));
    CHECK(d.coeff(word(1, {}, {1}, {0}), word(1, {1}, {}, {0})) == Scalar(1));
    CHECK(d.coeff(word(1, {1}, {}, {1}), word(1, {}, {1}, {-1})) == Scalar(1, 4));
    CHECK(d.coeff(word(1, {}, {}, {1}), word(1, {1}, {1}, {0})) == Scalar(1));
    CHECK(d.coeff(word(1, {}, {}, {1}), word(1, {}, {}, {1})) == Scalar(2, 3));
}

TEST_CASE("coproduct is an algebra map") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());
    const Element a = normal_form(raw({up(1), tor(2, -1)}), u);
    const Element b = normal_form(raw({low(1), up(2)}), u);
    CHECK(coproduct(multiply(a, b, u), u) == tensor_multiply(coproduct(a, u), coproduct(b, u), u, u));
}

TEST_CASE("coproduct is coassociative on sample words") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a1());
    for (const Element& e : {normal_form(raw({up(1), low(1)}), u),
                             normal_form(raw({up(1), up(1), low(1)}), u),
                             normal_form(raw({low(1), tor(1, -1), up(1)}), u)}) {
        const TensorElement two = coproduct(e, u);
        CHECK(expand_left_leg(two, u) == expand_right_leg(two, u));

        // The flattened expansion agrees with the rightmost association.
        Triple flat;
        for (const auto& [legs, c] : sweedler_legs(e, 3, u)) triple_insert(flat, legs, c);
        CHECK(flat == expand_right_leg(two, u));
    }
}

TEST_CASE("three flattened legs of a single upper letter") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a1());
    const LegTable legs = sweedler_legs(normal_form(raw({up(1)}), u), 3, u);
    CHECK(legs.size() == 3);
    const NormalWord e = word(1, {}, {1}, {0});
    const NormalWord k = word(1, {}, {}, {1});
    const NormalWord one = NormalWord::unit(1);
    CHECK(legs.at({e, one, one}) == Scalar(1));
    CHECK(legs.at({k, e, one}) == Scalar(1));
    CHECK(legs.at({k, k, e}) == Scalar(1));
}

TEST_CASE("counit values and counit laws") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());
    CHECK(counit(normal_form(raw({up(1)}), u)) == Scalar(0));
    CHECK(counit(Element::term(word(2, {}, {}, {2, -1}), Scalar(5, 7))) == Scalar(5, 7));
    CHECK(counit(normal_form(raw({up(1), low(1)}), u)) == Scalar(0));

    for (const Element& e : {normal_form(raw({up(1), up(1), low(1)}), u),
                             normal_form(raw({up(2), low(2), tor(1, 1)}), u)}) {
        const TensorElement two = coproduct(e, u);
        CHECK(eps_on_left(two) == e);
        CHECK(eps_on_right(two) == e);
    }
}

TEST_CASE("antipode on letters and a frozen word") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a1());
    const Element se = antipode(normal_form(raw({up(1)}), u), u);
    CHECK(se.size() == 1);
    CHECK(se.coeff(word(1, {}, {1}, {-1})) == Scalar(-1, 4));

    const Element sf = antipode(normal_form(raw({low(1)}), u), u);
    CHECK(sf.size() == 1);
    CHECK(sf.coeff(word(1, {1}, {}, {1})) == Scalar(-1));

    const Element sk = antipode(Element::term(word(1, {}, {}, {-1}), Scalar(1)), u);
    CHECK(sk.size() == 1);
    CHECK(sk.coeff(word(1, {}, {}, {1})) == Scalar(1));

    // S(E F) = S(F) S(E) = F E exactly.
    const Element sef = antipode(normal_form(raw({up(1), low(1)}), u), u);
    CHECK(sef.size() == 1);
    CHECK(sef.coeff(word(1, {1}, {1}, {0})) == Scalar(1));
}

TEST_CASE("antipode axiom and anti-multiplicativity") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());
    for (const Element& e : {normal_form(raw({up(1)}), u), normal_form(raw({low(2)}), u),
                             normal_form(raw({up(1), low(1)}), u),
                             normal_form(raw({up(1), up(2), low(1), tor(2, -1)}), u)}) {
        const Element expect = counit(e) * Element::unit(2);
        CHECK(antipode_convolution(e, u, true) == expect);
        CHECK(antipode_convolution(e, u, false) == expect);
    }

    const Element a = normal_form(raw({up(1), tor(2, 1)}), u);
    const Element b = normal_form(raw({low(1), up(2)}), u);
    CHECK(antipode(multiply(a, b, u), u) == multiply(antipode(b, u), antipode(a, u), u));
}

TEST_CASE("graded carrier gives the same coproduct tables on shared words") {
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());
    const AlgebraSpec gr = make_algebra(AlgebraKind::GrU, params_a2());
    const Element w = Element::term(word(2, {1, 2}, {1}, {-1, 1}), Scalar(1));
    CHECK(coproduct(w, u) == coproduct(w, gr));
    CHECK(antipode(normal_form(raw({up(1), low(1)}), gr), gr) ==
          normal_form(raw({low(1), up(1)}), gr));
}

TEST_CASE("coproduct and antipode reject non-bialgebra carriers") {
    const AlgebraSpec a = make_algebra(AlgebraKind::ALambda, params_a2());
    const Element x = normal_form(raw({up(1)}), a);
    CHECK_THROWS_AS(coproduct(x, a), Error);
    CHECK_THROWS_AS(antipode(x, a), Error);
    CHECK_THROWS_AS(sweedler_legs(x, 2, a), Error);
}

TEST_CASE("coaction on the twisted generators") {
    const AlgebraSpec a = make_algebra(AlgebraKind::ALambda, params_a2());
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());

    const TensorElement dx = coaction(normal_form(raw({up(1)}), a), a, u);
    CHECK(dx.size() == 2);
    CHECK(dx.coeff(word(2, {}, {1}, {0, 0}), NormalWord::unit(2)) == Scalar(1));
    CHECK(dx.coeff(word(2, {}, {}, {1, 0}), word(2, {}, {1}, {0, 0})) == Scalar(1));

    const TensorElement dy = coaction(normal_form(raw({low(1)}), a), a, u);
    CHECK(dy.size() == 2);
    CHECK(dy.coeff(word(2, {1}, {}, {0, 0}), word(2, {}, {}, {-1, 0})) == Scalar(1));
    CHECK(dy.coeff(NormalWord::unit(2), word(2, {1}, {}, {0, 0})) == Scalar(1));

    const TensorElement dz = coaction(Element::term(word(2, {}, {}, {0, -1}), Scalar(1)), a, u);
    CHECK(dz.size() == 1);
    CHECK(dz.coeff(word(2, {}, {}, {0, -1}), word(2, {}, {}, {0, -1})) == Scalar(1));
}

TEST_CASE("coaction of a mixed twisted word, frozen table") {
    const AlgebraSpec a = make_algebra(AlgebraKind::ALambda, params_a2());
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());
    const TensorElement d = coaction(normal_form(raw({up(1), low(1)}), a), a, u);
    CHECK(d.size() == 5);
    CHECK(d.coeff(word(2, {1}, {1}, {0, 0}), word(2, {}, {}, {-1, 0})) == Scalar(1));
    CHECK(d.coeff(word(2, {}, {1}, {0, 0}), word(2, {1}, {}, {0, 0})) == Scalar(1));
    CHECK(d.coeff(word(2, {1}, {}, {1, 0}), word(2, {}, {1}, {-1, 0})) == Scalar(1, 4));
    CHECK(d.coeff(word(2, {}, {}, {1, 0}), word(2, {1}, {1}, {0, 0})) == Scalar(1));
    CHECK(d.coeff(word(2, {}, {}, {1, 0}), word(2, {}, {}, {1, 0})) == Scalar(2, 3));
}

TEST_CASE("coaction is an algebra map and a comodule structure") {
    const AlgebraSpec a = make_algebra(AlgebraKind::ALambda, params_a2());
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());

    const Element z1 = normal_form(raw({tor(1, 1)}), a);
    const Element x2 = normal_form(raw({up(2)}), a);
    CHECK(coaction(multiply(z1, x2, a), a, u) ==
          tensor_multiply(coaction(z1, a, u), coaction(x2, a, u), a, u));

    for (const Element& e : {normal_form(raw({up(1), low(1)}), a),
                             normal_form(raw({low(2), up(1), tor(1, -1)}), a)}) {
        const TensorElement two = coaction(e, a, u);

        // (coaction (x) id) and (id (x) coproduct) agree.
        Triple via_coaction;
        for (const auto& [k, c] : two.terms()) {
            const TensorElement inner = coaction(Element::term(k.first, Scalar(1)), a, u);
            for (const auto& [k2, c2] : inner.terms()) {
                triple_insert(via_coaction, {k2.first, k2.second, k.second}, c * c2);
            }
        }
        CHECK(via_coaction == expand_right_leg(two, u));

        // Counit law on the symmetry leg.
        CHECK(eps_on_right(two) == e);
    }
}

TEST_CASE("coaction on the pure torus part") {
    const AlgebraSpec t = make_algebra(AlgebraKind::Torus, params_a2());
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());
    const TensorElement d = coaction(Element::term(word(2, {}, {}, {1, -1}), Scalar(1)), t, u);
    CHECK(d.size() == 1);
    CHECK(d.coeff(word(2, {}, {}, {1, -1}), word(2, {}, {}, {1, -1})) == Scalar(1));
}

TEST_CASE("coaction rejects carriers and comodules of the wrong kind") {
    const AlgebraSpec a = make_algebra(AlgebraKind::ALambda, params_a2());
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params_a2());
    const Element x = normal_form(raw({up(1)}), a);
    CHECK_THROWS_AS(coaction(x, u, u), Error);
    CHECK_THROWS_AS(coaction(x, a, a), Error);
}
