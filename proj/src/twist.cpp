#include "qgalois/twist.hpp"

#include "qgalois/hopf.hpp"
#include "qgalois/tensor.hpp"

namespace qgalois {

namespace {

Element two_leg_twist(const NormalWord& x, const NormalWord& y, const Functional& f, TwistSide side,
                      const AlgebraSpec& carrier) {
    const TensorElement legs_x = coproduct(Element::term(x, Scalar(1)), carrier);
    const TensorElement legs_y = coproduct(Element::term(y, Scalar(1)), carrier);
    Element out;
    for (const auto& [kx, cx] : legs_x.terms()) {
        for (const auto& [ky, cy] : legs_y.terms()) {
            const Scalar v = side == TwistSide::Left ? evaluate(f, kx.first, ky.first, carrier)
                                                     : evaluate(f, kx.second, ky.second, carrier);
            if (v.is_zero()) continue;
            const Element prod = side == TwistSide::Left
                                     ? multiply(Element::term(kx.second, Scalar(1)),
                                                Element::term(ky.second, Scalar(1)), carrier)
                                     : multiply(Element::term(kx.first, Scalar(1)),
                                                Element::term(ky.first, Scalar(1)), carrier);
            out += (cx * cy * v) * prod;
        }
    }
    return out;
}

Element three_leg_twist(const NormalWord& x, const NormalWord& y, const Functional& f,
                        const Functional& finv, const AlgebraSpec& carrier) {
    const LegTable legs_x = sweedler_legs(Element::term(x, Scalar(1)), 3, carrier);
    const LegTable legs_y = sweedler_legs(Element::term(y, Scalar(1)), 3, carrier);
    Element out;
    for (const auto& [lx, cx] : legs_x) {
        for (const auto& [ly, cy] : legs_y) {
            const Scalar head = evaluate(f, lx[0], ly[0], carrier);
            if (head.is_zero()) continue;
            const Scalar tail = evaluate(finv, lx[2], ly[2], carrier);
            if (tail.is_zero()) continue;
            const Element prod = multiply(Element::term(lx[1], Scalar(1)),
                                          Element::term(ly[1], Scalar(1)), carrier);
            out += (cx * cy * head * tail) * prod;
        }
    }
    return out;
}

}  // namespace

Element twisted_product_oracle(const Element& x, const Element& y, const Functional& f,
                               TwistSide side, const AlgebraSpec& carrier) {
    Element out;
    if (side == TwistSide::TwoSided) {
        const Functional finv = convolution_inverse(f);
        for (const auto& [wx, cx] : x.terms()) {
            for (const auto& [wy, cy] : y.terms()) {
                out += (cx * cy) * three_leg_twist(wx, wy, f, finv, carrier);
            }
        }
        return out;
    }
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            out += (cx * cy) * two_leg_twist(wx, wy, f, side, carrier);
        }
    }
    return out;
}

bool cocycle_condition_check(const Functional& f, const NormalWord& x, const NormalWord& y,
                             const NormalWord& z, const AlgebraSpec& carrier) {
    const TensorElement legs_x = coproduct(Element::term(x, Scalar(1)), carrier);
    const TensorElement legs_y = coproduct(Element::term(y, Scalar(1)), carrier);
    const TensorElement legs_z = coproduct(Element::term(z, Scalar(1)), carrier);
    const Element ze = Element::term(z, Scalar(1));
    const Element xe = Element::term(x, Scalar(1));

    Scalar lhs(0);
    for (const auto& [kx, cx] : legs_x.terms()) {
        for (const auto& [ky, cy] : legs_y.terms()) {
            const Scalar head = evaluate(f, kx.first, ky.first, carrier);
            if (head.is_zero()) continue;
            const Element prod = multiply(Element::term(kx.second, Scalar(1)),
                                          Element::term(ky.second, Scalar(1)), carrier);
            lhs += cx * cy * head * evaluate(f, prod, ze, carrier);
        }
    }

    Scalar rhs(0);
    for (const auto& [ky, cy] : legs_y.terms()) {
        for (const auto& [kz, cz] : legs_z.terms()) {
            const Scalar head = evaluate(f, ky.first, kz.first, carrier);
            if (head.is_zero()) continue;
            const Element prod = multiply(Element::term(ky.second, Scalar(1)),
                                          Element::term(kz.second, Scalar(1)), carrier);
            rhs += cy * cz * head * evaluate(f, xe, prod, carrier);
        }
    }
    return lhs == rhs;
}

}  // namespace qgalois
