#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "qgalois/algebra.hpp"
#include "qgalois/cartan.hpp"
#include "qgalois/errors.hpp"
#include "qgalois/galois.hpp"
#include "qgalois/linalg.hpp"
#include "qgalois/params.hpp"

namespace {

using namespace qgalois;

ParamSet params_a1() { return make_params(Scalar(2), {}, cartan_preset(CartanFamily::A, 1)); }

ParamSet params_a2(const Scalar& lam12) {
    return make_params(Scalar(2), {{1, 2, lam12}}, cartan_preset(CartanFamily::A, 2));
}

// Deterministic pseudo-random exponents in [-3, 3].
struct MixRng {
    unsigned long long state = 88172645463325252ull;
    int next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<int>(state % 7ull) - 3;
    }
};

}  // namespace

TEST_CASE("exact kernel of hand-sized sparse matrices") {
    SUBCASE("single dependency among three columns") {
        std::vector<std::map<int, Scalar>> cols(3);
        cols[0] = {{0, Scalar(1)}, {1, Scalar(1)}};
        cols[1] = {{0, Scalar(2)}, {1, Scalar(2)}};
        cols[2] = {{0, Scalar(1)}};
        const auto kernel = exact_kernel(cols);
        REQUIRE(kernel.size() == 1);
        const std::map<int, Scalar> expected{{0, Scalar(-2)}, {1, Scalar(1)}};
        CHECK(kernel[0] == expected);
    }
    SUBCASE("independent columns have no kernel") {
        std::vector<std::map<int, Scalar>> cols(2);
        cols[0] = {{0, Scalar(1)}};
        cols[1] = {{1, Scalar(5)}};
        CHECK(exact_kernel(cols).empty());
    }
    SUBCASE("zero column is a kernel vector on its own") {
        std::vector<std::map<int, Scalar>> cols(2);
        cols[0] = {{0, Scalar(3)}};
        const auto kernel = exact_kernel(cols);
        REQUIRE(kernel.size() == 1);
        const std::map<int, Scalar> expected{{1, Scalar(1)}};
        CHECK(kernel[0] == expected);
    }
    SUBCASE("fractional combination is recovered exactly") {
        std::vector<std::map<int, Scalar>> cols(3);
        cols[0] = {{0, Scalar(1)}};
        cols[1] = {{1, Scalar(1)}};
        cols[2] = {{0, Scalar(1, 2)}, {1, Scalar(1, 3)}};
        const auto kernel = exact_kernel(cols);
        REQUIRE(kernel.size() == 1);
        const std::map<int, Scalar> expected{{0, Scalar(-1, 2)}, {1, Scalar(-1, 3)}, {2, Scalar(1)}};
        CHECK(kernel[0] == expected);
    }
    SUBCASE("string-keyed rows work the same") {
        std::vector<std::map<std::string, Scalar>> cols(2);
        cols[0] = {{"a", Scalar(1)}, {"b", Scalar(2)}};
        cols[1] = {{"a", Scalar(2)}, {"b", Scalar(4)}};
        const auto kernel = exact_kernel(cols);
        REQUIRE(kernel.size() == 1);
        const std::map<int, Scalar> expected{{0, Scalar(-2)}, {1, Scalar(1)}};
        CHECK(kernel[0] == expected);
    }
}

TEST_CASE("torus restriction matches the direct torus construction") {
    const ParamSet p = params_a2(Scalar(3));
    const AlgebraSpec alam = make_algebra(AlgebraKind::ALambda, p);
    const AlgebraSpec restricted = restrict_i_star(alam);
    const AlgebraSpec direct = make_algebra(AlgebraKind::Torus, p);
    CHECK(restricted.kind() == AlgebraKind::Torus);
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            CHECK(restricted.torus_swap(i, j) == direct.torus_swap(i, j));
        }
    }
    // Same rewriting outcome on a torus product.
    const RawElement raw{{Scalar(1), {Letter{Block::Torus, 2, 1}, Letter{Block::Torus, 1, 1}}}};
    CHECK(normal_form(raw, restricted) == normal_form(raw, direct));

    const AlgebraSpec u = make_algebra(AlgebraKind::U, p);
    CHECK_THROWS_AS(restrict_i_star(u), Error);
}

TEST_CASE("truncated cotensor kernel is spanned by the diagonal grouplikes") {
    const ParamSet p2 = params_a2(Scalar(3));
    const AlgebraSpec alam = make_algebra(AlgebraKind::ALambda, p2);
    const AlgebraSpec carrier = make_algebra(AlgebraKind::U, p2);
    const AlgebraSpec torus = make_algebra(AlgebraKind::Torus, p2);

    SUBCASE("rank two, cap one") {
        const CotensorTruncation ct = cotensor_truncated(alam, carrier, torus, 1);
        CHECK(ct.source.size() == 81);
        REQUIRE(ct.kernel.size() == 9);
        for (const auto& combo : ct.kernel) {
            REQUIRE(combo.size() == 1);
            const auto& [idx, coeff] = *combo.begin();
            CHECK(coeff == Scalar(1));
            const auto& [gamma, delta] = ct.source.at(static_cast<std::size_t>(idx));
            CHECK(gamma == delta);
        }
        // 1 (x) 1 is a kernel vector; Z_1 (x) K_2 is not.
        const std::vector<int> zero{0, 0}, e1{1, 0}, e2{0, 1};
        const auto find_src = [&](const std::vector<int>& g, const std::vector<int>& d) {
            const auto it = std::find(ct.source.begin(), ct.source.end(), std::make_pair(g, d));
            REQUIRE(it != ct.source.end());
            return static_cast<int>(it - ct.source.begin());
        };
        const int unit_idx = find_src(zero, zero);
        const int off_idx = find_src(e1, e2);
        bool unit_seen = false;
        for (const auto& combo : ct.kernel) {
            if (combo.count(unit_idx)) unit_seen = true;
            CHECK(combo.count(off_idx) == 0);
        }
        CHECK(unit_seen);
    }
    SUBCASE("rank one, caps one and two") {
        const ParamSet p1 = params_a1();
        const AlgebraSpec a1 = make_algebra(AlgebraKind::ALambda, p1);
        const AlgebraSpec c1 = make_algebra(AlgebraKind::U, p1);
        const AlgebraSpec t1 = make_algebra(AlgebraKind::Torus, p1);
        CHECK(cotensor_truncated(a1, c1, t1, 1).kernel.size() == 3);
        CHECK(cotensor_truncated(a1, c1, t1, 2).kernel.size() == 5);
        CHECK(cotensor_truncated(a1, c1, t1, 0).kernel.size() == 1);
    }
    SUBCASE("negative cap is rejected") {
        CHECK_THROWS_AS(cotensor_truncated(alam, carrier, torus, -1), CapTooSmallError);
    }
    SUBCASE("kind guards") {
        CHECK_THROWS_AS(cotensor_truncated(carrier, carrier, torus, 1), Error);
        CHECK_THROWS_AS(cotensor_truncated(alam, carrier, alam, 1), Error);
        CHECK_THROWS_AS(cotensor_truncated(alam, torus, torus, 1), Error);
    }
}

TEST_CASE("grouplike embedding is multiplicative for the twisted products") {
    const ParamSet p = params_a2(Scalar(3));
    CHECK(mu_check({1, 0}, {0, 1}, p));
    CHECK(mu_check({0, 1}, {1, 0}, p));
    CHECK(mu_check({0, 0}, {2, -1}, p));
    CHECK(mu_check({1, -2}, {-3, 1}, p));

    MixRng rng;
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<int> g{rng.next(), rng.next()};
        const std::vector<int> h{rng.next(), rng.next()};
        CAPTURE(trial);
        CHECK(mu_check(g, h, p));
    }

    // Also away from rank two and with several parameter families.
    const ParamSet p1 = params_a1();
    CHECK(mu_check({2}, {-1}, p1));
    const ParamSet p5 = params_a2(Scalar(5));
    CHECK(mu_check({1, 1}, {1, -1}, p5));

    CHECK_THROWS_AS(mu_check({1}, {0, 1}, p), IndexError);
}

TEST_CASE("commutator invariant separates parameter families by their squares") {
    const AlgebraSpec a3 = make_algebra(AlgebraKind::ALambda, params_a2(Scalar(3)));
    const HomotopyInvariant inv3 = homotopy_invariant(a3);
    CHECK(inv3.u(1, 2) == Scalar(9));
    CHECK(inv3.u(2, 1) == Scalar(1, 9));
    CHECK(inv3.u(1, 1) == Scalar(1));
    CHECK(inv3.u(2, 2) == Scalar(1));
    CHECK(inv3.declared_lambda(1, 2) == Scalar(3));
    CHECK(inv3.declared_lambda(2, 1) == Scalar(1, 3));
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            CHECK_FALSE(inv3.u(i, j).is_zero());
            CHECK(inv3.u(j, i) == inv3.u(i, j).inverse());
        }
    }

    const HomotopyInvariant inv5 = homotopy_invariant(make_algebra(AlgebraKind::ALambda, params_a2(Scalar(5))));
    CHECK_FALSE(same_commutator_class(inv3, inv5));

    // Opposite sign: indistinguishable at the commutator layer, distinguished
    // only by the declared family.
    const HomotopyInvariant invm3 = homotopy_invariant(make_algebra(AlgebraKind::ALambda, params_a2(Scalar(-3))));
    CHECK(same_commutator_class(inv3, invm3));
    CHECK_FALSE(same_declared_family(inv3, invm3));
    CHECK(same_declared_family(inv3, inv3));

    const HomotopyInvariant triv = homotopy_invariant(
        make_algebra(AlgebraKind::ALambda, make_params(Scalar(2), {}, cartan_preset(CartanFamily::A, 2))));
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) CHECK(triv.u(i, j) == Scalar(1));
    }
    CHECK_FALSE(same_commutator_class(inv3, triv));

    // The invariant agrees with the commutator computed in the restricted torus.
    const AlgebraSpec restricted = restrict_i_star(a3);
    const RawElement comm{{Scalar(1),
                           {Letter{Block::Torus, 1, 1}, Letter{Block::Torus, 2, 1},
                            Letter{Block::Torus, 1, -1}, Letter{Block::Torus, 2, -1}}}};
    const Element nf = normal_form(comm, restricted);
    REQUIRE(nf.size() == 1);
    CHECK(nf.terms().begin()->second == inv3.u(1, 2));

    CHECK_THROWS_AS(homotopy_invariant(make_algebra(AlgebraKind::U, params_a2(Scalar(3)))), Error);
    CHECK_THROWS_AS(inv3.u(0, 1), IndexError);
    CHECK_THROWS_AS(inv3.declared_lambda(1, 3), IndexError);
}

TEST_CASE("coinvariants of the truncated comodule algebra are the scalars") {
    const ParamSet p = params_a2(Scalar(3));
    const AlgebraSpec alam = make_algebra(AlgebraKind::ALambda, p);
    const AlgebraSpec carrier = make_algebra(AlgebraKind::U, p);

    std::vector<NormalWord> basis;
    const auto kernel = coinvariant_kernel(alam, carrier, 1, 1, &basis);
    CHECK(basis.size() == 45);  // 5 block shapes x 9 torus monomials
    REQUIRE(kernel.size() == 1);
    REQUIRE(kernel[0].size() == 1);
    const auto& [idx, coeff] = *kernel[0].begin();
    CHECK(coeff == Scalar(1));
    CHECK(basis.at(static_cast<std::size_t>(idx)).is_unit());

    SUBCASE("rank one comodule") {
        const ParamSet p1 = params_a1();
        std::vector<NormalWord> b1;
        const auto k1 = coinvariant_kernel(make_algebra(AlgebraKind::ALambda, p1),
                                           make_algebra(AlgebraKind::U, p1), 1, 1, &b1);
        CHECK(b1.size() == 9);
        REQUIRE(k1.size() == 1);
        CHECK(b1.at(static_cast<std::size_t>(k1[0].begin()->first)).is_unit());
    }
    SUBCASE("torus comodule") {
        const auto kt = coinvariant_kernel(make_algebra(AlgebraKind::Torus, p), carrier, 2, 1, nullptr);
        CHECK(kt.size() == 1);
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(coinvariant_kernel(alam, carrier, -1, 1, nullptr), CapTooSmallError);
        CHECK_THROWS_AS(coinvariant_kernel(alam, carrier, 1, -1, nullptr), CapTooSmallError);
        CHECK_THROWS_AS(coinvariant_kernel(carrier, carrier, 1, 1, nullptr), Error);
        CHECK_THROWS_AS(coinvariant_kernel(alam, alam, 1, 1, nullptr), Error);
    }
}
