#include <random>
#include <vector>

#include "doctest.h"
#include "qgalois/errors.hpp"
#include "qgalois/params.hpp"
#include "qgalois/qint.hpp"
#include "qgalois/scalar.hpp"

using qgalois::Scalar;

namespace {

// Independent oracle: the balanced Pascal recursion
//   [n; r]_v = v^r [n-1; r]_v + v^-(n-r) [n-1; r-1]_v
// evaluated without any factorial; the library route must agree with it.
Scalar pascal_binomial(int n, int r, const Scalar& v) {
    if (r < 0 || r > n) return 0;
    if (r == 0 || r == n) return 1;
    return v.pow(r) * pascal_binomial(n - 1, r, v) + v.pow(-(n - r)) * pascal_binomial(n - 1, r - 1, v);
}

Scalar random_nondegenerate(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    while (true) {
        const Scalar v(num(rng), den(rng));
        if (!v.is_zero() && !(v * v).is_one()) return v;
    }
}

}  // namespace

TEST_CASE("scalar arithmetic stays reduced with positive denominator") {
    CHECK(Scalar(2, 4).str() == "1/2");
    CHECK(Scalar(1, -2).str() == "-1/2");
    CHECK(Scalar(-4, -6).str() == "2/3");
    CHECK((Scalar(1, 3) + Scalar(1, 6)).str() == "1/2");
    CHECK((Scalar(3, 7) * Scalar(7, 3)).is_one());
    CHECK(Scalar(5, 8).inverse() == Scalar(8, 5));
    CHECK(Scalar(-2, 3).pow(3) == Scalar(-8, 27));
    CHECK(Scalar(2, 3).pow(-2) == Scalar(9, 4));
    CHECK(Scalar::from_string("-21/14") == Scalar(-3, 2));
    CHECK(Scalar::from_string(Scalar(22, 7).str()) == Scalar(22, 7));
}

TEST_CASE("scalar division by zero and zero denominators are rejected") {
    CHECK_THROWS_AS(Scalar(1, 0), qgalois::Error);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), qgalois::Error);
    CHECK_THROWS_AS(Scalar(0).inverse(), qgalois::Error);
    CHECK_THROWS_AS(Scalar(0).pow(-1), qgalois::Error);
    CHECK_THROWS_AS(Scalar::from_string("3/0"), qgalois::Error);
}

TEST_CASE("balanced q-integers at sample points") {
    const Scalar two(2);
    CHECK(qgalois::q_int(1, two).is_one());
    CHECK(qgalois::q_int(2, two) == Scalar(5, 2));           // v + 1/v
    CHECK(qgalois::q_int(3, two) == Scalar(21, 4));          // v^2 + 1 + v^-2
    CHECK(qgalois::q_int(-3, two) == -qgalois::q_int(3, two));
    CHECK(qgalois::q_int(0, two).is_zero());
    CHECK(qgalois::q_factorial(0, two).is_one());
    CHECK(qgalois::q_factorial(4, two) == Scalar(1) * Scalar(5, 2) * Scalar(21, 4) * Scalar(85, 8));
}

TEST_CASE("q-binomial frozen values") {
    CHECK(qgalois::q_binomial(2, 1, Scalar(2)) == Scalar(5, 2));      // [2]_2
    CHECK(qgalois::q_binomial(4, 2, Scalar(2)) == Scalar(357, 16));   // [3][4]/[1][2] at v = 2
    CHECK(qgalois::q_binomial(3, 1, Scalar(3, 2)) == qgalois::q_int(3, Scalar(3, 2)));
    CHECK(qgalois::q_binomial(5, 0, Scalar(7)).is_one());
    CHECK(qgalois::q_binomial(5, 5, Scalar(7)).is_one());
}

TEST_CASE("q-binomial agrees with the balanced Pascal recursion oracle") {
    std::mt19937_64 rng(20240601);
    std::vector<Scalar> points = {Scalar(2), Scalar(-2), Scalar(3, 2), Scalar(-5, 7), Scalar(7), Scalar(1, 3)};
    for (int k = 0; k < 20; ++k) points.push_back(random_nondegenerate(rng));
    for (const Scalar& v : points) {
        for (int n = 0; n <= 6; ++n) {
            for (int r = 0; r <= n; ++r) {
                CAPTURE(n);
                CAPTURE(r);
                CAPTURE(v.str());
                CHECK(qgalois::q_binomial(n, r, v) == pascal_binomial(n, r, v));
            }
        }
    }
}

TEST_CASE("q-binomial symmetry and inversion invariance") {
    std::mt19937_64 rng(77001);
    for (int k = 0; k < 12; ++k) {
        const Scalar v = random_nondegenerate(rng);
        for (int n = 0; n <= 6; ++n) {
            for (int r = 0; r <= n; ++r) {
                CHECK(qgalois::q_binomial(n, r, v) == qgalois::q_binomial(n, n - r, v));
                CHECK(qgalois::q_binomial(n, r, v) == qgalois::q_binomial(n, r, v.inverse()));
            }
        }
    }
}

TEST_CASE("q-arithmetic rejects degenerate specializations") {
    CHECK_THROWS_AS(qgalois::q_int(3, Scalar(1)), qgalois::DegenerateParameterError);
    CHECK_THROWS_AS(qgalois::q_int(3, Scalar(-1)), qgalois::DegenerateParameterError);
    CHECK_THROWS_AS(qgalois::q_int(2, Scalar(0)), qgalois::DegenerateParameterError);
    CHECK_THROWS_AS(qgalois::q_binomial(2, 1, Scalar(-1)), qgalois::DegenerateParameterError);
    CHECK_THROWS_AS(qgalois::q_factorial(3, Scalar(1)), qgalois::DegenerateParameterError);
    CHECK_THROWS_AS(qgalois::q_binomial(3, 4, Scalar(2)), qgalois::IndexError);
}

TEST_CASE("make_params accepts valid data and completes the lambda table") {
    const auto g2 = qgalois::cartan_preset(qgalois::CartanFamily::G2, 2);
    const auto params = qgalois::make_params(Scalar(3, 2), {{1, 2, Scalar(1)}}, g2);
    CHECK(params.rank() == 2);
    CHECK(params.q() == Scalar(3, 2));
    CHECK(params.lam(1, 2).is_one());
    CHECK(params.lam(2, 1).is_one());
    CHECK(params.q_d(1) == Scalar(3, 2).pow(3));
    CHECK(params.q_d(2) == Scalar(3, 2));

    const auto a2 = qgalois::cartan_preset(qgalois::CartanFamily::A, 2);
    const auto p2 = qgalois::make_params(Scalar(2), {{1, 2, Scalar(3)}}, a2);
    CHECK(p2.lam(2, 1) == Scalar(1, 3));
    CHECK(p2.lam(1, 1).is_one());
    CHECK((p2.lam(1, 2) * p2.lam(2, 1)).is_one());
}

TEST_CASE("make_params rejects degenerate parameters") {
    const auto a2 = qgalois::cartan_preset(qgalois::CartanFamily::A, 2);
    CHECK_THROWS_AS(qgalois::make_params(Scalar(0), {}, a2), qgalois::ZeroParameterError);
    CHECK_THROWS_AS(qgalois::make_params(Scalar(1), {}, a2), qgalois::RootOfUnityError);
    CHECK_THROWS_AS(qgalois::make_params(Scalar(-1), {}, a2), qgalois::RootOfUnityError);
    CHECK_THROWS_AS(qgalois::make_params(Scalar(2), {{1, 2, Scalar(0)}}, a2), qgalois::ZeroParameterError);
    CHECK_THROWS_AS(qgalois::make_params(Scalar(2), {{2, 1, Scalar(3)}}, a2), qgalois::IndexError);
    CHECK_THROWS_AS(qgalois::make_params(Scalar(2), {{1, 1, Scalar(3)}}, a2), qgalois::IndexError);
    CHECK_THROWS_AS(
        qgalois::make_params(Scalar(2), {{1, 2, Scalar(3)}, {1, 2, Scalar(4)}}, a2), qgalois::Error);

    qgalois::CartanDatum bad = a2;
    bad.d = {1, 2};  // breaks d_i a_ij = d_j a_ji
    CHECK_THROWS_AS(qgalois::make_params(Scalar(2), {}, bad), qgalois::Error);
}
