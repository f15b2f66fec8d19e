#include "qgalois/qint.hpp"

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

void require_nondegenerate(const Scalar& v) {
    if (v.is_zero()) throw DegenerateParameterError("q-integer at v = 0");
    if ((v * v).is_one()) throw DegenerateParameterError("q-integer at v with v^2 = 1");
}

}  // namespace

Scalar q_int(long m, const Scalar& v) {
    require_nondegenerate(v);
    if (m == 0) return 0;
    return (v.pow(m) - v.pow(-m)) / (v - v.inverse());
}

Scalar q_factorial(long n, const Scalar& v) {
    if (n < 0) throw IndexError("q-factorial of negative index");
    require_nondegenerate(v);
    Scalar out = 1;
    for (long m = 2; m <= n; ++m) out *= q_int(m, v);
    return out;
}

Scalar q_binomial(long n, long r, const Scalar& v) {
    if (r < 0 || r > n) throw IndexError("q-binomial requires 0 <= r <= n");
    require_nondegenerate(v);
    return q_factorial(n, v) / (q_factorial(r, v) * q_factorial(n - r, v));
}

}  // namespace qgalois
