#include "qgalois/params.hpp"

#include <string>
#include <utility>

#include "qgalois/errors.hpp"

namespace qgalois {

ParamSet::ParamSet(Scalar q, std::vector<std::vector<Scalar>> lambda, CartanDatum datum)
    : q_(std::move(q)), lambda_(std::move(lambda)), datum_(std::move(datum)) {}

const Scalar& ParamSet::lam(int i, int j) const {
    if (i < 1 || j < 1 || i > rank() || j > rank()) throw IndexError("lambda index out of rank");
    return lambda_[i - 1][j - 1];
}

Scalar ParamSet::q_d(int i) const {
    if (i < 1 || i > rank()) throw IndexError("symmetrizer index out of rank");
    return q_.pow(datum_.d[i - 1]);
}

int ParamSet::a(int i, int j) const {
    if (i < 1 || j < 1 || i > rank() || j > rank()) throw IndexError("Cartan index out of rank");
    return datum_.a[i - 1][j - 1];
}

int ParamSet::d(int i) const {
    if (i < 1 || i > rank()) throw IndexError("symmetrizer index out of rank");
    return datum_.d[i - 1];
}

ParamSet make_params(const Scalar& q, const LambdaEntries& lambda_upper, const CartanDatum& datum) {
    const ValidationReport report = validate(datum);
    if (!report.ok) throw Error("invalid Cartan datum: " + report.message);
    if (q.is_zero()) throw ZeroParameterError("q = 0");
    const int t = datum.rank();
    for (int i = 0; i < t; ++i) {
        if (q.pow(2L * datum.d[i]).is_one()) {
            throw RootOfUnityError("q^(2 d_" + std::to_string(i + 1) + ") = 1");
        }
    }

    std::vector<std::vector<Scalar>> lambda(t, std::vector<Scalar>(t, Scalar(1)));
    std::vector<std::vector<bool>> seen(t, std::vector<bool>(t, false));
    for (const auto& [i, j, value] : lambda_upper) {
        if (i < 1 || j < 1 || i > t || j > t || i >= j) {
            throw IndexError("lambda entry needs 1 <= i < j <= rank, got (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
        }
        if (seen[i - 1][j - 1]) {
            throw Error("duplicate lambda entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (value.is_zero()) {
            throw ZeroParameterError("lambda_" + std::to_string(i) + std::to_string(j) + " = 0");
        }
        seen[i - 1][j - 1] = true;
        lambda[i - 1][j - 1] = value;
        lambda[j - 1][i - 1] = value.inverse();
    }
    return ParamSet(q, std::move(lambda), datum);
}

}  // namespace qgalois
