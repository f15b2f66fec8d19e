#include "qgalois/galois.hpp"

#include <cstddef>
#include <tuple>
#include <utility>

#include "qgalois/enumerate.hpp"
#include "qgalois/errors.hpp"
#include "qgalois/functional.hpp"
#include "qgalois/hopf.hpp"
#include "qgalois/linalg.hpp"
#include "qgalois/tensor.hpp"
#include "qgalois/twist.hpp"

namespace qgalois {

namespace {

NormalWord torus_word(int rank, const std::vector<int>& exps) {
    NormalWord w = NormalWord::unit(rank);
    w.torus = exps;
    return w;
}

void require_carrier(const AlgebraSpec& carrier) {
    if (carrier.kind() != AlgebraKind::U && carrier.kind() != AlgebraKind::GrU) {
        throw Error("carrier must be of kind U or grU");
    }
}

template <class Key>
void add_to(std::map<Key, Scalar>& col, Key key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = col.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) col.erase(it);
    }
}

}  // namespace

AlgebraSpec restrict_i_star(const AlgebraSpec& alambda) {
    if (alambda.kind() != AlgebraKind::ALambda) {
        throw Error("restrict_i_star expects the twisted comodule algebra");
    }
    return make_algebra(AlgebraKind::Torus, alambda.params());
}

CotensorTruncation cotensor_truncated(const AlgebraSpec& alambda,
                                      const AlgebraSpec& carrier,
                                      const AlgebraSpec& torus,
                                      int cap) {
    if (alambda.kind() != AlgebraKind::ALambda) {
        throw Error("cotensor_truncated expects the twisted comodule algebra on the left");
    }
    if (torus.kind() != AlgebraKind::Torus) {
        throw Error("cotensor_truncated expects the twisted torus on the right");
    }
    require_carrier(carrier);
    const int rank = alambda.rank();
    if (carrier.rank() != rank || torus.rank() != rank) {
        throw IndexError("cotensor factors must share one rank");
    }
    if (cap < 0) {
        throw CapTooSmallError("cotensor cap is negative: the truncated span is empty");
    }

    // Middle leg carries the symmetry algebra: a basis vector Z^g (x) K^d is
    // sent to (coaction legs of Z^g) (x) K^d minus Z^g (x) (coaction legs of
    // K^d with the symmetry leg in the middle).
    using TargetKey = std::tuple<NormalWord, NormalWord, NormalWord>;
    CotensorTruncation result;
    std::vector<std::map<TargetKey, Scalar>> columns;
    const std::vector<std::vector<int>> box = exponent_box(rank, cap);
    for (const auto& gamma : box) {
        for (const auto& delta : box) {
            const NormalWord zg = torus_word(rank, gamma);
            const NormalWord kd = torus_word(rank, delta);
            std::map<TargetKey, Scalar> col;
            const TensorElement left = coaction(Element::term(zg, Scalar(1)), alambda, carrier);
            for (const auto& [legs, c] : left.terms()) {
                add_to(col, TargetKey{legs.first, legs.second, kd}, c);
            }
            const TensorElement right = coaction(Element::term(kd, Scalar(1)), torus, carrier);
            for (const auto& [legs, c] : right.terms()) {
                add_to(col, TargetKey{zg, legs.second, legs.first}, -c);
            }
            result.source.emplace_back(gamma, delta);
            columns.push_back(std::move(col));
        }
    }
    result.kernel = exact_kernel(columns);
    return result;
}

bool mu_check(const std::vector<int>& g, const std::vector<int>& h, const ParamSet& params) {
    const int rank = params.rank();
    if (static_cast<int>(g.size()) != rank || static_cast<int>(h.size()) != rank) {
        throw IndexError("mu_check exponent tuples must have length equal to the rank");
    }
    const AlgebraSpec u = make_algebra(AlgebraKind::U, params);
    const Functional sigma_rho = make_functional(FunctionalKind::SigmaRho, params);

    const NormalWord kg = torus_word(rank, g);
    const NormalWord kh = torus_word(rank, h);
    std::vector<int> sum(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        sum[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] + h[static_cast<std::size_t>(i)];
    }
    const NormalWord ks = torus_word(rank, sum);

    // mu(g) mu(h): left legs multiplied through the twisted product (peeling
    // route), right legs multiplied as grouplikes.
    const Element twisted = twisted_product_oracle(Element::term(kg, Scalar(1)),
                                                   Element::term(kh, Scalar(1)),
                                                   sigma_rho, TwistSide::Left, u);
    TensorElement rhs;
    for (const auto& [w, c] : twisted.terms()) rhs.add_term(w, ks, c);

    // mu(g . h): the group-algebra product picks up the bicharacter value
    // (closed-form route) and lands on the grouplike of the summed exponent.
    TensorElement lhs;
    lhs.add_term(ks, ks, sigma_lambda_eval(g, h, params));
    return lhs == rhs;
}

HomotopyInvariant::HomotopyInvariant(int rank, std::vector<Scalar> u, std::vector<Scalar> declared)
    : rank_(rank), u_(std::move(u)), declared_(std::move(declared)) {}

const Scalar& HomotopyInvariant::u(int i, int j) const {
    if (i < 1 || i > rank_ || j < 1 || j > rank_) throw IndexError("invariant index out of range");
    return u_.at(static_cast<std::size_t>((i - 1) * rank_ + (j - 1)));
}

const Scalar& HomotopyInvariant::declared_lambda(int i, int j) const {
    if (i < 1 || i > rank_ || j < 1 || j > rank_) throw IndexError("invariant index out of range");
    return declared_.at(static_cast<std::size_t>((i - 1) * rank_ + (j - 1)));
}

HomotopyInvariant homotopy_invariant(const AlgebraSpec& alambda) {
    if (alambda.kind() != AlgebraKind::ALambda) {
        throw Error("homotopy_invariant expects the twisted comodule algebra");
    }
    const int rank = alambda.rank();
    std::vector<Scalar> u;
    std::vector<Scalar> declared;
    for (int i = 1; i <= rank; ++i) {
        for (int j = 1; j <= rank; ++j) {
            const RawElement raw{{Scalar(1),
                                  {Letter{Block::Torus, i, 1}, Letter{Block::Torus, j, 1},
                                   Letter{Block::Torus, i, -1}, Letter{Block::Torus, j, -1}}}};
            const Element nf = normal_form(raw, alambda);
            if (nf.size() != 1 || !nf.terms().begin()->first.is_unit()) {
                throw Error("torus commutator did not normalize to a scalar");
            }
            u.push_back(nf.terms().begin()->second);
            declared.push_back(alambda.params().lam(i, j));
        }
    }
    return HomotopyInvariant(rank, std::move(u), std::move(declared));
}

bool same_commutator_class(const HomotopyInvariant& a, const HomotopyInvariant& b) {
    if (a.rank() != b.rank()) return false;
    for (int i = 1; i <= a.rank(); ++i) {
        for (int j = 1; j <= a.rank(); ++j) {
            if (!(a.u(i, j) == b.u(i, j))) return false;
        }
    }
    return true;
}

bool same_declared_family(const HomotopyInvariant& a, const HomotopyInvariant& b) {
    if (a.rank() != b.rank()) return false;
    for (int i = 1; i <= a.rank(); ++i) {
        for (int j = 1; j <= a.rank(); ++j) {
            if (!(a.declared_lambda(i, j) == b.declared_lambda(i, j))) return false;
        }
    }
    return true;
}

std::vector<std::map<int, Scalar>> coinvariant_kernel(const AlgebraSpec& alambda,
                                                      const AlgebraSpec& carrier,
                                                      int len_cap,
                                                      int torus_cap,
                                                      std::vector<NormalWord>* basis_out) {
    if (alambda.kind() != AlgebraKind::ALambda && alambda.kind() != AlgebraKind::Torus) {
        throw Error("coinvariant_kernel expects a comodule algebra of kind Alambda or torus");
    }
    require_carrier(carrier);
    const int rank = alambda.rank();
    if (carrier.rank() != rank) throw IndexError("comodule and carrier must share one rank");
    if (len_cap < 0 || torus_cap < 0) {
        throw CapTooSmallError("coinvariant caps are negative: the truncated span is empty");
    }

    const std::vector<std::vector<int>> words =
        alambda.kind() == AlgebraKind::Torus ? std::vector<std::vector<int>>{{}}
                                             : index_words(rank, len_cap);
    const std::vector<std::vector<int>> box = exponent_box(rank, torus_cap);
    std::vector<NormalWord> basis;
    for (const auto& lo : words) {
        for (const auto& up : words) {
            if (static_cast<int>(lo.size() + up.size()) > len_cap) continue;
            for (const auto& gamma : box) {
                NormalWord w;
                w.lower = lo;
                w.upper = up;
                w.torus = gamma;
                basis.push_back(std::move(w));
            }
        }
    }

    const NormalWord one = NormalWord::unit(rank);
    std::vector<std::map<TensorElement::Key, Scalar>> columns;
    columns.reserve(basis.size());
    for (const NormalWord& w : basis) {
        TensorElement col = coaction(Element::term(w, Scalar(1)), alambda, carrier);
        col.add_term(w, one, Scalar(-1));
        columns.emplace_back(col.terms().begin(), col.terms().end());
    }
    if (basis_out) *basis_out = std::move(basis);
    return exact_kernel(columns);
}

}  // namespace qgalois
