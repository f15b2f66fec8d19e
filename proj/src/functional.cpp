#include "qgalois/functional.hpp"

#include <utility>

#include "qgalois/errors.hpp"
#include "qgalois/hopf.hpp"
#include "qgalois/tensor.hpp"

namespace qgalois {

std::string to_string(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::SigmaLambda: return "sigma_lambda";
        case FunctionalKind::SigmaTilde: return "sigma_tilde";
        case FunctionalKind::Rho: return "rho";
        case FunctionalKind::RhoInverse: return "rho_inverse";
        case FunctionalKind::SigmaRho: return "sigma_rho";
        case FunctionalKind::ConvolutionUnit: return "convolution_unit";
    }
    return "?";
}

Functional::Functional(FunctionalKind kind, FunctionalDomain domain, ParamSet params)
    : kind_(kind), domain_(domain), params_(std::move(params)) {
    const int t = params_.rank();
    pair_base_.assign(static_cast<std::size_t>(t) * t, Scalar(1));
}

std::size_t Functional::idx(int i, int j) const {
    const int t = params_.rank();
    if (i < 1 || j < 1 || i > t || j > t) throw IndexError("generator index out of rank");
    return static_cast<std::size_t>((i - 1) * t + (j - 1));
}

Scalar Functional::pair_base(int i, int j) const { return pair_base_[idx(i, j)]; }

Scalar Functional::letter_value(const Letter& x, const Letter& y) const {
    if (x.block == Block::Torus && y.block == Block::Torus) {
        return pair_base(x.index, y.index).pow(static_cast<long>(x.exponent) * y.exponent);
    }
    const auto it = table_.find({x, y});
    return it == table_.end() ? Scalar(0) : it->second;
}

namespace {

Letter upper_letter(int i) { return Letter{Block::Upper, i, 1}; }
Letter lower_letter(int i) { return Letter{Block::Lower, i, 1}; }
Letter torus_letter(int i, int s) { return Letter{Block::Torus, i, s}; }

}  // namespace

Functional make_functional(FunctionalKind kind, const ParamSet& params) {
    const int t = params.rank();
    switch (kind) {
        case FunctionalKind::SigmaLambda:
        case FunctionalKind::SigmaTilde: {
            Functional f(kind,
                         kind == FunctionalKind::SigmaLambda ? FunctionalDomain::TorusPairs
                                                             : FunctionalDomain::Total,
                         params);
            for (int i = 1; i <= t; ++i) {
                for (int j = 1; j <= t; ++j) f.pair_base_[f.idx(i, j)] = params.lam(i, j);
            }
            return f;
        }
        case FunctionalKind::ConvolutionUnit:
            return Functional(kind, FunctionalDomain::Total, params);
        case FunctionalKind::Rho: {
            Functional f(kind, FunctionalDomain::Standard, params);
            for (int i = 1; i <= t; ++i) {
                const Scalar denom = params.q_d(i) - params.q_d(i).inverse();
                f.table_.emplace(std::pair{upper_letter(i), lower_letter(i)}, -denom.inverse());
            }
            return f;
        }
        case FunctionalKind::RhoInverse:
            return convolution_inverse(make_functional(FunctionalKind::Rho, params));
        case FunctionalKind::SigmaRho: {
            Functional f(kind, FunctionalDomain::Standard, params);
            for (int i = 1; i <= t; ++i) {
                for (int j = 1; j <= t; ++j) f.pair_base_[f.idx(i, j)] = params.lam(i, j);
                const Scalar denom = params.q_d(i) - params.q_d(i).inverse();
                f.table_.emplace(std::pair{upper_letter(i), lower_letter(i)}, denom.inverse());
            }
            return f;
        }
    }
    throw Error("unknown functional kind");
}

Scalar sigma_lambda_eval(const std::vector<int>& g, const std::vector<int>& h, const ParamSet& params) {
    const int t = params.rank();
    if (static_cast<int>(g.size()) != t || static_cast<int>(h.size()) != t) {
        throw IndexError("exponent tuple length differs from the rank");
    }
    Scalar out(1);
    for (int i = 1; i <= t; ++i) {
        if (g[i - 1] == 0) continue;
        for (int j = 1; j <= t; ++j) {
            if (h[j - 1] == 0) continue;
            out *= params.lam(i, j).pow(static_cast<long>(g[i - 1]) * h[j - 1]);
        }
    }
    return out;
}

namespace {

Scalar pairing(const Functional& f, const std::vector<int>& g, const std::vector<int>& h) {
    Scalar out(1);
    const int t = static_cast<int>(g.size());
    for (int i = 1; i <= t; ++i) {
        if (g[i - 1] == 0) continue;
        for (int j = 1; j <= t; ++j) {
            if (h[j - 1] == 0) continue;
            out *= f.pair_base(i, j).pow(static_cast<long>(g[i - 1]) * h[j - 1]);
        }
    }
    return out;
}

Scalar eps_word(const NormalWord& w) { return w.torus_only() ? Scalar(1) : Scalar(0); }

void check_standard_domain(const NormalWord& x, const NormalWord& y) {
    const WordSide sx = word_side(x);
    const WordSide sy = word_side(y);
    if (sx == WordSide::Mixed || sy == WordSide::Mixed) {
        throw OutsideDomainError("word mixing upper and lower letters is outside the validity domain");
    }
    if (sx == WordSide::TorusOnly || sy == WordSide::TorusOnly) return;
    if (sx == sy) return;
    if (sx == WordSide::Lower && sy == WordSide::Upper) return;
    // Upper-left/lower-right is covered only by the single-letter table.
    if (x.letter_count() == 1 && y.letter_count() == 1) return;
    throw OutsideDomainError(
        "upper-left/lower-right arguments are evaluable only as a single-letter pair");
}

NormalWord single_letter_word(const Letter& g, int rank) {
    NormalWord w = NormalWord::unit(rank);
    switch (g.block) {
        case Block::Lower: w.lower = {g.index}; break;
        case Block::Upper: w.upper = {g.index}; break;
        case Block::Torus: w.torus[g.index - 1] = g.exponent; break;
    }
    return w;
}

// Split off the leftmost letter; the word equals that letter times the rest.
NormalWord drop_first_letter(const NormalWord& w) {
    NormalWord rest = w;
    if (!rest.lower.empty()) {
        rest.lower.erase(rest.lower.begin());
    } else if (!rest.upper.empty()) {
        rest.upper.erase(rest.upper.begin());
    } else {
        for (std::size_t i = 0; i < rest.torus.size(); ++i) {
            if (rest.torus[i] != 0) {
                rest.torus[i] += rest.torus[i] > 0 ? -1 : 1;
                break;
            }
        }
    }
    return rest;
}

Scalar eval_peel(const Functional& f, const NormalWord& x, const NormalWord& y,
                 const AlgebraSpec& carrier) {
    check_standard_domain(x, y);
    if (x.is_unit()) return eps_word(y);
    if (y.is_unit()) return eps_word(x);
    const std::size_t nx = x.letter_count();
    const std::size_t ny = y.letter_count();
    if (nx == 1 && ny == 1) return f.letter_value(x.letters().front(), y.letters().front());

    Scalar out(0);
    if (ny > 1) {
        // f(x, h·rest) = sum f(x1, h) f(x2, rest) over the legs of x.
        const NormalWord head = single_letter_word(y.letters().front(), y.rank());
        const NormalWord rest = drop_first_letter(y);
        const TensorElement legs = coproduct(Element::term(x, Scalar(1)), carrier);
        for (const auto& [k, c] : legs.terms()) {
            const Scalar left = eval_peel(f, k.first, head, carrier);
            if (left.is_zero()) continue;
            out += c * left * eval_peel(f, k.second, rest, carrier);
        }
    } else {
        // f(g·rest, y) = sum f(g, y2) f(rest, y1) over the legs of the single letter y.
        const NormalWord head = single_letter_word(x.letters().front(), x.rank());
        const NormalWord rest = drop_first_letter(x);
        const TensorElement legs = coproduct(Element::term(y, Scalar(1)), carrier);
        for (const auto& [k, c] : legs.terms()) {
            const Scalar left = eval_peel(f, head, k.second, carrier);
            if (left.is_zero()) continue;
            out += c * left * eval_peel(f, rest, k.first, carrier);
        }
    }
    return out;
}

}  // namespace

Scalar evaluate(const Functional& f, const NormalWord& x, const NormalWord& y,
                const AlgebraSpec& carrier) {
    if (x.rank() != carrier.rank() || y.rank() != carrier.rank() ||
        f.params().rank() != carrier.rank()) {
        throw IndexError("functional, words and carrier must share one rank");
    }
    switch (f.kind()) {
        case FunctionalKind::SigmaLambda:
            if (!x.torus_only() || !y.torus_only()) {
                throw OutsideDomainError("this bicharacter is defined on torus words only");
            }
            return pairing(f, x.torus, y.torus);
        case FunctionalKind::SigmaTilde:
        case FunctionalKind::ConvolutionUnit:
            if (!x.torus_only() || !y.torus_only()) return Scalar(0);
            return pairing(f, x.torus, y.torus);
        case FunctionalKind::Rho:
        case FunctionalKind::RhoInverse:
        case FunctionalKind::SigmaRho:
            if (carrier.kind() != AlgebraKind::U && carrier.kind() != AlgebraKind::GrU) {
                throw Error("peeling evaluation needs a carrier of kind U or grU");
            }
            return eval_peel(f, x, y, carrier);
    }
    throw Error("unknown functional kind");
}

Scalar evaluate(const Functional& f, const Element& x, const Element& y, const AlgebraSpec& carrier) {
    Scalar out(0);
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) out += cx * cy * evaluate(f, wx, wy, carrier);
    }
    return out;
}

Functional convolution_inverse(const Functional& f) {
    const ParamSet& p = f.params();
    const int t = p.rank();
    switch (f.kind()) {
        case FunctionalKind::SigmaLambda:
        case FunctionalKind::SigmaTilde: {
            LambdaEntries inverted;
            for (int i = 1; i <= t; ++i) {
                for (int j = i + 1; j <= t; ++j) inverted.emplace_back(i, j, p.lam(i, j).inverse());
            }
            return make_functional(f.kind(), make_params(p.q(), inverted, p.cartan()));
        }
        case FunctionalKind::ConvolutionUnit:
            return make_functional(f.kind(), p);
        case FunctionalKind::Rho:
        case FunctionalKind::RhoInverse:
        case FunctionalKind::SigmaRho:
            break;
    }

    // Solve the convolution equations (f * g)(a, b) = eps(a) eps(b) on letter
    // pairs, class by class; each class reduces to values solved before it.
    const FunctionalKind kind = f.kind() == FunctionalKind::Rho ? FunctionalKind::RhoInverse
                                : f.kind() == FunctionalKind::RhoInverse ? FunctionalKind::Rho
                                                                         : f.kind();
    Functional g(kind, f.domain(), p);
    const auto put = [&g](const Letter& a, const Letter& b, Scalar v) {
        if (!v.is_zero()) g.table_.emplace(std::pair{a, b}, std::move(v));
    };

    // Grouplike pairs: g(K_i, K_j) f(K_i, K_j) = 1.
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) g.pair_base_[g.idx(i, j)] = f.pair_base(i, j).inverse();
    }
    // One letter against a grouplike.
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) {
            for (const int s : {1, -1}) {
                const Letter k{Block::Torus, j, s};
                put(upper_letter(i), k, -f.letter_value(upper_letter(i), k) / f.pair_base(i, j).pow(s));
                put(lower_letter(i), k,
                    -f.letter_value(lower_letter(i), k) * g.pair_base(i, j).pow(-s));
                const Letter ki{Block::Torus, i, s};
                put(ki, upper_letter(j), -f.letter_value(ki, upper_letter(j)) / f.pair_base(i, j).pow(s));
                put(ki, lower_letter(j), -f.letter_value(ki, lower_letter(j)) * g.pair_base(i, j).pow(-s));
            }
        }
    }
    // Letter-letter classes.
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) {
            const Letter ei = upper_letter(i), ej = upper_letter(j);
            const Letter fi = lower_letter(i), fj = lower_letter(j);
            put(ei, ej, -f.letter_value(ei, ej) / f.pair_base(i, j));
            put(fi, fj, -f.letter_value(fi, fj) * g.pair_base(i, j));
            put(ei, fj,
                -(f.letter_value(ei, fj) +
                  f.letter_value(torus_letter(i, 1), fj) * g.letter_value(ei, torus_letter(j, -1))));
            put(fi, ej,
                -(f.letter_value(fi, ej) +
                  f.letter_value(fi, torus_letter(j, 1)) * g.letter_value(torus_letter(i, -1), ej)));
        }
    }
    return g;
}

Scalar Convolution::operator()(const NormalWord& x, const NormalWord& y,
                               const AlgebraSpec& carrier) const {
    const TensorElement legs_x = coproduct(Element::term(x, Scalar(1)), carrier);
    const TensorElement legs_y = coproduct(Element::term(y, Scalar(1)), carrier);
    Scalar out(0);
    for (const auto& [kx, cx] : legs_x.terms()) {
        for (const auto& [ky, cy] : legs_y.terms()) {
            const Scalar left = evaluate(*f_, kx.first, ky.first, carrier);
            if (left.is_zero()) continue;
            out += cx * cy * left * evaluate(*g_, kx.second, ky.second, carrier);
        }
    }
    return out;
}

}  // namespace qgalois
