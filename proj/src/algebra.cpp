#include "qgalois/algebra.hpp"

#include <utility>

#include "qgalois/errors.hpp"
#include "qgalois/qint.hpp"

namespace qgalois {

AlgebraKind algebra_kind_from_string(const std::string& name) {
    if (name == "U") return AlgebraKind::U;
    if (name == "grU") return AlgebraKind::GrU;
    if (name == "Alambda") return AlgebraKind::ALambda;
    if (name == "torus") return AlgebraKind::Torus;
    throw Error("unknown algebra: " + name + " (expected U, grU, Alambda or torus)");
}

std::string to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::U: return "U";
        case AlgebraKind::GrU: return "grU";
        case AlgebraKind::ALambda: return "Alambda";
        case AlgebraKind::Torus: return "torus";
    }
    return "?";
}

std::size_t AlgebraSpec::idx(int i, int j) const {
    const int t = rank();
    if (i < 1 || j < 1 || i > t || j > t) throw IndexError("generator index out of rank");
    return static_cast<std::size_t>((i - 1) * t + (j - 1));
}

AlgebraSpec::AlgebraSpec(AlgebraKind kind, ParamSet params) : kind_(kind), params_(std::move(params)) {
    const int t = params_.rank();
    tt_.assign(static_cast<std::size_t>(t) * t, Scalar(1));
    tu_.assign(static_cast<std::size_t>(t) * t, Scalar(1));
    tl_.assign(static_cast<std::size_t>(t) * t, Scalar(1));
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) {
            const std::size_t k = idx(i, j);
            const Scalar qa = params_.q().pow(static_cast<long>(params_.d(i)) * params_.a(i, j));
            const Scalar lam2 = params_.lam(i, j) * params_.lam(i, j);
            switch (kind_) {
                case AlgebraKind::U:
                case AlgebraKind::GrU:
                    tu_[k] = qa;
                    tl_[k] = qa.inverse();
                    break;
                case AlgebraKind::ALambda:
                    tt_[k] = lam2;
                    tu_[k] = lam2 * qa;
                    tl_[k] = qa.inverse();
                    break;
                case AlgebraKind::Torus:
                    tt_[k] = lam2;
                    break;
            }
        }
    }
    central_.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) {
        Element c;
        const Scalar denom = params_.q_d(i) - params_.q_d(i).inverse();  // nonzero: q^(2 d_i) != 1
        if (kind_ == AlgebraKind::U) {
            NormalWord k_plus = NormalWord::unit(t);
            k_plus.torus[i - 1] = 1;
            NormalWord k_minus = NormalWord::unit(t);
            k_minus.torus[i - 1] = -1;
            c.add_term(std::move(k_plus), denom.inverse());
            c.add_term(std::move(k_minus), -denom.inverse());
        } else if (kind_ == AlgebraKind::ALambda) {
            NormalWord z = NormalWord::unit(t);
            z.torus[i - 1] = 1;
            c.add_term(std::move(z), denom.inverse());
        }
        central_.push_back(std::move(c));
    }
}

AlgebraSpec make_algebra(AlgebraKind kind, const ParamSet& params) { return AlgebraSpec(kind, params); }

namespace {

// Canonical form of F^alpha E^beta T_j with T the lower letter of index j and
// no torus letters involved. Peels the upper block from the right; each E_j
// crossing deletes the pair and inserts the algebra's central term.
Element lower_through_upper(const std::vector<int>& alpha, const std::vector<int>& beta, int j,
                            const AlgebraSpec& spec) {
    const int rank = spec.rank();
    if (beta.empty()) {
        NormalWord w = NormalWord::unit(rank);
        w.lower = alpha;
        w.lower.push_back(j);
        return Element::term(std::move(w), 1);
    }
    const int b = beta.back();
    const std::vector<int> head(beta.begin(), beta.end() - 1);
    Element out = append_letter(lower_through_upper(alpha, head, j, spec), Letter{Block::Upper, b, 1}, spec);
    if (b == j) {
        for (const auto& [cw, cc] : spec.central_term(b).terms()) {
            NormalWord w = NormalWord::unit(rank);
            w.lower = alpha;
            w.upper = head;
            w.torus = cw.torus;
            out.add_term(std::move(w), cc);
        }
    }
    return out;
}

}  // namespace

Element append_letter(const Element& e, const Letter& g, const AlgebraSpec& spec) {
    const int t = spec.rank();
    if (g.index < 1 || g.index > t) throw IndexError("generator index out of rank");
    if (!spec.allows_block(g.block)) throw IndexError("the torus algebra admits only torus letters");
    if (g.block == Block::Torus ? (g.exponent != 1 && g.exponent != -1) : g.exponent != 1) {
        throw Error("letter exponent must be a unit step");
    }

    Element out;
    for (const auto& [w, c] : e.terms()) {
        switch (g.block) {
            case Block::Torus: {
                // Migrate the new torus letter into its slot; it crosses the
                // torus letters with larger index only.
                Scalar f = c;
                for (int k = g.index + 1; k <= t; ++k) {
                    if (w.torus[k - 1] != 0) {
                        f *= spec.torus_swap(k, g.index).pow(static_cast<long>(w.torus[k - 1]) * g.exponent);
                    }
                }
                NormalWord nw = w;
                nw.torus[g.index - 1] += g.exponent;
                out.add_term(std::move(nw), std::move(f));
                break;
            }
            case Block::Upper: {
                Scalar f = c;
                for (int i = 1; i <= t; ++i) {
                    if (w.torus[i - 1] != 0) f *= spec.torus_past_upper(i, g.index).pow(w.torus[i - 1]);
                }
                NormalWord nw = w;
                nw.upper.push_back(g.index);
                out.add_term(std::move(nw), std::move(f));
                break;
            }
            case Block::Lower: {
                Scalar f = c;
                for (int i = 1; i <= t; ++i) {
                    if (w.torus[i - 1] != 0) f *= spec.torus_past_lower(i, g.index).pow(w.torus[i - 1]);
                }
                Element crossed = lower_through_upper(w.lower, w.upper, g.index, spec);
                // Reattach the word's torus monomial on the right.
                for (int i = 1; i <= t; ++i) {
                    const int exp = w.torus[i - 1];
                    const Letter unit_step{Block::Torus, i, exp < 0 ? -1 : 1};
                    for (int s = 0; s < (exp < 0 ? -exp : exp); ++s) {
                        crossed = append_letter(crossed, unit_step, spec);
                    }
                }
                out += f * crossed;
                break;
            }
        }
    }
    return out;
}

Element append_word(const Element& e, const NormalWord& w, const AlgebraSpec& spec) {
    Element out = e;
    for (const Letter& g : w.letters()) out = append_letter(out, g, spec);
    return out;
}

Element normal_form(const RawElement& raw, const AlgebraSpec& spec) {
    Element out;
    for (const RawTerm& term : raw) {
        Element e = Element::unit(spec.rank());
        for (const Letter& g : term.letters) e = append_letter(e, g, spec);
        out += term.coeff * e;
    }
    return out;
}

Element multiply(const Element& a, const Element& b, const AlgebraSpec& spec) {
    Element out;
    for (const auto& [wb, cb] : b.terms()) {
        out += cb * append_word(a, wb, spec);
    }
    return out;
}

Element serre_element(const AlgebraSpec& spec, Block side, int i, int j, bool lambda_weighted) {
    if (side == Block::Torus) throw IndexError("Serre elements live in the upper or lower block");
    if (!spec.allows_block(side)) throw IndexError("the torus algebra has no Serre elements");
    const int t = spec.rank();
    if (i < 1 || i > t || j < 1 || j > t) throw IndexError("Serre index out of rank");
    if (i == j) throw IndexError("Serre element needs distinct indices");

    const ParamSet& p = spec.params();
    const long m = 1 - p.a(i, j);
    const Scalar v = p.q_d(i);
    Element out;
    for (long r = 0; r <= m; ++r) {
        Scalar coeff = q_binomial(m, r, v);
        if (r % 2 == 1) coeff = -coeff;
        if (lambda_weighted) coeff *= p.lam(i, j).pow(p.a(i, j) + 2 * r - 1);
        NormalWord w = NormalWord::unit(t);
        std::vector<int>& block = (side == Block::Upper) ? w.upper : w.lower;
        block.assign(static_cast<std::size_t>(m - r), i);
        block.push_back(j);
        block.insert(block.end(), static_cast<std::size_t>(r), i);
        out.add_term(std::move(w), std::move(coeff));
    }
    return out;
}

Element phi_lambda(const Element& e) { return e; }

Element psi(const Element& e) { return e; }

Scalar twisted_basis_change_scalar(const NormalWord& w, const ParamSet& params) {
    // Ordered index sequence of the twist-sensitive letters: the upper block,
    // then the torus block with its exponents. Lower letters are transparent.
    std::vector<std::pair<int, long>> seq;
    for (int u : w.upper) seq.emplace_back(u, 1);
    for (int i = 1; i <= w.rank(); ++i) {
        if (w.torus[i - 1] != 0) seq.emplace_back(i, w.torus[i - 1]);
    }
    Scalar out(1);
    for (std::size_t m = 0; m < seq.size(); ++m) {
        for (std::size_t n = m + 1; n < seq.size(); ++n) {
            out *= params.lam(seq[m].first, seq[n].first).pow(seq[m].second * seq[n].second);
        }
    }
    return out;
}

}  // namespace qgalois
