#pragma once

#include <string>
#include <vector>

#include "qgalois/element.hpp"
#include "qgalois/params.hpp"

namespace qgalois {

/// The four block-presented algebras the engine rewrites in. U is the quantum
/// enveloping algebra on free upper/lower blocks, GrU its associated graded
/// (vanishing mixed commutator), ALambda the twisted comodule algebra on
/// letters Y/X/Z, Torus the lambda-twisted torus alone.
enum class AlgebraKind { U, GrU, ALambda, Torus };

AlgebraKind algebra_kind_from_string(const std::string& name);
std::string to_string(AlgebraKind kind);

/// Structure constants driving the rewriting system. All relations have the
/// shape
///   G_i G_j = torus_swap(i,j) G_j G_i
///   G_i E_j = torus_past_upper(i,j) E_j G_i
///   G_i F_j = torus_past_lower(i,j) F_j G_i
///   E_i F_j - F_j E_i = delta_ij central_term(i)
/// with G the torus letters and central_term a torus-block element.
class AlgebraSpec {
public:
    AlgebraSpec(AlgebraKind kind, ParamSet params);

    AlgebraKind kind() const { return kind_; }
    int rank() const { return params_.rank(); }
    const ParamSet& params() const { return params_; }

    const Scalar& torus_swap(int i, int j) const { return tt_.at(idx(i, j)); }
    const Scalar& torus_past_upper(int i, int j) const { return tu_.at(idx(i, j)); }
    const Scalar& torus_past_lower(int i, int j) const { return tl_.at(idx(i, j)); }
    const Element& central_term(int i) const { return central_.at(static_cast<std::size_t>(i - 1)); }

    /// The torus algebra admits no upper or lower letters.
    bool allows_block(Block b) const { return kind_ != AlgebraKind::Torus || b == Block::Torus; }

private:
    std::size_t idx(int i, int j) const;
    AlgebraKind kind_;
    ParamSet params_;
    std::vector<Scalar> tt_, tu_, tl_;  // row-major t x t tables
    std::vector<Element> central_;
};

AlgebraSpec make_algebra(AlgebraKind kind, const ParamSet& params);

/// Raw (unreduced) input: formal sum of arbitrary generator-letter words.
struct RawTerm {
    Scalar coeff;
    std::vector<Letter> letters;
};
using RawElement = std::vector<RawTerm>;

/// Multiplies a canonical element by one letter on the right.
Element append_letter(const Element& e, const Letter& g, const AlgebraSpec& spec);
/// Multiplies a canonical element by a canonical word on the right.
Element append_word(const Element& e, const NormalWord& w, const AlgebraSpec& spec);

/// Rewrites a raw sum into the block normal form.
Element normal_form(const RawElement& raw, const AlgebraSpec& spec);

/// Product of two canonical elements, computed by the algebra's relations alone.
Element multiply(const Element& a, const Element& b, const AlgebraSpec& spec);

/// Quantum Serre element for the ordered pair (i, j), i != j:
///   sum_r (-1)^r [1-a_ij; r]_{q^{d_i}} T_i^{1-a_ij-r} T_j T_i^r
/// with T the chosen block's letters. With lambda_weighted the summand picks
/// up the twist weight lambda_ij^{a_ij + 2r - 1}.
Element serre_element(const AlgebraSpec& spec, Block side, int i, int j, bool lambda_weighted);

/// Letter relabeling X -> E, Y -> F, Z -> K. The twisted enveloping algebra
/// and ALambda share their structure constants, so the relabeling is the
/// whole map; it is the identity on block data.
Element phi_lambda(const Element& e);
/// Inverse relabeling F -> Y, E -> X, K -> Z on basis words.
Element psi(const Element& e);

/// Scalar relating a sigma-twisted basis word to the plain one:
///   F^alpha *sigma E^beta *sigma K^gamma = scalar * F^alpha E^beta K^gamma.
/// It is the product of lambda_{k k'}^{e_k e_k'} over ordered pairs of the
/// word's upper letters and torus entries; lower letters contribute nothing.
Scalar twisted_basis_change_scalar(const NormalWord& w, const ParamSet& params);

}  // namespace qgalois
