// Command-line surface of the engine: normal forms, products, the Hopf and
// comodule structure maps, Serre elements, the verification suites, and the
// torus-commutator invariant, over a configurable Cartan datum and parameter
// set. Text output is deterministic and parseable back; --json switches to
// machine-readable records (one term per record, coefficients as exact
// numerator/denominator strings).

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgalois/algebra.hpp"
#include "qgalois/config.hpp"
#include "qgalois/element.hpp"
#include "qgalois/errors.hpp"
#include "qgalois/expr.hpp"
#include "qgalois/galois.hpp"
#include "qgalois/hopf.hpp"
#include "qgalois/tensor.hpp"
#include "qgalois/verify.hpp"

namespace {

using qgalois::AlgebraKind;
using qgalois::AlgebraSpec;
using qgalois::Element;
using qgalois::NormalWord;
using qgalois::Scalar;
using qgalois::TensorElement;

std::string word_text(const NormalWord& w, AlgebraKind kind) {
    return qgalois::print_canonical(Element::term(w, Scalar(1)), kind);
}

nlohmann::json word_json(const NormalWord& w) {
    return nlohmann::json{{"lower", w.lower}, {"upper", w.upper}, {"torus", w.torus}};
}

nlohmann::json element_json(const Element& e, AlgebraKind kind) {
    nlohmann::json terms = nlohmann::json::array();
    const auto& m = e.terms();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        nlohmann::json t = word_json(it->first);
        t["num"] = it->second.num_str();
        t["den"] = it->second.den_str();
        terms.push_back(std::move(t));
    }
    return nlohmann::json{
        {"kind", "element"}, {"algebra", qgalois::to_string(kind)}, {"terms", std::move(terms)}};
}

void emit_element(const Element& e, AlgebraKind kind, bool json) {
    if (json) {
        std::cout << element_json(e, kind).dump(2) << "\n";
    } else {
        std::cout << qgalois::print_canonical(e, kind) << "\n";
    }
}

void emit_tensor(const TensorElement& t, AlgebraKind left, AlgebraKind right, bool json) {
    const auto& m = t.terms();
    if (json) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            terms.push_back(nlohmann::json{{"num", it->second.num_str()},
                                           {"den", it->second.den_str()},
                                           {"left", word_json(it->first.first)},
                                           {"right", word_json(it->first.second)}});
        }
        std::cout << nlohmann::json{{"kind", "tensor"},
                                    {"left_algebra", qgalois::to_string(left)},
                                    {"right_algebra", qgalois::to_string(right)},
                                    {"terms", std::move(terms)}}
                         .dump(2)
                  << "\n";
        return;
    }
    if (t.is_zero()) {
        std::cout << "0\n";
        return;
    }
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        std::cout << it->second.str() << " * " << word_text(it->first.first, left) << " (x) "
                  << word_text(it->first.second, right) << "\n";
    }
}

AlgebraKind carrier_kind(const std::string& flag, const char* fallback, const char* who) {
    const AlgebraKind kind = qgalois::algebra_kind_from_string(flag.empty() ? fallback : flag);
    if (kind != AlgebraKind::U && kind != AlgebraKind::GrU) {
        throw qgalois::Error(std::string(who) + " requires --algebra U or grU");
    }
    return kind;
}

AlgebraKind comodule_kind(const std::string& flag) {
    const AlgebraKind kind = qgalois::algebra_kind_from_string(flag.empty() ? "Alambda" : flag);
    if (kind != AlgebraKind::ALambda && kind != AlgebraKind::Torus) {
        throw qgalois::Error("coact requires --algebra Alambda or torus");
    }
    return kind;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic calculator and verifier for block-presented quantum algebras"};
    app.require_subcommand(1);

    std::string config_path;
    bool json = false;
    unsigned seed = 12345;
    int cap = 2;
    std::string algebra;
    app.add_option("--config", config_path, "path to a JSON config file (cartan, q, lambda)");
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--seed", seed, "seed for the randomized parts of verify suites");
    app.add_option("--cap", cap, "truncation degree for kernel computations");
    app.add_option("--algebra", algebra,
                   "algebra for delta/coact/eps/antipode (U, grU, Alambda, torus)");

    std::string nf_algebra, nf_expr;
    CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("algebra", nf_algebra, "U, grU, Alambda or torus")->required();
    nf->add_option("expr", nf_expr, "expression to normalize")->required();

    std::string mul_algebra, mul_left, mul_right;
    CLI::App* mul = app.add_subcommand("mul", "product of two expressions");
    mul->add_option("algebra", mul_algebra, "U, grU, Alambda or torus")->required();
    mul->add_option("e1", mul_left, "left factor")->required();
    mul->add_option("e2", mul_right, "right factor")->required();

    std::string delta_expr;
    CLI::App* delta = app.add_subcommand("delta", "comultiplication (carrier U or grU)");
    delta->add_option("expr", delta_expr, "expression")->required();

    std::string coact_expr;
    CLI::App* coact = app.add_subcommand("coact", "right coaction (comodule Alambda or torus)");
    coact->add_option("expr", coact_expr, "expression")->required();

    std::string eps_expr;
    CLI::App* eps = app.add_subcommand("eps", "counit of an expression");
    eps->add_option("expr", eps_expr, "expression")->required();

    std::string anti_expr;
    CLI::App* anti = app.add_subcommand("antipode", "antipode (carrier U or grU)");
    anti->add_option("expr", anti_expr, "expression")->required();

    std::string serre_algebra, serre_side;
    int serre_i = 0;
    int serre_j = 0;
    bool serre_weighted = false;
    bool serre_plain = false;
    CLI::App* serre = app.add_subcommand("serre", "quantum Serre element for an ordered pair");
    serre->add_option("algebra", serre_algebra, "U, grU, Alambda or torus")->required();
    serre->add_option("side", serre_side, "upper or lower")->required();
    serre->add_option("i", serre_i, "first index")->required();
    serre->add_option("j", serre_j, "second index")->required();
    serre->add_flag("--weighted", serre_weighted, "force the parameter-weighted element");
    serre->add_flag("--plain", serre_plain, "force the unweighted element");

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "cocycle, hopf, comodule, serre-transport, oracle, lemma1 or ms-twist")
        ->required();

    CLI::App* invariant =
        app.add_subcommand("invariant", "torus commutator invariant and declared parameter family");

    for (CLI::App* sub : {nf, mul, delta, coact, eps, anti, serre, verify, invariant}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const qgalois::EngineConfig cfg =
            config_path.empty() ? qgalois::default_config() : qgalois::load_config(config_path);
        const qgalois::ParamSet params = qgalois::config_params(cfg);

        if (nf->parsed()) {
            const AlgebraKind kind = qgalois::algebra_kind_from_string(nf_algebra);
            const AlgebraSpec spec = qgalois::make_algebra(kind, params);
            emit_element(qgalois::parse_expression(nf_expr, spec), kind, json);
        } else if (mul->parsed()) {
            const AlgebraKind kind = qgalois::algebra_kind_from_string(mul_algebra);
            const AlgebraSpec spec = qgalois::make_algebra(kind, params);
            const Element a = qgalois::parse_expression(mul_left, spec);
            const Element b = qgalois::parse_expression(mul_right, spec);
            emit_element(qgalois::multiply(a, b, spec), kind, json);
        } else if (delta->parsed()) {
            const AlgebraKind kind = carrier_kind(algebra, "U", "delta");
            const AlgebraSpec spec = qgalois::make_algebra(kind, params);
            const Element e = qgalois::parse_expression(delta_expr, spec);
            emit_tensor(qgalois::coproduct(e, spec), kind, kind, json);
        } else if (coact->parsed()) {
            const AlgebraKind kind = comodule_kind(algebra);
            const AlgebraSpec comod = qgalois::make_algebra(kind, params);
            const AlgebraSpec carrier = qgalois::make_algebra(AlgebraKind::U, params);
            const Element e = qgalois::parse_expression(coact_expr, comod);
            emit_tensor(qgalois::coaction(e, comod, carrier), kind, AlgebraKind::U, json);
        } else if (eps->parsed()) {
            const AlgebraKind kind =
                qgalois::algebra_kind_from_string(algebra.empty() ? "U" : algebra);
            const AlgebraSpec spec = qgalois::make_algebra(kind, params);
            const Scalar value = qgalois::counit(qgalois::parse_expression(eps_expr, spec));
            if (json) {
                std::cout << nlohmann::json{{"kind", "scalar"},
                                            {"num", value.num_str()},
                                            {"den", value.den_str()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << value.str() << "\n";
            }
        } else if (anti->parsed()) {
            const AlgebraKind kind = carrier_kind(algebra, "U", "antipode");
            const AlgebraSpec spec = qgalois::make_algebra(kind, params);
            const Element e = qgalois::parse_expression(anti_expr, spec);
            emit_element(qgalois::antipode(e, spec), kind, json);
        } else if (serre->parsed()) {
            const AlgebraKind kind = qgalois::algebra_kind_from_string(serre_algebra);
            const AlgebraSpec spec = qgalois::make_algebra(kind, params);
            qgalois::Block side;
            if (serre_side == "upper") {
                side = qgalois::Block::Upper;
            } else if (serre_side == "lower") {
                side = qgalois::Block::Lower;
            } else {
                throw qgalois::Error("serre side must be upper or lower");
            }
            if (serre_weighted && serre_plain) {
                throw qgalois::Error("--weighted and --plain are mutually exclusive");
            }
            const bool weighted = serre_weighted || (!serre_plain && kind == AlgebraKind::ALambda);
            emit_element(qgalois::serre_element(spec, side, serre_i, serre_j, weighted), kind, json);
        } else if (verify->parsed()) {
            const qgalois::CheckReport report = qgalois::run_suite(suite, params, seed, cap);
            if (json) {
                std::cout << nlohmann::json{{"kind", "verify"},
                                            {"suite", report.suite},
                                            {"pass", report.pass},
                                            {"checks", report.checks},
                                            {"failures", report.failures}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "suite " << report.suite << ": " << (report.pass ? "PASS" : "FAIL")
                          << " (" << report.checks << " checks)\n";
                if (!report.pass) {
                    std::cout << "counterexample: " << report.failures.front() << "\n";
                }
            }
            if (!report.pass) return 1;
        } else if (invariant->parsed()) {
            const qgalois::HomotopyInvariant inv =
                qgalois::homotopy_invariant(qgalois::make_algebra(AlgebraKind::ALambda, params));
            if (json) {
                nlohmann::json u_rows = nlohmann::json::array();
                nlohmann::json lambda_rows = nlohmann::json::array();
                for (int i = 1; i <= inv.rank(); ++i) {
                    nlohmann::json u_row = nlohmann::json::array();
                    nlohmann::json lambda_row = nlohmann::json::array();
                    for (int j = 1; j <= inv.rank(); ++j) {
                        u_row.push_back(inv.u(i, j).str());
                        lambda_row.push_back(inv.declared_lambda(i, j).str());
                    }
                    u_rows.push_back(std::move(u_row));
                    lambda_rows.push_back(std::move(lambda_row));
                }
                std::cout << nlohmann::json{{"kind", "invariant"},
                                            {"rank", inv.rank()},
                                            {"u", std::move(u_rows)},
                                            {"lambda", std::move(lambda_rows)}}
                                 .dump(2)
                          << "\n";
            } else {
                for (int i = 1; i <= inv.rank(); ++i) {
                    for (int j = 1; j <= inv.rank(); ++j) {
                        if (i == j) continue;
                        std::cout << "u_" << i << j << " = " << inv.u(i, j).str() << "\n";
                        std::cout << "lambda_" << i << j << " = " << inv.declared_lambda(i, j).str()
                                  << "\n";
                    }
                }
            }
        }
    } catch (const qgalois::ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const qgalois::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
