#include "qgalois/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

using nlohmann::json;

Scalar scalar_field(const json& v) {
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (v.is_string()) return Scalar::from_string(v.get<std::string>());
    throw Error("config scalars must be integers or decimal strings");
}

Scalar ratio_field(const json& v) {
    if (!v.is_object()) return scalar_field(v);
    if (!v.contains("num")) throw Error("config rational needs a num field");
    const Scalar num = scalar_field(v.at("num"));
    const Scalar den = v.contains("den") ? scalar_field(v.at("den")) : Scalar(1);
    if (den.is_zero()) throw Error("config rational with zero denominator");
    return num / den;
}

}  // namespace

EngineConfig default_config() {
    EngineConfig cfg;
    cfg.cartan = cartan_preset(CartanFamily::A, 2);
    cfg.q = Scalar(2);
    cfg.lambda = {{1, 2, Scalar(3)}};
    return cfg;
}

EngineConfig parse_config(const std::string& json_text) {
    try {
        const json j = json::parse(json_text);
        EngineConfig cfg;
        const json& jc = j.at("cartan");
        if (jc.contains("family")) {
            cfg.cartan = cartan_preset(cartan_family_from_string(jc.at("family").get<std::string>()),
                                       jc.at("rank").get<int>());
        } else {
            cfg.cartan.a = jc.at("matrix").get<std::vector<std::vector<int>>>();
            cfg.cartan.d = jc.at("d").get<std::vector<int>>();
            const ValidationReport report = validate(cfg.cartan);
            if (!report.ok) throw Error("invalid Cartan datum in config: " + report.message);
        }
        cfg.q = j.contains("q") ? ratio_field(j.at("q")) : Scalar(2);
        if (j.contains("lambda")) {
            for (const json& entry : j.at("lambda")) {
                if (!entry.is_array() || entry.size() != 4) {
                    throw Error("lambda entries must have the shape [i, j, num, den]");
                }
                const Scalar den = scalar_field(entry.at(3));
                if (den.is_zero()) throw Error("lambda entry with zero denominator");
                cfg.lambda.emplace_back(entry.at(0).get<int>(), entry.at(1).get<int>(),
                                        scalar_field(entry.at(2)) / den);
            }
        }
        return cfg;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw Error(std::string("malformed config: ") + ex.what());
    }
}

EngineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ParamSet config_params(const EngineConfig& cfg) { return make_params(cfg.q, cfg.lambda, cfg.cartan); }

}  // namespace qgalois
