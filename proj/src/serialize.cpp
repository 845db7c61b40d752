#include "vvmf/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace vvmf {

using nlohmann::json;

nlohmann::json to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return json{{"offset", to_string(s.offset())}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(rat_from_string(c.get<std::string>()));
    return QSeries(rat_from_string(j.at("offset").get<std::string>()),
                   std::move(coeffs));
}

nlohmann::json to_json(const ReprParams& p) {
    return json{{"a", p.a},         {"b", p.b},
                {"N", p.N},         {"c", p.c},
                {"d", p.d},         {"M", p.M},
                {"Q", p.Q},         {"m1", to_string(p.m1)},
                {"m2", to_string(p.m2)}, {"k0", to_string(p.k0)},
                {"kappa1", to_string(p.kappa1)}};
}

ReprParams repr_params_from_json(const json& j) {
    return derive_params(j.at("a").get<long>(), j.at("b").get<long>(),
                         j.at("N").get<long>());
}

nlohmann::json to_json(const ClassificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.lemma_checks)
        checks.push_back(json{{"constraint", c.name},
                              {"statement", c.statement},
                              {"pass", c.pass}});
    json out{{"params", to_json(r.params)},
             {"lemma_checks", checks},
             {"all_constraints_pass", r.all_constraints_pass},
             {"modular", r.modular},
             {"excluded", r.excluded},
             {"q_primes", r.q_primes}};
    if (r.excluded) out["excluded_reason"] = r.excluded_reason;
    return out;
}

ClassificationReport classification_from_json(const json& j) {
    ClassificationReport r;
    r.params = repr_params_from_json(j.at("params"));
    for (const auto& c : j.at("lemma_checks"))
        r.lemma_checks.push_back({c.at("constraint").get<std::string>(),
                                  c.at("statement").get<std::string>(),
                                  c.at("pass").get<bool>()});
    r.all_constraints_pass = j.at("all_constraints_pass").get<bool>();
    r.modular = j.at("modular").get<bool>();
    r.excluded = j.at("excluded").get<bool>();
    if (r.excluded) r.excluded_reason = j.at("excluded_reason").get<std::string>();
    r.q_primes = j.at("q_primes").get<std::vector<long>>();
    return r;
}

nlohmann::json to_json(const VvmfForm& f) {
    return json{{"weight", to_string(f.weight)},
                {"params", to_json(f.params)},
                {"comp1", to_json(f.comp1)},
                {"comp2", to_json(f.comp2)}};
}

VvmfForm vvmf_form_from_json(const json& j) {
    return VvmfForm{rat_from_string(j.at("weight").get<std::string>()),
                    qseries_from_json(j.at("comp1")),
                    qseries_from_json(j.at("comp2")),
                    repr_params_from_json(j.at("params"))};
}

nlohmann::json to_json(const Decomposition& d) {
    auto scalar = [](const ScalarModularForm& f) {
        json out{{"weight", f.weight}, {"series", to_json(f.series)}};
        if (f.polynomial) {
            json poly = json::array();
            for (const auto& m : *f.polynomial)
                poly.push_back(json{{"e4_power", m.i},
                                    {"e6_power", m.j},
                                    {"coeff", to_string(m.coeff)}});
            out["polynomial"] = poly;
        }
        return out;
    };
    return json{{"alpha", scalar(d.alpha)},
                {"beta", scalar(d.beta)},
                {"source_weight", to_string(d.source_weight)}};
}

std::string to_csv(const ValuationTable& t, const QSeries& f) {
    std::ostringstream out;
    out << "n,numerator,denominator,nu_actual,nu_predicted,match\n";
    for (const auto& e : t.entries) {
        const Rational& coeff = f.coeff(static_cast<int>(e.n));
        out << e.n << ',' << coeff.get_num().get_str() << ','
            << coeff.get_den().get_str() << ',';
        if (e.actual) out << *e.actual;
        out << ',';
        if (e.predicted) out << *e.predicted;
        out << ',' << (e.match() ? "true" : "false") << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const ValuationTable& t) {
    json entries = json::array();
    for (const auto& e : t.entries) {
        json row{{"n", e.n}, {"match", e.match()}};
        if (e.actual) row["nu_actual"] = *e.actual;
        if (e.predicted) row["nu_predicted"] = *e.predicted;
        entries.push_back(row);
    }
    return json{{"prime", t.prime},
                {"component", t.component},
                {"params", to_json(t.params)},
                {"entries", entries}};
}

nlohmann::json to_json(const UnboundedReport& r) {
    json stats = json::array();
    for (const auto& s : r.stats)
        stats.push_back(json{{"prime", s.prime},
                             {"min_valuation", s.min_valuation},
                             {"argmin", s.argmin},
                             {"min_at_horizon", s.min_at_horizon},
                             {"strictly_decreasing", s.strictly_decreasing}});
    return json{{"horizon", r.horizon},
                {"stats", stats},
                {"denominator_primes", r.denominator_primes}};
}

}  // namespace vvmf
