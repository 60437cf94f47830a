#include "bprimes/serialize.hpp"

#include <stdexcept>

namespace bprimes {

nlohmann::json to_json(const DensityRecord& record) {
    nlohmann::json members = nlohmann::json::array();
    for (std::int64_t u : record.bounded.members()) members.push_back(u);
    return {{"a", record.params.a().to_string()},
            {"b", record.params.b().to_string()},
            {"c", record.params.c().to_string()},
            {"m", record.modulus.m},
            {"B", members},
            {"phi", record.modulus.phi},
            {"density", record.density.to_string()}};
}

DensityRecord density_record_from_json(const nlohmann::json& doc) {
    HGParams params = HGParams::make(Rational::parse(doc.at("a").get<std::string>()),
                                     Rational::parse(doc.at("b").get<std::string>()),
                                     Rational::parse(doc.at("c").get<std::string>()));
    const Modulus mod = Modulus::of(params);
    if (doc.at("m").get<std::int64_t>() != mod.m || doc.at("phi").get<std::int64_t>() != mod.phi) {
        throw std::invalid_argument("record modulus does not match its parameters");
    }
    ResidueSet bounded(mod.m, doc.at("B").get<std::vector<std::int64_t>>());
    Rational d = Rational::parse(doc.at("density").get<std::string>());
    if (d != Rational(static_cast<std::int64_t>(bounded.size()), mod.phi)) {
        throw std::invalid_argument("record density is not |B|/phi");
    }
    return {std::move(params), mod, std::move(bounded), std::move(d)};
}

nlohmann::json to_json(const ModpSet& set) {
    nlohmann::json out = nlohmann::json::array();
    for (std::int64_t y : set.members()) out.push_back(y);
    return out;
}

nlohmann::json to_json(const ClassNumber& h) { return {{"p", h.p}, {"h", h.h}}; }

nlohmann::json to_json(const DigitExpansion& expansion) {
    return {{"prime", expansion.prime},
            {"value", expansion.value.to_string()},
            {"period", expansion.period},
            {"digits", expansion.digits}};
}

nlohmann::json to_json(const BoundednessVerdict& verdict) {
    nlohmann::json out = {{"verdict", verdict.bounded() ? "BOUNDED" : "UNBOUNDED"}};
    if (const auto* w = std::get_if<DigitWitness>(&verdict.witness)) {
        out["witness"] = {{"j", w->index}};
    } else if (const auto* v = std::get_if<ValuationWitness>(&verdict.witness)) {
        out["witness"] = {{"n", v->n}, {"valuation", v->valuation}};
    }
    return out;
}

nlohmann::json to_json(const BShape& shape) {
    return {{"shape", shape.name()}, {"density", shape.density.to_string()}};
}

}  // namespace bprimes
