#include "qforms/spec_io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

#include "qforms/parse.hpp"

namespace qforms {

nlohmann::json class_field_spec_to_json(const ClassFieldSpec& spec) {
    nlohmann::json j;
    j["label"] = spec.label();
    j["q"] = spec.field().q();
    j["d"] = spec.d().to_string();
    if (spec.is_quadratic_kummer()) {
        j["kind"] = "quadratic-kummer";
        j["m"] = spec.kummer().m.to_string();
        nlohmann::json rf = nlohmann::json::array();
        for (const auto& [p, s] : spec.kummer().ramified_frob)
            rf.push_back(nlohmann::json::array({p.to_string(), s}));
        j["ramified_frob"] = std::move(rf);
    } else {
        j["kind"] = "primitive-element";
        nlohmann::json mp = nlohmann::json::array();
        for (const Poly& c : spec.primitive().minpoly) mp.push_back(c.to_string());
        j["minpoly"] = std::move(mp);
        j["group_orders"] = spec.primitive().group_orders;
    }
    return j;
}

namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> keys) {
    for (const char* key : keys)
        if (!j.contains(key))
            throw std::invalid_argument(std::string("class field data missing \"") + key + "\"");
}

}  // namespace

ClassFieldSpec class_field_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("class field data must be a JSON object");
    require_keys(j, {"kind", "q", "d"});
    Fq F(j.at("q").get<std::int64_t>());
    Poly d = parse_poly(j.at("d").get<std::string>(), F);
    std::string kind = j.at("kind").get<std::string>();
    std::string label = j.value("label", std::string("custom"));
    if (kind == "quadratic-kummer") {
        require_keys(j, {"m", "ramified_frob"});
        QuadraticKummer k{parse_poly(j.at("m").get<std::string>(), F), {}};
        for (const auto& entry : j.at("ramified_frob")) {
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument("ramified_frob entries must be [prime, sign] pairs");
            k.ramified_frob.emplace_back(parse_poly(entry.at(0).get<std::string>(), F),
                                         entry.at(1).get<int>());
        }
        return ClassFieldSpec(F, std::move(d), std::move(k), std::move(label));
    }
    if (kind == "primitive-element") {
        require_keys(j, {"minpoly", "group_orders"});
        PrimitiveElement pe;
        for (const auto& entry : j.at("minpoly"))
            pe.minpoly.push_back(parse_poly(entry.get<std::string>(), F));
        pe.group_orders = j.at("group_orders").get<std::vector<int>>();
        return ClassFieldSpec(F, std::move(d), std::move(pe), std::move(label));
    }
    throw std::invalid_argument("unknown class field kind: " + kind);
}

ClassFieldSpec load_class_field_spec(const std::string& ref) {
    if (ref == "f3-example") return ClassFieldSpec::f3_example();
    std::size_t i = ref.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && ref[i] == '{')
        return class_field_spec_from_json(nlohmann::json::parse(ref));
    std::ifstream in(ref);
    if (!in) throw std::invalid_argument("cannot open class field file: " + ref);
    return class_field_spec_from_json(nlohmann::json::parse(in));
}

}  // namespace qforms
