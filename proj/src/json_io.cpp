#include "fairdiv/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Json value_to_json(const Value& v) {
    if (denominator(v) == 1) {
        const Integer& num = numerator(v);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(num);
    }
    return value_to_string(v);
}

Value value_from_json(const Json& j) {
    if (j.is_number_integer()) return Value(j.get<std::int64_t>());
    if (j.is_string()) {
        auto v = parse_value(j.get<std::string>());
        if (!v) throw ValidationError("malformed rational value: " + j.get<std::string>());
        return *v;
    }
    throw ValidationError("values must be integers or \"p/q\" strings, got: " + j.dump());
}

namespace {

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string("missing required key \"") + key + "\"");
    return *it;
}

} // namespace

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("instance document must be a JSON object");
    Instance inst;
    inst.agents = require(j, "agents").get<int>();
    inst.items = require(j, "items").get<int>();

    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "goods") inst.kind = Kind::Goods;
    else if (kind == "chores") inst.kind = Kind::Chores;
    else throw ValidationError("kind must be \"goods\" or \"chores\", got \"" + kind + "\"");

    const Json& vals = require(j, "valuations");
    if (vals.contains("additive")) {
        const Json& rows = vals["additive"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != inst.agents)
            throw ValidationError("\"additive\" must hold one row per agent");
        for (const Json& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != inst.items)
                throw ValidationError("additive row length must equal the item count");
            std::vector<Value> v;
            v.reserve(row.size());
            for (const Json& x : row) v.push_back(value_from_json(x));
            inst.valuations.emplace_back(AdditiveValuation(std::move(v)));
        }
    } else if (vals.contains("tables")) {
        const Json& tables = vals["tables"];
        if (!tables.is_array() || static_cast<int>(tables.size()) != inst.agents)
            throw ValidationError("\"tables\" must hold one table per agent");
        for (const Json& t : tables) {
            if (!t.is_array())
                throw ValidationError("each table must be an array of 2^m values");
            std::vector<Value> entries;
            entries.reserve(t.size());
            for (const Json& x : t) entries.push_back(value_from_json(x));
            inst.valuations.emplace_back(TableValuation(inst.items, std::move(entries)));
        }
    } else {
        throw ValidationError("valuations must contain \"additive\" or \"tables\"");
    }

    inst.validate();
    return inst;
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["agents"] = inst.agents;
    j["items"] = inst.items;
    j["kind"] = kind_name(inst.kind);
    if (!inst.valuations.empty() && inst.valuations[0].is_additive()) {
        Json rows = Json::array();
        for (const Valuation& v : inst.valuations) {
            Json row = Json::array();
            for (const Value& x : v.additive().item_values()) row.push_back(value_to_json(x));
            rows.push_back(std::move(row));
        }
        j["valuations"] = Json{{"additive", std::move(rows)}};
    } else {
        Json tables = Json::array();
        for (const Valuation& v : inst.valuations) {
            Json t = Json::array();
            for (const Value& x : v.table().table()) t.push_back(value_to_json(x));
            tables.push_back(std::move(t));
        }
        j["valuations"] = Json{{"tables", std::move(tables)}};
    }
    return j;
}

Allocation allocation_from_json(const Json& j, int agents, int items) {
    const Json* bundles = nullptr;
    if (j.is_array()) bundles = &j;
    else if (j.is_object() && j.contains("bundles")) bundles = &j["bundles"];
    else if (j.is_object() && j.contains("allocation"))
        return allocation_from_json(j["allocation"], agents, items);
    if (!bundles)
        throw ValidationError("allocation document must be a bundle array or carry \"bundles\"");
    if (static_cast<int>(bundles->size()) != agents)
        throw ValidationError("allocation must hold exactly one bundle per agent");

    Allocation x;
    x.bundles.assign(agents, kEmptySet);
    for (int i = 0; i < agents; ++i) {
        const Json& b = (*bundles)[i];
        if (!b.is_array()) throw ValidationError("each bundle must be an array of item indices");
        for (const Json& g : b) {
            int item = g.get<int>();
            if (item < 1 || item > items)
                throw ValidationError("item index " + std::to_string(item) +
                                      " out of range [1, " + std::to_string(items) + "]");
            x.bundles[i] |= single(item - 1);
        }
    }
    x.validate(items);
    return x;
}

Json allocation_to_json(const Allocation& x) {
    Json bundles = Json::array();
    for (ItemSet b : x.bundles) {
        Json items = Json::array();
        for (int g : items_of(b)) items.push_back(g + 1);
        bundles.push_back(std::move(items));
    }
    return Json{{"bundles", std::move(bundles)}};
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["agent"] = c.agent + 1;
    j["witness"] = allocation_to_json(c.witness);
    return j;
}

Json fairness_report_to_json(const FairnessReport& rep) {
    Json j;
    Json agents = Json::array();
    for (const AgentReport& a : rep.per_agent) {
        Json aj;
        aj["efx_satisfied"] = a.efx;
        aj["ef1_satisfied"] = a.ef1;
        if (a.prop1) aj["prop1"] = *a.prop1;
        if (a.propm) aj["propm"] = *a.propm;
        if (a.propx) aj["propx"] = *a.propx;
        if (a.mms) aj["mms_value"] = value_to_json(*a.mms);
        if (a.bundle_value) aj["bundle_value"] = value_to_json(*a.bundle_value);
        if (a.mms_ratio) aj["mms_ratio"] = value_to_json(*a.mms_ratio);
        else if (a.mms) aj["mms_ratio"] = nullptr; // undefined: maximin share is 0
        agents.push_back(std::move(aj));
    }
    j["per_agent"] = std::move(agents);
    j["is_efx"] = rep.efx;
    j["is_ef1"] = rep.ef1;
    if (rep.alpha_correlation) j["alpha_correlation"] = value_to_json(*rep.alpha_correlation);
    return j;
}

Json solve_result_to_json(const SolveResult& res, const FairnessReport* report) {
    Json j;
    j["allocation"] = allocation_to_json(res.allocation);
    j["stage1"] = allocation_to_json(res.stage1);
    Json vec = Json::array();
    for (int owner : res.vector.owners) vec.push_back(owner + 1);
    j["allocation_vector"] = std::move(vec);
    if (!res.certificates.empty()) {
        Json certs = Json::array();
        for (const Certificate& c : res.certificates) certs.push_back(certificate_to_json(c));
        j["certificates"] = std::move(certs);
    }
    if (report) j["report"] = fairness_report_to_json(*report);
    return j;
}

std::optional<Allocation> stage1_from_json(const Json& j, int agents, int items) {
    if (!j.is_object() || !j.contains("stage1")) return std::nullopt;
    return allocation_from_json(j["stage1"], agents, items);
}

Json read_json_file(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open file: " + path);
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

} // namespace fairdiv
