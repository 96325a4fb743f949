#include "riskfront/scenario_io.hpp"
#include "riskfront/errors.hpp"

#include <fstream>
#include <set>
#include <string>

namespace riskfront {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

double number(const json& v, const std::string& what)
{
    if (!v.is_number()) {
        throw ConfigError(what + " must be a number");
    }
    return v.get<double>();
}

StructuralProfile parse_profile(const json& v, const std::string& where)
{
    if (!v.is_array()) {
        throw ConfigError(where + ".profile must be an array of [threshold, alpha, beta]");
    }
    std::vector<Breakpoint> bps;
    for (const auto& row : v) {
        if (!row.is_array() || row.size() != 3) {
            throw ConfigError(where + ".profile rows must have exactly three numbers");
        }
        bps.push_back({number(row[0], where + " threshold"), number(row[1], where + " alpha"),
                       number(row[2], where + " beta")});
    }
    return StructuralProfile(std::move(bps));
}

} // namespace

Scenario scenario_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw ConfigError("scenario document must be a JSON object");
    }
    reject_unknown_keys(doc,
                        {"suppliers", "demand", "retailer_coefficient", "weights", "period_of_interest",
                         "mean_demand_rate"},
                        "scenario");
    if (!doc.contains("suppliers") || !doc["suppliers"].is_array()) {
        throw ConfigError("scenario needs a 'suppliers' array");
    }

    Scenario scen;
    std::size_t idx = 0;
    for (const auto& s : doc["suppliers"]) {
        const std::string where = "suppliers[" + std::to_string(idx++) + "]";
        if (!s.is_object()) {
            throw ConfigError(where + " must be an object");
        }
        reject_unknown_keys(s, {"unit_cost", "profile"}, where);
        if (!s.contains("unit_cost")) {
            throw ConfigError(where + " needs unit_cost");
        }
        SupplierSpec spec;
        spec.unit_cost = number(s["unit_cost"], where + ".unit_cost");
        if (s.contains("profile")) {
            spec.profile = parse_profile(s["profile"], where);
        }
        scen.suppliers.push_back(std::move(spec));
    }

    if (doc.contains("demand")) {
        const auto& d = doc["demand"];
        if (!d.is_number_integer()) {
            throw ConfigError("demand must be an integer");
        }
        scen.demand = d.get<Units>();
    }
    if (doc.contains("retailer_coefficient")) {
        scen.retailer_coefficient = number(doc["retailer_coefficient"], "retailer_coefficient");
    }
    if (doc.contains("period_of_interest")) {
        scen.period_of_interest = number(doc["period_of_interest"], "period_of_interest");
    }
    scen.mean_demand_rate.assign(scen.suppliers.size(), 1.0);
    if (doc.contains("mean_demand_rate")) {
        const auto& mu = doc["mean_demand_rate"];
        if (mu.is_array()) {
            scen.mean_demand_rate.clear();
            for (const auto& v : mu) {
                scen.mean_demand_rate.push_back(number(v, "mean_demand_rate entry"));
            }
        } else {
            scen.mean_demand_rate.assign(scen.suppliers.size(), number(mu, "mean_demand_rate"));
        }
    }
    if (doc.contains("weights")) {
        const auto& w = doc["weights"];
        if (!w.is_array() || w.size() != 2) {
            throw ConfigError("weights must be a two-element array [W1, W2]");
        }
        scen.weights = {number(w[0], "weights[0]"), number(w[1], "weights[1]")};
    }
    scen.validate();
    return scen;
}

json scenario_to_json(const Scenario& scen)
{
    json suppliers = json::array();
    for (const auto& s : scen.suppliers) {
        json profile = json::array();
        for (const auto& b : s.profile.breakpoints()) {
            profile.push_back({b.threshold, b.alpha, b.beta});
        }
        suppliers.push_back({{"unit_cost", s.unit_cost}, {"profile", std::move(profile)}});
    }
    return {
        {"suppliers", std::move(suppliers)},
        {"demand", scen.demand},
        {"retailer_coefficient", scen.retailer_coefficient},
        {"weights", {scen.weights.cost, scen.weights.risk}},
        {"period_of_interest", scen.period_of_interest},
        {"mean_demand_rate", scen.mean_demand_rate},
    };
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open scenario file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario file " + path.string() + " is not valid JSON: " + e.what());
    }
    return scenario_from_json(doc);
}

} // namespace riskfront
