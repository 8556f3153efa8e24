#include "bdc/config.hpp"

#include <fstream>
#include <sstream>

namespace bdc {

namespace {

using nlohmann::json;

BDTriple parse_triple(int n, const json& j) {
    if (j.is_null()) return empty_triple(n);
    if (!j.is_object()) throw InvalidInput("config: triple must be an object");
    std::vector<int> g1 = j.value("gamma1", std::vector<int>{}), g2 = j.value("gamma2", std::vector<int>{});
    std::map<int, int> map;
    if (j.contains("map")) {
        const json& m = j["map"];
        if (!m.is_object()) throw InvalidInput("config: map must be an object");
        for (auto it = m.begin(); it != m.end(); ++it) {
            int key = 0;
            try {
                key = std::stoi(it.key());
            } catch (const std::exception&) {
                throw InvalidInput("config: map key '" + it.key() + "' is not an integer");
            }
            if (!it.value().is_number_integer()) throw InvalidInput("config: map values must be integers");
            map[key] = it.value().get<int>();
        }
    }
    return validate(n, g1, g2, map);
}

json triple_json(const BDTriple& t) {
    json map = json::object();
    for (auto [a, b] : t.map()) map[std::to_string(a)] = b;
    return {{"gamma1", t.gamma1()}, {"gamma2", t.gamma2()}, {"map", map}};
}

std::vector<Rat> parse_coeffs(const json& j) {
    std::vector<Rat> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw InvalidInput("config: cartan coefficients must be an array");
    for (const json& x : j) {
        if (x.is_number_integer()) out.push_back(Rat(x.get<long>()));
        else if (x.is_string()) out.push_back(Rat::parse(x.get<std::string>()));
        else throw InvalidInput("config: cartan coefficient must be an integer or a string p/q");
    }
    return out;
}

}  // namespace

Config parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("config: ") + e.what());
    }
    if (j.is_object() && j.contains("config")) j = j["config"];
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw InvalidInput("config: expected an object with integer field n");
    Config c;
    const int n = j["n"].get<int>();
    if (n < 2) throw InvalidInput("config: n must be at least 2");
    try {
        c.pair = make_pair(parse_triple(n, j.value("rows", json())), parse_triple(n, j.value("cols", json())));
        const std::string g = j.value("group", std::string("SL"));
        if (g == "SL") c.group = Group::SL;
        else if (g == "GL") c.group = Group::GL;
        else throw InvalidInput("config: group must be SL or GL");
        if (j.contains("cartan")) {
            c.rows_cartan = parse_coeffs(j["cartan"].value("rows", json()));
            c.cols_cartan = parse_coeffs(j["cartan"].value("cols", json()));
        }
        if (j.contains("sample")) {
            const json& s = j["sample"];
            c.plan.master_seed = s.value("seed", c.plan.master_seed);
            c.plan.trials = s.value("trials", c.plan.trials);
            c.plan.bound = s.value("bound", c.plan.bound);
            c.plan.resample_limit = s.value("resample_limit", c.plan.resample_limit);
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("config: ") + e.what());
    }
    if (c.plan.trials < 1 || c.plan.bound < 1) throw InvalidInput("config: trials and bound must be positive");
    // Reject bad overrides early.
    cartan_for(c.pair.rows, c.rows_cartan);
    cartan_for(c.pair.cols, c.cols_cartan);
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

json config_to_json(const Config& c) {
    json j = {{"n", c.pair.n()},
              {"group", c.group == Group::SL ? "SL" : "GL"},
              {"rows", triple_json(c.pair.rows)},
              {"cols", triple_json(c.pair.cols)},
              {"sample",
               {{"seed", c.plan.master_seed},
                {"trials", c.plan.trials},
                {"bound", c.plan.bound},
                {"resample_limit", c.plan.resample_limit}}}};
    if (!c.rows_cartan.empty() || !c.cols_cartan.empty()) {
        json r = json::array(), k = json::array();
        for (const Rat& x : c.rows_cartan) r.push_back(x.str());
        for (const Rat& x : c.cols_cartan) k.push_back(x.str());
        j["cartan"] = {{"rows", r}, {"cols", k}};
    }
    return j;
}

CartanOp cartan_for(const BDTriple& t, const std::vector<Rat>& coeffs) {
    CartanOp c = solve_cartan(t);
    if (coeffs.empty()) return c;
    if (coeffs.size() != c.nullspace.size())
        throw InvalidInput("config: expected " + std::to_string(c.nullspace.size()) + " cartan coefficients, got " +
                           std::to_string(coeffs.size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) c.s += c.nullspace[k] * coeffs[k];
    return c;
}

BracketSpec bracket_for(const Config& c, BracketKind kind, SlotOrder order) {
    return build_bracket(c.pair, cartan_for(c.pair.rows, c.rows_cartan), cartan_for(c.pair.cols, c.cols_cartan), kind,
                         order);
}

}  // namespace bdc
