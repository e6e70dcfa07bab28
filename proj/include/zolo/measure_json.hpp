#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "zolo/errors.hpp"
#include "zolo/measure.hpp"

// JSON form of a MeasureSpec:
//   {"kind": "uniform_on", "a": -1, "b": 1}
//   {"kind": "discrete", "nodes": [...], "weights": [...]}
//   {"kind": "moments", "h": [...]}

namespace zolo {

inline MeasureSpec parse_measure_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw measure_error(std::string("measure config is not valid JSON: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "uniform_on" || kind == "uniform") {
        if (!j.contains("a") || !j.contains("b"))
            throw measure_error("uniform measure needs fields a, b");
        return MeasureSpec::uniform(j["a"].get<double>(), j["b"].get<double>());
    }
    if (kind == "discrete") {
        if (!j.contains("nodes") || !j.contains("weights"))
            throw measure_error("discrete measure needs fields nodes, weights");
        return MeasureSpec::discrete(j["nodes"].get<std::vector<double>>(),
                                     j["weights"].get<std::vector<double>>());
    }
    if (kind == "moments") {
        if (!j.contains("h")) throw measure_error("moments measure needs field h");
        return MeasureSpec::moments(j["h"].get<std::vector<double>>());
    }
    throw measure_error("unknown measure kind: '" + kind + "'");
}

inline MeasureSpec load_measure_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw measure_error("cannot open measure config: " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return parse_measure_json(text);
}

inline nlohmann::json measure_to_json(const MeasureSpec& m) {
    nlohmann::json j;
    switch (m.kind) {
        case MeasureSpec::Kind::uniform_on:
            j["kind"] = "uniform_on";
            j["a"] = m.a;
            j["b"] = m.b;
            break;
        case MeasureSpec::Kind::discrete:
            j["kind"] = "discrete";
            j["nodes"] = m.nodes;
            j["weights"] = m.weights;
            break;
        case MeasureSpec::Kind::moments:
            j["kind"] = "moments";
            j["h"] = m.h;
            break;
    }
    return j;
}

} // namespace zolo
