#ifndef FANSHIFT_REPORT_HPP
#define FANSHIFT_REPORT_HPP

// JSON reports for verification runs and their schema (version v1).

#include <string>
#include <vector>

#include <json.hpp>

#include "fanshift/itinerary.hpp"
#include "fanshift/mahavier.hpp"
#include "fanshift/quotients.hpp"
#include "fanshift/xspace.hpp"

namespace fanshift {

using json = nlohmann::json;

inline constexpr const char* schema_version = "v1";

inline const std::vector<std::string>& verify_names() {
    static const std::vector<std::string> names{"decomposition", "diam",   "cantor",      "impression", "hlavna",
                                                "quotient",      "juma",   "distinguish", "orbit"};
    return names;
}

struct Report {
    std::string name;
    json params = json::object();
    bool pass = false;
    json witnesses = json::array();
    json timings = json::object();

    json to_json() const {
        return json{{"schema_version", schema_version}, {"name", name},       {"params", params},
                    {"pass", pass},                     {"witnesses", witnesses}, {"timings", timings}};
    }

    std::string dump() const { return to_json().dump(2) + "\n"; }

    void witness(json w) { witnesses.push_back(std::move(w)); }
};

inline json to_json(const XPoint& x) {
    if (x.is_infinite()) return json{{"k", nullptr}, {"u", nullptr}};
    return json{{"k", x.index()}, {"u", x.local()}};
}

inline json to_json(const Word& w) {
    json letters = json::array();
    for (const auto& l : w.letters) letters.push_back({l.ell(), l.j()});
    return letters;
}

// {word: [[ell, j], ...], offset, t0: {k, u}}; the point at infinity has a null word.
inline json to_json(const MPoint& p) {
    if (p.is_all_infinity()) return json{{"word", nullptr}, {"offset", 0}, {"t0", to_json(XPoint::infinity())}};
    const Word w = p.word();
    return json{{"word", to_json(w)}, {"offset", w.offset}, {"t0", to_json(p.t0())}};
}

inline json to_json(const FanModel& fan) {
    json legs = json::array();
    for (const auto& l : fan.legs) {
        legs.push_back({{"bundle", l.bundle}, {"address", l.address.to_string()}, {"length", l.length}});
    }
    json gluings = json::array();
    for (const auto& g : fan.gluings) gluings.push_back({{"host", g.host}, {"guest", g.guest}});
    return json{{"top", fan.top}, {"legs", legs}, {"gluings", gluings}};
}

inline json report_schema() {
    json names = json::array();
    for (const auto& n : verify_names()) names.push_back(n);
    return json{
        {"$schema", "https://json-schema.org/draft/2020-12/schema"},
        {"$id", "fanshift-report-v1"},
        {"title", "fanshift verification report"},
        {"schema_version", schema_version},
        {"type", "object"},
        {"required", {"schema_version", "name", "params", "pass", "witnesses", "timings"}},
        {"additionalProperties", false},
        {"properties",
         {{"schema_version", {{"type", "string"}, {"const", schema_version}}},
          {"name", {{"type", "string"}, {"enum", names}}},
          {"params", {{"type", "object"}}},
          {"pass", {{"type", "boolean"}}},
          {"witnesses",
           {{"type", "array"},
            {"items", {{"type", "object"}, {"required", {"kind"}}, {"properties", {{"kind", {{"type", "string"}}}}}}}}},
          {"timings", {{"type", "object"}, {"additionalProperties", {{"type", "number"}, {"minimum", 0}}}}}}}};
}

}  // namespace fanshift

#endif
