#include "kstab/descriptor.hpp"

#include <fstream>
#include <sstream>

#include "kstab/errors.hpp"
#include "kstab/toml_lite.hpp"

namespace kstab {

namespace {

Rational rational_field(const Json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("descriptor: " + what + " must be a rational string or an integer");
}

P1Point point_field(const Json& j) {
    if (j.is_number_integer()) return P1Point::finite(Rational(j.get<std::int64_t>()));
    if (!j.is_string()) throw ParseError("descriptor: point must be a string or an integer");
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "oo") return P1Point::infinity();
    return P1Point::finite(parse_rational(s));
}

P1Pair p1_from_json(const Json& j) {
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("descriptor: p1 pair needs a 'points' array");
    std::vector<MarkedPoint> points;
    for (const auto& p : j["points"]) {
        if (!p.is_object() || !p.contains("at") || !p.contains("c"))
            throw ParseError("descriptor: each p1 point needs 'at' and 'c'");
        points.push_back({point_field(p["at"]), rational_field(p["c"], "coefficient")});
    }
    return P1Pair(std::move(points));
}

FanPair toric_from_json(const Json& j) {
    if (!j.contains("rays") || !j["rays"].is_array() || !j.contains("cones") ||
        !j["cones"].is_array())
        throw ParseError("descriptor: toric pair needs 'rays' and 'cones' arrays");
    std::vector<LatticeVector> rays;
    for (const auto& r : j["rays"]) {
        if (!r.is_array()) throw ParseError("descriptor: each ray must be an integer array");
        LatticeVector ray;
        for (const auto& x : r) {
            if (!x.is_number_integer()) throw ParseError("descriptor: ray entries must be integers");
            ray.push_back(x.get<std::int64_t>());
        }
        rays.push_back(std::move(ray));
    }
    std::vector<std::vector<int>> cones;
    for (const auto& c : j["cones"]) {
        if (!c.is_array()) throw ParseError("descriptor: each cone must be an index array");
        std::vector<int> cone;
        for (const auto& x : c) {
            if (!x.is_number_integer()) throw ParseError("descriptor: cone entries must be integers");
            cone.push_back(x.get<int>());
        }
        cones.push_back(std::move(cone));
    }
    std::vector<Rational> coeffs(rays.size(), Rational{0});
    if (j.contains("coefficients")) {
        if (!j["coefficients"].is_array() || j["coefficients"].size() != rays.size())
            throw ParseError("descriptor: 'coefficients' must list one value per ray");
        coeffs.clear();
        for (const auto& c : j["coefficients"]) coeffs.push_back(rational_field(c, "coefficient"));
    }
    return FanPair(std::move(rays), std::move(cones), std::move(coeffs));
}

PlaneDivisorCase plane_from_json(const Json& j) {
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw ParseError("descriptor: plane-divisor pair needs an integer 'd'");
    return PlaneDivisorCase(j["d"].get<int>());
}

WeightedBlowupDescriptor wb_from_json(const Json& j) {
    if (!j.contains("a") || !j["a"].is_number_integer() || !j.contains("b") ||
        !j["b"].is_number_integer())
        throw ParseError("descriptor: weighted-blowup pair needs integer 'a' and 'b'");
    std::optional<Rational> tau;
    if (j.contains("tau")) tau = rational_field(j["tau"], "tau");
    return WeightedBlowupDescriptor(j["a"].get<long long>(), j["b"].get<long long>(), tau);
}

}  // namespace

PairDescriptor descriptor_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("descriptor: top level must be a table/object");
    if (!j.contains("type") || !j["type"].is_string())
        throw ParseError("descriptor: missing 'type' (p1 | toric | plane-divisor | weighted-blowup)");
    std::string label;
    std::string notes;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("descriptor: 'label' must be a string");
        label = j["label"].get<std::string>();
    }
    if (j.contains("notes")) {
        if (!j["notes"].is_string()) throw ParseError("descriptor: 'notes' must be a string");
        notes = j["notes"].get<std::string>();
    }
    const std::string type = j["type"].get<std::string>();
    auto parse_pair = [&]() -> decltype(PairDescriptor::pair) {
        if (type == "p1") return p1_from_json(j);
        if (type == "toric") return toric_from_json(j);
        if (type == "plane-divisor") return plane_from_json(j);
        if (type == "weighted-blowup") return wb_from_json(j);
        throw ParseError("descriptor: unknown type '" + type + "'");
    };
    return PairDescriptor{std::move(label), std::move(notes), parse_pair()};
}

PairDescriptor parse_descriptor_text(std::string_view text) {
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    Json j;
    if (k < text.size() && text[k] == '{') {
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("descriptor: bad json: ") + e.what());
        }
    } else {
        j = toml_to_json(text);
    }
    return descriptor_from_json(j);
}

PairDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("descriptor: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_descriptor_text(buf.str());
}

Json descriptor_to_json(const PairDescriptor& d) {
    Json j;
    if (!d.label.empty()) j["label"] = d.label;
    if (!d.notes.empty()) j["notes"] = d.notes;
    if (const auto* p1 = std::get_if<P1Pair>(&d.pair)) {
        j["type"] = "p1";
        Json pts = Json::array();
        for (const auto& mp : p1->marked_points()) {
            Json p;
            p["at"] = mp.at.str();
            p["c"] = to_string(mp.coefficient);
            pts.push_back(p);
        }
        j["points"] = pts;
    } else if (const auto* fan = std::get_if<FanPair>(&d.pair)) {
        j["type"] = "toric";
        j["rays"] = fan->rays();
        j["cones"] = fan->cones();
        Json cs = Json::array();
        for (const auto& c : fan->coefficients()) cs.push_back(to_string(c));
        j["coefficients"] = cs;
    } else if (const auto* pd = std::get_if<PlaneDivisorCase>(&d.pair)) {
        j["type"] = "plane-divisor";
        j["d"] = pd->d;
    } else if (const auto* wb = std::get_if<WeightedBlowupDescriptor>(&d.pair)) {
        j["type"] = "weighted-blowup";
        j["a"] = wb->a;
        j["b"] = wb->b;
        if (wb->tau) j["tau"] = to_string(*wb->tau);
    }
    return j;
}

}  // namespace kstab
