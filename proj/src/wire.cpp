#include "skewtilt/wire.hpp"

#include "skewtilt/errors.hpp"

#include <initializer_list>
#include <set>

namespace skewtilt::wire {

namespace {

void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + " must be a JSON object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items())
        if (!ok.count(key)) throw ParseError("unknown field '" + key + "' in " + what);
    for (const char* key : allowed)
        if (!j.contains(key)) throw ParseError("missing field '" + std::string(key) + "' in " + what);
}

long long get_int(const json& j, const char* key, const std::string& what) {
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError("field '" + std::string(key) + "' in " + what + " must be an integer");
    return v.get<long long>();
}

int get_small(const json& j, const char* key, const std::string& what) {
    long long v = get_int(j, key, what);
    if (v < -1000000 || v > 1000000) throw ParseError("field '" + std::string(key) + "' in " + what + " is out of range");
    return static_cast<int>(v);
}

Sign get_sign(const json& j, const char* key, const std::string& what) {
    const json& v = j.at(key);
    if (v == "+") return Sign::Plus;
    if (v == "-") return Sign::Minus;
    throw ParseError("field '" + std::string(key) + "' in " + what + " must be \"+\" or \"-\"");
}

std::string sign_text(Sign s) { return std::string(1, sign_char(s)); }

} // namespace

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

json to_json(const SkewCurve& g) {
    return std::visit(
        [](const auto& c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Half>)
                return {{"type", "half"}, {"cross", c.cross}, {"index", c.idx}, {"sign", sign_text(c.sign)}};
            else if constexpr (std::is_same_v<T, Pair>)
                return {{"type", "pair"}, {"i", c.i}, {"k", c.k}};
            else if constexpr (std::is_same_v<T, TorsPair>)
                return {{"type", "tors"}, {"res", c.res}, {"len", c.len}};
            else if constexpr (std::is_same_v<T, Star>)
                return {{"type", "star"}, {"e1", sign_text(c.e1)}, {"e2", sign_text(c.e2)}};
            else if constexpr (std::is_same_v<T, PwLoop>)
                return {{"type", "pwloop"}, {"lam", json::array({c.num, c.den})}, {"j", c.j}};
            else
                return {{"type", "sploop"}, {"lam", c.lam}, {"j", c.j}, {"sign", sign_text(c.sign)}};
        },
        g);
}

SkewCurve curve_from_json(const json& j, int n) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw ParseError("skew-curve must be an object with a string 'type'");
    std::string type = j.at("type").get<std::string>();
    if (type == "half") {
        only_fields(j, {"type", "cross", "index", "sign"}, "half");
        int cross = get_small(j, "cross", "half");
        if (cross != 1 && cross != 2) throw ParseError("field 'cross' in half must be 1 or 2");
        return make_half(cross, get_small(j, "index", "half"), get_sign(j, "sign", "half"));
    }
    if (type == "pair") {
        only_fields(j, {"type", "i", "k"}, "pair");
        return make_pair(get_small(j, "i", "pair"), get_small(j, "k", "pair"), n);
    }
    if (type == "tors") {
        only_fields(j, {"type", "res", "len"}, "tors");
        return make_torspair(get_small(j, "res", "tors"), get_small(j, "len", "tors"), n);
    }
    if (type == "star") {
        only_fields(j, {"type", "e1", "e2"}, "star");
        return Star{get_sign(j, "e1", "star"), get_sign(j, "e2", "star")};
    }
    if (type == "pwloop") {
        only_fields(j, {"type", "lam", "j"}, "pwloop");
        const json& lam = j.at("lam");
        if (!lam.is_array() || lam.size() != 2 || !lam[0].is_number_integer() || !lam[1].is_number_integer())
            throw ParseError("field 'lam' in pwloop must be [num, den]");
        return make_pwloop(lam[0].get<long long>(), lam[1].get<long long>(), get_small(j, "j", "pwloop"));
    }
    if (type == "sploop") {
        only_fields(j, {"type", "lam", "j", "sign"}, "sploop");
        return make_sploop(get_small(j, "lam", "sploop"), get_small(j, "j", "sploop"), get_sign(j, "sign", "sploop"));
    }
    throw ParseError("unknown skew-curve type '" + type + "'");
}

json to_json(const PseudoTri& t) {
    json arcs = json::array();
    for (const auto& g : t.arcs()) arcs.push_back(to_json(g));
    return {{"n", t.n()}, {"arcs", arcs}};
}

std::vector<SkewCurve> arcs_from_json(const json& j, int& n) {
    only_fields(j, {"n", "arcs"}, "pseudo-triangulation");
    n = get_small(j, "n", "pseudo-triangulation");
    if (n < 2) throw DomainError("weight n must be at least 2");
    if (!j.at("arcs").is_array()) throw ParseError("field 'arcs' must be an array");
    std::vector<SkewCurve> out;
    for (const auto& a : j.at("arcs")) out.push_back(canonicalize(curve_from_json(a, n), n));
    return out;
}

PseudoTri tri_from_json(const json& j) {
    int n = 0;
    auto arcs = arcs_from_json(j, n);
    return PseudoTri(n, arcs);
}

json to_json(const ValidationReport& r, size_t arc_count) {
    return {{"ok", r.ok}, {"arcs", arc_count}, {"violations", r.violations}};
}

json to_json(const FlipResult& r) {
    return {{"new_tri", to_json(r.new_tri)},
            {"removed", to_json(r.removed)},
            {"added", to_json(r.added)},
            {"case_label", r.label.to_string()}};
}

json to_json(const FlipStep& s) {
    return {{"removed", to_json(s.removed)}, {"added", to_json(s.added)}, {"case_label", s.label.to_string()}};
}

json to_json(const FlipSequence& steps) {
    json out = json::array();
    for (const auto& s : steps) out.push_back(to_json(s));
    return out;
}

} // namespace skewtilt::wire
