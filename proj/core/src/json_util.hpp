#pragma once
// Strict JSON readers shared by the scene and complex parsers.

#include "semialg/errors.hpp"
#include "semialg/geometry.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace semialg::jsonio {

using json = nlohmann::json;

inline json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + e.what());
    }
}

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::ParseError, "field '" + path + "': " + what);
}

inline const json& object(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, _] : j.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; });
        if (!known) fail(path.empty() ? key : path + "." + key, "unknown field");
    }
    return j;
}

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline double number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

inline bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
}

inline long long integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

inline const std::string& string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get_ref<const std::string&>();
}

inline const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

inline std::vector<double> numbers(const json& j, const std::string& path) {
    std::vector<double> out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(number(j[i], index(path, i)));
    return out;
}

inline Point point(const json& j, const std::string& path) {
    const std::vector<double> v = numbers(j, path);
    if (v.size() != 2) fail(path, "expected [x, y]");
    return {v[0], v[1]};
}

inline json to_json(Point p) { return json::array({p.x, p.y}); }

inline json to_json(const Box& b) { return {{"xmin", b.xmin}, {"xmax", b.xmax}, {"ymin", b.ymin}, {"ymax", b.ymax}}; }

inline Box box(const json& j, const std::string& path) {
    object(j, path, {"xmin", "xmax", "ymin", "ymax"});
    Box b;
    for (const char* k : {"xmin", "xmax", "ymin", "ymax"})
        if (!j.contains(k)) fail(join(path, k), "missing");
    b.xmin = number(j["xmin"], join(path, "xmin"));
    b.xmax = number(j["xmax"], join(path, "xmax"));
    b.ymin = number(j["ymin"], join(path, "ymin"));
    b.ymax = number(j["ymax"], join(path, "ymax"));
    return b;
}

inline json to_json(const RotatedGraph& g) { return {{"coeffs", g.poly.coeffs()}, {"theta", g.theta}}; }

inline RotatedGraph graph(const json& j, const std::string& path) {
    object(j, path, {"coeffs", "theta"});
    if (!j.contains("coeffs") || !j.contains("theta")) fail(path, "needs coeffs and theta");
    return {Polynomial(numbers(j["coeffs"], join(path, "coeffs"))), number(j["theta"], join(path, "theta"))};
}

}  // namespace semialg::jsonio
