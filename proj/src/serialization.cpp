#include "sliceapprox/serialization.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace slice {

using nlohmann::json;

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

namespace {

json quat_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("quaternion must be a 4-tuple of reals");
    return Quaternion(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                      j[3].get<double>());
}

json quat_list(const std::vector<Quaternion>& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(quat_to_json(q));
    return arr;
}

std::vector<Quaternion> quat_list_from(const json& j) {
    std::vector<Quaternion> v;
    for (const auto& item : j) v.push_back(quat_from_json(item));
    return v;
}

}  // namespace

std::string to_json(const RightPolynomial& p) {
    json j{{"type", "polynomial"}, {"coefficients", quat_list(p.coefficients())}};
    return j.dump();
}

std::string to_json(const PowerSeries& s, std::optional<double> lipschitz) {
    json j{{"type", "power-series"},
           {"radius", s.radius()},
           {"coefficients", quat_list(s.coefficients())}};
    if (lipschitz) j["lipschitz"] = *lipschitz;
    return j.dump();
}

std::string to_json(const CassiniSeries& s, std::optional<double> lipschitz) {
    json pairs = json::array();
    for (const auto& [even, odd] : s.pairs())
        pairs.push_back(json::array({quat_to_json(even), quat_to_json(odd)}));
    json j{{"type", "cassini-series"}, {"x0", s.x0()}, {"y0", s.y0()}, {"pairs", pairs}};
    if (lipschitz) j["lipschitz"] = *lipschitz;
    return j.dump();
}

std::string to_json(const LaurentPolynomial& l) {
    json j{{"type", "laurent"},
           {"negative", quat_list(l.negative_coefficients())},
           {"nonnegative", quat_list(l.nonnegative_coefficients())}};
    return j.dump();
}

StoredFunction parse_function_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("function json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("function json: missing type tag");
    const std::string type = j["type"].get<std::string>();

    std::optional<double> lipschitz;
    if (j.contains("lipschitz")) lipschitz = j["lipschitz"].get<double>();

    try {
        if (type == "polynomial") {
            return {SliceFunction(RightPolynomial(quat_list_from(j.at("coefficients")))),
                    lipschitz, type};
        }
        if (type == "power-series") {
            return {SliceFunction(PowerSeries(quat_list_from(j.at("coefficients")),
                                              j.at("radius").get<double>())),
                    lipschitz, type};
        }
        if (type == "cassini-series") {
            std::vector<std::pair<Quaternion, Quaternion>> pairs;
            for (const auto& item : j.at("pairs"))
                pairs.emplace_back(quat_from_json(item.at(0)), quat_from_json(item.at(1)));
            return {SliceFunction(CassiniSeries(j.at("x0").get<double>(),
                                                j.at("y0").get<double>(), std::move(pairs))),
                    lipschitz, type};
        }
        if (type == "laurent") {
            return {SliceFunction(LaurentPolynomial(quat_list_from(j.at("negative")),
                                                    quat_list_from(j.at("nonnegative")))),
                    lipschitz, type};
        }
        if (type == "sphere-trig") {
            auto cosc = quat_list_from(j.at("cos"));
            auto sinc = quat_list_from(j.at("sin"));
            AlphaBetaFunction fn;
            fn.fn = [cosc, sinc](double x, double y) {
                const double theta = std::atan2(y, x);
                Quaternion alpha{}, beta{};
                for (std::size_t k = 0; k < cosc.size(); ++k)
                    alpha += cosc[k] * std::cos(k * theta);
                for (std::size_t k = 0; k < sinc.size(); ++k)
                    beta += sinc[k] * std::sin(k * theta);
                return std::make_pair(alpha, beta);
            };
            return {SliceFunction(std::move(fn)), lipschitz, type};
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("function json: ") + e.what());
    }
    throw std::invalid_argument("function json: unknown type '" + type + "'");
}

StoredFunction load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open function file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_function_json(buf.str());
}

}  // namespace slice
