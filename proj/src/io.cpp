#include "su12/io.hpp"

#include "su12/errors.hpp"

#include <algorithm>
#include <cctype>

namespace su12::io {

Json to_json(const TruncatedSeries& s)
{
    Json out = Json::array();
    for (const auto& c : s.coefficients()) {
        out.push_back(c.to_string());
    }
    return out;
}

TruncatedSeries series_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) {
        throw ParseError("series must be a nonempty array of scalar strings");
    }
    std::vector<Scalar> coeffs;
    for (const auto& c : j) {
        if (!c.is_string()) {
            throw ParseError("series coefficients must be strings");
        }
        coeffs.push_back(Scalar::parse(c.get<std::string>()));
    }
    const std::size_t order = coeffs.size();
    return TruncatedSeries(std::move(coeffs), order);
}

Json to_json(const Mat2& m)
{
    return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const FiberPoint& x)
{
    switch (x.kind()) {
    case FiberPoint::Kind::Zero: return "zero";
    case FiberPoint::Kind::Infinity: return "inf";
    case FiberPoint::Kind::Finite: break;
    }
    return Json{{"t", x.coordinate().to_string()}};
}

FiberPoint fiber_point_from_json(const Json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "zero") {
            return FiberPoint::zero();
        }
        if (s == "inf") {
            return FiberPoint::infinity();
        }
        throw ParseError("unknown fiber point \"" + s + "\"");
    }
    if (j.is_object() && j.size() == 1 && j.contains("t") && j["t"].is_string()) {
        const Scalar t = Scalar::parse(j["t"].get<std::string>());
        if (t.is_zero()) {
            throw ParseError("finite fiber point with t = 0; use \"zero\"");
        }
        return FiberPoint::finite(t);
    }
    throw ParseError("fiber point must be \"zero\", \"inf\" or {\"t\": \"<scalar>\"}");
}

Json to_json(const Configuration& c)
{
    Json points = Json::array();
    for (const auto& x : c.points) {
        points.push_back(to_json(x));
    }
    return Json{{"base", c.base}, {"points", std::move(points)}};
}

Configuration configuration_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("base") || !j.contains("points") || !j["base"].is_string() ||
        !j["points"].is_array()) {
        throw ParseError("configuration must be {\"base\": string, \"points\": array}");
    }
    Configuration c{j["base"].get<std::string>(), {}};
    for (const auto& x : j["points"]) {
        c.points.push_back(fiber_point_from_json(x));
    }
    return c;
}

std::vector<Configuration> parse_configurations(std::string_view text)
{
    if (std::all_of(text.begin(), text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
        return {};
    }
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("configuration file must hold a JSON array");
    }
    std::vector<Configuration> out;
    out.reserve(doc.size());
    for (const auto& item : doc) {
        out.push_back(configuration_from_json(item));
    }
    return out;
}

Json to_json(const MonomialIndex& m)
{
    return Json(m.m);
}

Json to_json(const mpz_class& z)
{
    if (z.fits_ulong_p()) {
        return Json(static_cast<std::uint64_t>(z.get_ui()));
    }
    return Json(z.get_str());
}

} // namespace su12::io
