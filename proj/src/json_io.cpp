#include "jumpkit/json_io.hpp"

#include <cmath>
#include <limits>

#include "json_detail.hpp"
#include "jumpkit/errors.hpp"

namespace jumpkit {
namespace detail {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

double number_from(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
    }
    throw InvalidArgument("expected a number, got " + j.dump());
}

json number_json(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
}

namespace {

cplx value_from(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw InvalidArgument("path values must be numbers or [re, im] pairs");
}

DyadicTime time_from(const json& t) {
    if (t.is_string()) return DyadicTime::parse(t.get<std::string>());
    if (t.is_number_integer()) return DyadicTime::from_integer(t.get<std::int64_t>());
    throw InvalidArgument("path times must be \"p/2^q\" strings or integers");
}

}  // namespace

json path_json(const SampledPath& path) {
    json times = json::array(), values = json::array();
    for (const auto& t : path.times()) times.push_back(t.to_string());
    for (const auto& v : path.values()) values.push_back({v.real(), v.imag()});
    return {{"times", times}, {"values", values}};
}

SampledPath path_from(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        throw InvalidArgument("a path needs a \"values\" array");
    std::vector<cplx> values;
    for (const auto& v : j["values"]) values.push_back(value_from(v));
    if (!j.contains("times")) return SampledPath::on_integers(std::move(values));
    if (!j["times"].is_array()) throw InvalidArgument("path \"times\" must be an array");
    std::vector<DyadicTime> times;
    for (const auto& t : j["times"]) times.push_back(time_from(t));
    return SampledPath(std::move(times), std::move(values));
}

json field_json(const FieldOfPaths& field) {
    json atoms = json::array();
    for (const auto& a : field.atoms()) atoms.push_back({{"weight", a.weight}, {"path", path_json(a.path)}});
    return {{"atoms", atoms}};
}

FieldOfPaths field_from(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
        throw InvalidArgument("a field needs an \"atoms\" array");
    std::vector<Atom> atoms;
    for (const auto& a : j["atoms"]) {
        if (!a.is_object() || !a.contains("path")) throw InvalidArgument("an atom needs a \"path\"");
        double w = a.contains("weight") ? number_from(a["weight"]) : 1.0;
        atoms.push_back({w, path_from(a["path"])});
    }
    return FieldOfPaths(std::move(atoms));
}

json body_json(const ConvexBodySpec& body) {
    if (body.kind() == ConvexBodySpec::Kind::lq_ball)
        return {{"type", "lq"}, {"d", body.dim()}, {"q", number_json(body.q())}};
    return {{"type", "box"}, {"half_widths", body.half_widths()}, {"center", body.center()}};
}

ConvexBodySpec body_from(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw InvalidArgument("a body needs a \"type\"");
    auto type = j["type"].get<std::string>();
    if (type == "lq") {
        if (!j.contains("d") || !j.contains("q")) throw InvalidArgument("an lq body needs \"d\" and \"q\"");
        return ConvexBodySpec::lq_ball(j["d"].get<int>(), number_from(j["q"]));
    }
    if (type == "box") {
        if (!j.contains("half_widths")) throw InvalidArgument("a box needs \"half_widths\"");
        std::vector<double> c;
        if (j.contains("center")) c = j["center"].get<std::vector<double>>();
        return ConvexBodySpec::box(j["half_widths"].get<std::vector<double>>(), c);
    }
    throw InvalidArgument("unknown body type: " + type);
}

json map_json(const CanonicalMapSpec& gamma) { return {{"k", gamma.source_dim()}, {"gamma", gamma.gamma()}}; }

CanonicalMapSpec map_from(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("gamma"))
        throw InvalidArgument("a canonical map needs \"k\" and \"gamma\"");
    return CanonicalMapSpec(j["k"].get<int>(), j["gamma"].get<std::vector<std::vector<int>>>());
}

json kernel_json(const KernelSpec& kernel) {
    return {{"name", kernel.name},
            {"k", kernel.k},
            {"size_constant", kernel.size_constant},
            {"omega", kernel.omega.form()},
            {"odd", kernel.odd}};
}

KernelSpec kernel_from(const json& j) {
    if (!j.is_object() || !j.contains("name")) throw InvalidArgument("a kernel needs a \"name\"");
    auto name = j["name"].get<std::string>();
    if (name == KernelSpec::hilbert().name) return KernelSpec::hilbert();
    if (name == KernelSpec::riesz_2d().name) return KernelSpec::riesz_2d();
    if (name == KernelSpec::zero(1).name) return KernelSpec::zero(j.value("k", 1));
    throw InvalidArgument("unknown kernel: " + name);
}

}  // namespace detail

namespace {

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("JSON shape error: ") + e.what());
    }
}

}  // namespace

std::string path_to_json(const SampledPath& path) { return detail::path_json(path).dump(); }
SampledPath path_from_json(const std::string& text) {
    return guarded([&] { return detail::path_from(detail::parse_text(text)); });
}
std::string field_to_json(const FieldOfPaths& field) { return detail::field_json(field).dump(); }
FieldOfPaths field_from_json(const std::string& text) {
    return guarded([&] { return detail::field_from(detail::parse_text(text)); });
}
std::string body_to_json(const ConvexBodySpec& body) { return detail::body_json(body).dump(); }
ConvexBodySpec body_from_json(const std::string& text) {
    return guarded([&] { return detail::body_from(detail::parse_text(text)); });
}
std::string map_to_json(const CanonicalMapSpec& gamma) { return detail::map_json(gamma).dump(); }
CanonicalMapSpec map_from_json(const std::string& text) {
    return guarded([&] { return detail::map_from(detail::parse_text(text)); });
}
std::string kernel_to_json(const KernelSpec& kernel) { return detail::kernel_json(kernel).dump(); }
KernelSpec kernel_from_json(const std::string& text) {
    return guarded([&] { return detail::kernel_from(detail::parse_text(text)); });
}

}  // namespace jumpkit
