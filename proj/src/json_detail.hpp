#pragma once
// nlohmann-level readers shared by the JSON front ends; not installed.

#include "jumpkit/convex_body.hpp"
#include "jumpkit/radon.hpp"
#include "jumpkit/sampled_path.hpp"
#include "json.hpp"

namespace jumpkit::detail {

using nlohmann::json;

nlohmann::json path_json(const SampledPath& path);
SampledPath path_from(const json& j);
nlohmann::json field_json(const FieldOfPaths& field);
FieldOfPaths field_from(const json& j);
nlohmann::json body_json(const ConvexBodySpec& body);
ConvexBodySpec body_from(const json& j);
nlohmann::json map_json(const CanonicalMapSpec& gamma);
CanonicalMapSpec map_from(const json& j);
nlohmann::json kernel_json(const KernelSpec& kernel);
KernelSpec kernel_from(const json& j);

// Numbers or the strings "inf", "-inf".
double number_from(const json& j);
nlohmann::json number_json(double v);
json parse_text(const std::string& text);

}  // namespace jumpkit::detail
