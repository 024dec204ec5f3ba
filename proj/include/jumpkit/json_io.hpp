#pragma once

#include <string>

#include "jumpkit/convex_body.hpp"
#include "jumpkit/radon.hpp"
#include "jumpkit/sampled_path.hpp"

namespace jumpkit {

// Paths: {"times": ["p/2^q", ...], "values": [[re, im], ...]}. Bare numbers are accepted as
// real values and integer times, and "times" may be omitted for the grid 1..n.
std::string path_to_json(const SampledPath& path);
SampledPath path_from_json(const std::string& text);

// Fields: {"atoms": [{"weight": w, "path": {...}}, ...]}
std::string field_to_json(const FieldOfPaths& field);
FieldOfPaths field_from_json(const std::string& text);

// {"type": "lq", "d": 2, "q": 2 | "inf"} or {"type": "box", "half_widths": [...], "center": [...]}
std::string body_to_json(const ConvexBodySpec& body);
ConvexBodySpec body_from_json(const std::string& text);

// {"k": 1, "gamma": [[1], [2]]}
std::string map_to_json(const CanonicalMapSpec& gamma);
CanonicalMapSpec map_from_json(const std::string& text);

// Kernels serialize by name; only the built-in kernels can be read back.
std::string kernel_to_json(const KernelSpec& kernel);
KernelSpec kernel_from_json(const std::string& text);

}  // namespace jumpkit
