#pragma once

#include <string>

#include "jumpkit/lattice.hpp"

namespace jumpkit {

// Binary layout, little-endian: "LATF", u32 version = 1, u32 d, u32 M, u32 layout (0 = row-major,
// axis 0 slowest), f64 spacing, then M^d complex64 values as (re, im) float32 pairs.
void write_lattice_binary(const LatticeField& field, const std::string& path);
LatticeField read_lattice_binary(const std::string& path);

// {"d": 2, "M": 4, "spacing": 1, "values": [[re, im], ...]} for small fields.
std::string lattice_to_json(const LatticeField& field);
LatticeField lattice_from_json(const std::string& text);

}  // namespace jumpkit
