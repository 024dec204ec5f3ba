#include "jumpkit/lattice_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "json_detail.hpp"
#include "jumpkit/errors.hpp"

namespace jumpkit {

static_assert(std::endian::native == std::endian::little, "binary lattice I/O assumes a little-endian host");

namespace {

constexpr char magic[4] = {'L', 'A', 'T', 'F'};
constexpr std::uint32_t format_version = 1;

template <class T>
void put(std::ofstream& o, T v) {
    o.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::ifstream& in, const std::string& path) {
    T v;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) throw IoError("truncated lattice file: " + path);
    return v;
}

}  // namespace

void write_lattice_binary(const LatticeField& field, const std::string& path) {
    std::ofstream o(path, std::ios::binary | std::ios::trunc);
    if (!o) throw IoError("cannot open lattice file for writing: " + path);
    o.write(magic, 4);
    put<std::uint32_t>(o, format_version);
    put<std::uint32_t>(o, field.dim());
    put<std::uint32_t>(o, field.side());
    put<std::uint32_t>(o, 0);
    put<double>(o, field.spacing());
    for (const auto& v : field.values()) {
        put<float>(o, static_cast<float>(v.real()));
        put<float>(o, static_cast<float>(v.imag()));
    }
    if (!o) throw IoError("failed writing lattice file: " + path);
}

LatticeField read_lattice_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lattice file: " + path);
    char m[4];
    if (!in.read(m, 4) || std::memcmp(m, magic, 4) != 0) throw IoError("not a lattice file: " + path);
    if (get<std::uint32_t>(in, path) != format_version) throw IoError("unsupported lattice version: " + path);
    auto d = get<std::uint32_t>(in, path);
    auto M = get<std::uint32_t>(in, path);
    if (get<std::uint32_t>(in, path) != 0) throw IoError("unsupported lattice layout: " + path);
    auto h = get<double>(in, path);
    LatticeField f(static_cast<int>(d), static_cast<int>(M), h);
    for (auto& v : f.values()) {
        float re = get<float>(in, path), im = get<float>(in, path);
        v = {re, im};
    }
    return f;
}

std::string lattice_to_json(const LatticeField& field) {
    detail::json values = detail::json::array();
    for (const auto& v : field.values()) values.push_back({v.real(), v.imag()});
    return detail::json{{"d", field.dim()}, {"M", field.side()}, {"spacing", field.spacing()}, {"values", values}}
        .dump();
}

LatticeField lattice_from_json(const std::string& text) {
    auto j = detail::parse_text(text);
    try {
        int d = j.at("d").get<int>(), M = j.at("M").get<int>();
        double h = j.value("spacing", 1.0);
        std::vector<cplx> values;
        for (const auto& v : j.at("values")) {
            if (v.is_number())
                values.emplace_back(v.get<double>(), 0.0);
            else
                values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        }
        return LatticeField(d, M, std::move(values), h);
    } catch (const detail::json::exception& e) {
        throw InvalidArgument(std::string("malformed lattice JSON: ") + e.what());
    }
}

}  // namespace jumpkit
