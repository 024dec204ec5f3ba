#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "jumpkit/errors.hpp"
#include "jumpkit/json_io.hpp"
#include "jumpkit/lattice_io.hpp"
#include "jumpkit/result_table.hpp"
#include "jumpkit/variation.hpp"

using namespace jumpkit;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("jumpkit_test_io_" + name); }

ResultTable sample_table() {
    ResultTable t;
    t.provenance = {fnv1a_hex("{}"), 42, "1.0.0", result_schema_version, "{}"};
    t.add({"lewko", {{"r", 1.5}}, 0.75, 1.0, 0.75, 0});
    t.add({"bridge", {{"r", 2}, {"d", 3}}, 1.0 / 3, 2.0, 1.0 / 6, 1e-17});
    t.add({"boundary", {}, -0.0, 5e-324, infinity, 0.1});
    return t;
}

}  // namespace

TEST(Json, PathRoundTrip) {
    SampledPath p({DyadicTime(0), DyadicTime(1, 3), DyadicTime(5, 2), DyadicTime(7)},
                  {{0.1, -2}, {1.0 / 3, 0}, {1e300, 1e-300}, {-4, 0.5}});
    auto q = path_from_json(path_to_json(p));
    EXPECT_EQ(q.times(), p.times());
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(q.values()[i], p.values()[i]);
    auto bare = path_from_json(R"({"values": [0, 1, 0]})");
    EXPECT_EQ(bare.times().front(), DyadicTime(1));
    EXPECT_EQ(jump_count(bare, 1.0), 2);
    EXPECT_THROW(path_from_json(R"({"values": [0, 1})"), InvalidArgument);
    EXPECT_THROW(path_from_json(R"({"times": ["1", "1"], "values": [0, 1]})"), InvalidArgument);
    EXPECT_THROW(path_from_json(R"({"times": ["1/3"], "values": [0]})"), InvalidArgument);
}

TEST(Json, FieldBodyMapKernelRoundTrip) {
    FieldOfPaths f({{0.5, SampledPath::on_integers(std::vector<double>{0, 1, 0})},
                    {2.0, SampledPath::on_integers(std::vector<double>{3, 1, 2})}});
    auto g = field_from_json(field_to_json(f));
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.atoms()[1].weight, 2.0);
    EXPECT_EQ(g.atoms()[1].path.values()[0], cplx(3));

    for (const auto& b : {ConvexBodySpec::lq_ball(3, infinity), ConvexBodySpec::lq_ball(2, 1.5),
                          ConvexBodySpec::box({0.5, 2}, {0.25, -1})}) {
        auto c = body_from_json(body_to_json(b));
        EXPECT_EQ(c.kind(), b.kind());
        EXPECT_EQ(c.dim(), b.dim());
        EXPECT_EQ(c.q(), b.q());
        EXPECT_EQ(c.half_widths(), b.half_widths());
        EXPECT_EQ(c.center(), b.center());
    }
    EXPECT_THROW(body_from_json(R"({"type": "simplex"})"), InvalidArgument);

    auto m = map_from_json(map_to_json(CanonicalMapSpec::moment_curve(3)));
    EXPECT_EQ(m.gamma(), CanonicalMapSpec::moment_curve(3).gamma());
    EXPECT_EQ(kernel_from_json(kernel_to_json(KernelSpec::riesz_2d())).name, KernelSpec::riesz_2d().name);
    EXPECT_THROW(kernel_from_json(R"({"name": "mystery"})"), InvalidArgument);
}

TEST(LatticeIo, BinaryRoundTrip) {
    LatticeField f(2, 4, 0.375);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = cplx(0.5 * double(i), -0.25 * double(i));  // exact in float
    auto path = temp_file("lattice.bin").string();
    write_lattice_binary(f, path);
    EXPECT_EQ(fs::file_size(path), 4u + 4 * 4 + 8 + 16 * 8);
    auto g = read_lattice_binary(path);
    EXPECT_EQ(g.dim(), 2);
    EXPECT_EQ(g.side(), 4);
    EXPECT_EQ(g.spacing(), 0.375);
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(g[i], f[i]);

    std::ofstream(path, std::ios::binary) << "LATX";
    EXPECT_THROW(read_lattice_binary(path), IoError);
    fs::resize_file(path, 0);
    EXPECT_THROW(read_lattice_binary(path), IoError);
    fs::remove(path);
    EXPECT_THROW(read_lattice_binary(path), IoError);
}

TEST(LatticeIo, JsonRoundTrip) {
    LatticeField f(1, 3, 2.0);
    f[0] = cplx(1, 2);
    f[2] = cplx(-0.1, 1e-20);
    auto g = lattice_from_json(lattice_to_json(f));
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(g[i], f[i]);
    EXPECT_EQ(g.spacing(), 2.0);
    EXPECT_THROW(lattice_from_json(R"({"d": 1, "M": 3, "spacing": 1, "values": [[0, 0]]})"), InvalidArgument);
}

TEST(Report, CsvAndJsonRoundTrip) {
    auto t = sample_table();
    EXPECT_EQ(parse_csv(to_csv(t)), t);
    EXPECT_EQ(parse_json(to_json(t)), t);
    EXPECT_EQ(render(t, ReportFormat::csv), to_csv(t));
    EXPECT_EQ(parse_format("json"), ReportFormat::json);
    EXPECT_THROW(parse_format("xml"), InvalidArgument);
}

TEST(Report, EmptyTableKeepsHeaderAndProvenance) {
    ResultTable t;
    t.provenance.config_hash = fnv1a_hex("x");
    auto csv = to_csv(t);
    EXPECT_NE(csv.find("experiment,parameters,measured,reference,ratio,error_estimate\n"), std::string::npos);
    EXPECT_NE(csv.find(t.provenance.config_hash), std::string::npos);
    auto back = parse_csv(csv);
    EXPECT_EQ(back.size(), 0u);
    EXPECT_EQ(back.provenance, t.provenance);
}

TEST(Report, SortIsByExperimentThenParameters) {
    auto t = sample_table();
    t.sort_rows();
    EXPECT_EQ(t.rows()[0].experiment, "boundary");
    EXPECT_EQ(t.rows()[1].experiment, "bridge");
    EXPECT_EQ(t.rows()[2].experiment, "lewko");
}

TEST(Report, RejectsBadInput) {
    EXPECT_THROW(parse_csv("a,b\n"), InvalidArgument);
    EXPECT_THROW(parse_csv(""), InvalidArgument);
    ResultTable t;
    t.add({"bad,id", {}, 0, 0, 0, 0});
    EXPECT_THROW(to_csv(t), InvalidArgument);
    EXPECT_THROW(parse_json("{"), InvalidArgument);
}

TEST(Report, EmitWritesFileOrFails) {
    auto t = sample_table();
    auto path = temp_file("report.json").string();
    emit_report(t, ReportFormat::json, path);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(text, to_json(t));
    fs::remove(path);
    EXPECT_THROW(emit_report(t, ReportFormat::csv, "/nonexistent-dir/x/report.csv"), IoError);
}

TEST(Report, FnvKnownValues) {
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}
