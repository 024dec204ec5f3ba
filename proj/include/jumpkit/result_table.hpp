#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jumpkit {

inline constexpr int result_schema_version = 1;

struct ResultRow {
    std::string experiment;
    std::vector<std::pair<std::string, double>> params;
    double measured = 0;
    double reference = 0;
    double ratio = 0;
    double error = 0;
    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct Provenance {
    std::string config_hash;  // 16 hex digits, FNV-1a 64 of the canonical config
    std::uint64_t seed = 0;
    std::string version;
    int schema_version = result_schema_version;
    std::string config;  // canonical config JSON
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

class ResultTable {
public:
    Provenance provenance;

    void add(ResultRow row) { rows_.push_back(std::move(row)); }
    const std::vector<ResultRow>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    // Stable sort by experiment id, then parameter tuple.
    void sort_rows();
    friend bool operator==(const ResultTable&, const ResultTable&) = default;

private:
    std::vector<ResultRow> rows_;
};

enum class ReportFormat { csv, json };

// CSV: '#'-prefixed provenance lines, then the header
// experiment,parameters,measured,reference,ratio,error_estimate with parameters as k=v;k=v.
std::string to_csv(const ResultTable& t);
std::string to_json(const ResultTable& t);
ResultTable parse_csv(const std::string& text);
ResultTable parse_json(const std::string& text);

ReportFormat parse_format(const std::string& name);
std::string render(const ResultTable& t, ReportFormat format);
// Writes the rendered table to path; "-" writes to stdout.
void emit_report(const ResultTable& t, ReportFormat format, const std::string& path);

// FNV-1a 64 as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace jumpkit
