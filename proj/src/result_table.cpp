#include "jumpkit/result_table.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jumpkit/errors.hpp"
#include "json.hpp"

namespace jumpkit {

using nlohmann::json;

void ResultTable::sort_rows() {
    std::stable_sort(rows_.begin(), rows_.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.experiment != b.experiment) return a.experiment < b.experiment;
        return a.params < b.params;
    });
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_num(const std::string& s) {
    if (s.empty()) throw InvalidArgument("empty number in report");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw InvalidArgument("bad number in report: " + s);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// JSON has no inf/nan; those travel as strings.
json jnum(double v) {
    if (std::isfinite(v)) return v;
    return num(v);
}

double from_jnum(const json& j) {
    if (j.is_string()) return parse_num(j.get<std::string>());
    return j.get<double>();
}

const char* csv_header = "experiment,parameters,measured,reference,ratio,error_estimate";

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string to_csv(const ResultTable& t) {
    std::ostringstream o;
    const auto& p = t.provenance;
    o << "# schema_version: " << p.schema_version << '\n';
    o << "# version: " << p.version << '\n';
    o << "# config_hash: " << p.config_hash << '\n';
    o << "# seed: " << p.seed << '\n';
    o << "# config: " << p.config << '\n';
    o << csv_header << '\n';
    for (const auto& r : t.rows()) {
        require(r.experiment.find_first_of(",\n") == std::string::npos, "experiment id contains a separator");
        o << r.experiment << ',';
        for (std::size_t i = 0; i < r.params.size(); ++i) {
            require(r.params[i].first.find_first_of(",;=\n") == std::string::npos,
                    "parameter name contains a separator");
            o << (i ? ";" : "") << r.params[i].first << '=' << num(r.params[i].second);
        }
        o << ',' << num(r.measured) << ',' << num(r.reference) << ',' << num(r.ratio) << ',' << num(r.error)
          << '\n';
    }
    return o.str();
}

ResultTable parse_csv(const std::string& text) {
    ResultTable t;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (!header && line.rfind("# ", 0) == 0) {
            auto colon = line.find(": ");
            if (colon == std::string::npos) continue;
            std::string key = line.substr(2, colon - 2), val = line.substr(colon + 2);
            if (key == "schema_version") t.provenance.schema_version = std::stoi(val);
            else if (key == "version") t.provenance.version = val;
            else if (key == "config_hash") t.provenance.config_hash = val;
            else if (key == "seed") t.provenance.seed = std::stoull(val);
            else if (key == "config") t.provenance.config = val;
            continue;
        }
        if (!header) {
            if (line != csv_header) throw InvalidArgument("unexpected CSV header: " + line);
            header = true;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 6) throw InvalidArgument("CSV row needs 6 fields: " + line);
        ResultRow r;
        r.experiment = f[0];
        if (!f[1].empty())
            for (const auto& kv : split(f[1], ';')) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw InvalidArgument("bad parameter: " + kv);
                r.params.emplace_back(kv.substr(0, eq), parse_num(kv.substr(eq + 1)));
            }
        r.measured = parse_num(f[2]);
        r.reference = parse_num(f[3]);
        r.ratio = parse_num(f[4]);
        r.error = parse_num(f[5]);
        t.add(std::move(r));
    }
    if (!header) throw InvalidArgument("CSV report has no header");
    return t;
}

std::string to_json(const ResultTable& t) {
    json j;
    const auto& p = t.provenance;
    j["schema_version"] = p.schema_version;
    j["provenance"] = {{"config_hash", p.config_hash}, {"seed", p.seed}, {"version", p.version}};
    j["config"] = p.config.empty() ? json(nullptr) : json::parse(p.config);
    j["rows"] = json::array();
    for (const auto& r : t.rows()) {
        json params = json::array();
        for (const auto& [k, v] : r.params) params.push_back({k, jnum(v)});
        j["rows"].push_back({{"experiment", r.experiment},
                             {"parameters", params},
                             {"measured", jnum(r.measured)},
                             {"reference", jnum(r.reference)},
                             {"ratio", jnum(r.ratio)},
                             {"error_estimate", jnum(r.error)}});
    }
    return j.dump(2) + "\n";
}

ResultTable parse_json(const std::string& text) {
    ResultTable t;
    try {
        json j = json::parse(text);
        t.provenance.schema_version = j.at("schema_version").get<int>();
        if (t.provenance.schema_version != result_schema_version)
            throw InvalidArgument("unsupported report schema version");
        const auto& p = j.at("provenance");
        t.provenance.config_hash = p.at("config_hash").get<std::string>();
        t.provenance.seed = p.at("seed").get<std::uint64_t>();
        t.provenance.version = p.at("version").get<std::string>();
        if (!j.at("config").is_null()) t.provenance.config = j.at("config").dump();
        for (const auto& r : j.at("rows")) {
            ResultRow row;
            row.experiment = r.at("experiment").get<std::string>();
            for (const auto& kv : r.at("parameters"))
                row.params.emplace_back(kv.at(0).get<std::string>(), from_jnum(kv.at(1)));
            row.measured = from_jnum(r.at("measured"));
            row.reference = from_jnum(r.at("reference"));
            row.ratio = from_jnum(r.at("ratio"));
            row.error = from_jnum(r.at("error_estimate"));
            t.add(std::move(row));
        }
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON report: ") + e.what());
    }
    return t;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw InvalidArgument("unknown report format: " + name);
}

std::string render(const ResultTable& t, ReportFormat format) {
    return format == ReportFormat::csv ? to_csv(t) : to_json(t);
}

void emit_report(const ResultTable& t, ReportFormat format, const std::string& path) {
    const std::string text = render(t, format);
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open report for writing: " + path);
    out << text;
    out.close();
    if (!out) throw IoError("failed writing report: " + path);
}

}  // namespace jumpkit
