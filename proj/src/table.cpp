#include "bicsim/table.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bicsim/version.hpp"

namespace bicsim {

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw ConfigError("table row width does not match the column count");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string header_block(const Table& table, const std::vector<std::string>& notes) {
    std::ostringstream out;
    out << "# bicsim " << version << "\n";
    for (const std::string& n : notes) out << "# " << n << "\n";
    out << "# columns:";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << " " << table.columns[i];
        if (i < table.units.size() && !table.units[i].empty()) out << "[" << table.units[i] << "]";
    }
    out << "\n";
    return out.str();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    return out;
}

} // namespace

void write_dsv(const std::string& path, const Table& table,
               const std::vector<std::string>& header_notes) {
    std::ofstream out = open_out(path);
    out << header_block(table, header_notes);
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << '\t';
            out << format_double(row[i]);
        }
        out << '\n';
    }
    if (!out) throw ConfigError("failed writing output file: " + path);
}

void write_structured(const std::string& path, const Table& table,
                      const std::vector<std::string>& header_notes,
                      const std::string& resolved_config) {
    nlohmann::ordered_json doc;
    doc["version"] = version;
    doc["notes"] = header_notes;
    doc["resolved_config"] = resolved_config;
    doc["columns"] = table.columns;
    doc["units"] = table.units;
    // rows as strings keeps the 17-digit formatting byte-stable
    std::vector<std::vector<std::string>> rows;
    rows.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        std::vector<std::string> r;
        r.reserve(row.size());
        for (double v : row) r.push_back(format_double(v));
        rows.push_back(std::move(r));
    }
    doc["rows"] = rows;
    std::ofstream out = open_out(path);
    out << doc.dump(1, '\t') << '\n';
    if (!out) throw ConfigError("failed writing output file: " + path);
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file for digest: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a64(buf.str());
}

void append_manifest(const RunManifest& manifest) {
    if (manifest.output_paths.empty()) return;
    nlohmann::ordered_json rec;
    rec["version"] = version;
    rec["command"] = manifest.command;
    rec["wall_seconds"] = manifest.wall_seconds;
    rec["resolved_config"] = manifest.resolved_config;
    auto outputs = nlohmann::ordered_json::array();
    for (const std::string& p : manifest.output_paths) {
        char digest[32];
        std::snprintf(digest, sizeof digest, "%016" PRIx64, fnv1a64_file(p));
        outputs.push_back({{"path", p}, {"fnv1a64", digest}});
    }
    rec["outputs"] = outputs;

    const std::string path = manifest.output_paths.front() + ".manifest.jsonl";
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw ConfigError("cannot open manifest file: " + path);
    out << rec.dump() << '\n';
}

} // namespace bicsim
