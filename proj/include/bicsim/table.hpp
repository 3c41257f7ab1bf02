#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicsim/errors.hpp"

namespace bicsim {

/// Column-labelled numeric table; the unit string of each column is carried
/// into the output header.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::string> units;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
};

// Shortest round-trippable decimal form (17 significant digits).
std::string format_double(double v);

// Tab-separated rows with '#'-prefixed header lines; byte-stable given the
// same table.
void write_dsv(const std::string& path, const Table& table,
               const std::vector<std::string>& header_notes);

// JSON export: {columns, units, rows, meta}.
void write_structured(const std::string& path, const Table& table,
                      const std::vector<std::string>& header_notes,
                      const std::string& resolved_config);

uint64_t fnv1a64(const std::string& bytes);
uint64_t fnv1a64_file(const std::string& path);

/// Reproducibility record appended beside each output file:
/// resolved parameters, version tag, wall-clock duration, output digests.
struct RunManifest {
    std::string command;
    std::string resolved_config;
    std::vector<std::string> output_paths;
    double wall_seconds = 0.0;
};

// Appends one JSON line to <first output path> + ".manifest.jsonl".
void append_manifest(const RunManifest& manifest);

} // namespace bicsim
