#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wsf {

// One cell of a reproduction table.  `reference` is the published value the
// cell is held to; for the relative-error table it is the tabulated error.
struct TableCell {
    std::string column;
    bool applicable = true;
    double value = 0.0;
    std::optional<double> reference;
    bool pass = true;
    std::string note;
};

struct TableRow {
    std::string label;
    std::vector<TableCell> cells;
};

struct Table {
    std::string id;  // I..V
    std::string title;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
    bool relative_error = false;  // cells pass when value <= 10 * reference
    double tol = 5e-5;            // absolute tolerance otherwise
    bool all_pass() const;
    // Pass state over a subset of columns; empty means all.
    bool pass_for(const std::vector<std::string>& columns) const;
};

// Throws DomainError for an unknown id.
Table make_table(const std::string& id);

struct VerifyOptions {
    int draws = 100;
    std::uint64_t seed = 0;
    double tol = 1e-7;  // route-vs-oracle agreement
    // oracle, bounds, identities, special, fading, capacity; empty runs all
    std::vector<std::string> groups;
};

struct PropertyResult {
    std::string group;
    std::string name;
    bool pass = true;
    int checked = 0;
    int failed = 0;
    int refused = 0;  // documented domain or loss-of-significance refusals
    double worst = 0.0;
    double limit = 0.0;
    std::string detail;
    std::vector<std::string> failures;  // first few, for the report
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<PropertyResult> properties;
    double seconds = 0.0;
    bool pass() const;
};

VerifyReport run_verify(const VerifyOptions& opt);

// Stable key order; pretty-printed.
std::string to_json(const VerifyReport& r);
std::string to_json(const Table& t);

}  // namespace wsf
