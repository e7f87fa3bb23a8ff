#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace morava {

// One printed row of a published table; `ks` lists the grades it covers.
struct ExpectedRow {
    unsigned n = 0;
    std::vector<unsigned> ks;
    std::optional<std::size_t> dim;  // printed dim M' (when the table has that column)
    std::vector<std::size_t> values;  // printed columns, in order
    std::string subgroup;             // tables listing one subgroup per row
};

struct TableSpec {
    std::string id;
    std::string caption;
    unsigned p = 0, d = 0;
    std::string group;                 // SL2F3, UV, or "H" (one subgroup per row)
    std::vector<std::string> columns;  // printed column names
    // Position of each printed column in the full list of summand types.
    std::vector<std::size_t> column_positions;
    std::size_t summand_types = 0;
    // Weight of each summand type: dimension (I_i) or index (P_i).
    std::vector<std::size_t> weights;
    std::vector<ExpectedRow> rows;
    // Grades computed beyond the printed ones, per n.
    std::vector<std::pair<unsigned, std::vector<unsigned>>> extra;
};

const std::vector<TableSpec>& table_specs();
const TableSpec& table_spec(const std::string& id);

// Internal consistency of the transcribed tables; returns one message per failure.
std::vector<std::string> audit_tables();

struct TableResultRow {
    unsigned n = 0, k = 0;
    std::string subgroup;
    std::vector<std::size_t> multiplicities;  // every summand type
    std::size_t dim_M_prime = 0, dim_M = 0;
    bool has_expected = false;
    bool match = true;
    std::string note;
    double seconds = 0;
};

struct TableReport {
    const TableSpec* spec = nullptr;
    std::vector<std::string> summand_labels;
    std::vector<TableResultRow> rows;
    double seconds = 0;
    bool pass() const;
};

struct TableOptions {
    bool extra_rows = false;
    std::function<void(const TableResultRow&)> progress;
};

TableReport run_table(const std::string& id, const TableOptions& options = {});

void write_table_tsv(std::ostream& out, const TableReport& report);

}  // namespace morava
