#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "absphase/classical_limit.hpp"

namespace absphase {

/// Flat numeric table: the shape every machine-readable result is written in.
/// CSV: one header row of column names, then one row per record, all values
/// as decimals with 17 significant digits (round-trip exact for doubles).
/// JSON mirrors the same field names: {"columns": [...], "rows": [[...]]}.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    bool operator==(const Table&) const = default;
};

enum class OutputFormat { Csv, Json };

/// 17-significant-digit decimal formatting, shared by both formats.
std::string format_double(double value);

std::string to_csv(const Table& table);
Table table_from_csv(std::string_view text);

std::string to_json(const Table& table);
Table table_from_json(std::string_view text);

std::string serialize(const Table& table, OutputFormat format);
Table deserialize(std::string_view text, OutputFormat format);

/// Matrix payload: one table row per matrix row, complex entries as paired
/// re_<j>/im_<j> columns.
Table to_table(const TruncatedOperator& op);
ComplexMatrix matrix_from_table(const Table& table);

/// Columns phi, weight, density (the weight column makes the samples
/// integrable by any consumer and the payload reconstructible).
Table to_table(const PhaseDistribution& dist);

/// Columns n_mean, value, target, abs_error.
Table to_table(const SweepResult& sweep);

}  // namespace absphase
