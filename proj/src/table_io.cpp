#include "absphase/table_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace absphase {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view cell) {
    const std::string buffer(cell);
    char* end = nullptr;
    const double value = std::strtod(buffer.c_str(), &end);
    if (end == buffer.c_str() || *end != '\0')
        throw std::invalid_argument("table_from_csv: not a number: '" + buffer + "'");
    return value;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

Table table_from_csv(std::string_view text) {
    Table table;
    bool header_seen = false;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        const auto cells = split(line, ',');
        if (!header_seen) {
            for (const auto cell : cells)
                table.columns.emplace_back(cell);
            header_seen = true;
            continue;
        }
        if (cells.size() != table.columns.size())
            throw std::invalid_argument("table_from_csv: row has " +
                                        std::to_string(cells.size()) + " cells, header has " +
                                        std::to_string(table.columns.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto cell : cells)
            row.push_back(parse_double(cell));
        table.rows.push_back(std::move(row));
    }
    if (!header_seen)
        throw std::invalid_argument("table_from_csv: missing header row");
    return table;
}

std::string to_json(const Table& table) {
    nlohmann::json j;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    return j.dump();
}

Table table_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Table table;
    table.columns = j.at("columns").get<std::vector<std::string>>();
    table.rows = j.at("rows").get<std::vector<std::vector<double>>>();
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::invalid_argument("table_from_json: ragged rows");
    return table;
}

std::string serialize(const Table& table, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

Table deserialize(std::string_view text, OutputFormat format) {
    return format == OutputFormat::Csv ? table_from_csv(text) : table_from_json(text);
}

Table to_table(const TruncatedOperator& op) {
    Table table;
    const Eigen::Index dim = op.dim();
    table.columns.reserve(2 * static_cast<std::size_t>(dim));
    for (Eigen::Index j = 0; j < dim; ++j) {
        table.columns.push_back("re_" + std::to_string(j));
        table.columns.push_back("im_" + std::to_string(j));
    }
    table.rows.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        std::vector<double> row;
        row.reserve(2 * static_cast<std::size_t>(dim));
        for (Eigen::Index j = 0; j < dim; ++j) {
            row.push_back(op.matrix(i, j).real());
            row.push_back(op.matrix(i, j).imag());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ComplexMatrix matrix_from_table(const Table& table) {
    if (table.columns.size() % 2 != 0)
        throw std::invalid_argument("matrix_from_table: expected paired re_/im_ columns");
    const auto dim = static_cast<Eigen::Index>(table.columns.size() / 2);
    if (static_cast<Eigen::Index>(table.rows.size()) != dim)
        throw std::invalid_argument("matrix_from_table: matrix must be square");
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            m(i, j) = Complex(table.rows[static_cast<std::size_t>(i)][2 * j],
                              table.rows[static_cast<std::size_t>(i)][2 * j + 1]);
    return m;
}

Table to_table(const PhaseDistribution& dist) {
    Table table;
    table.columns = {"phi", "weight", "density"};
    table.rows.reserve(dist.density.size());
    for (std::size_t k = 0; k < dist.density.size(); ++k)
        table.rows.push_back({dist.grid.nodes[k], dist.grid.weights[k], dist.density[k]});
    return table;
}

Table to_table(const SweepResult& sweep) {
    Table table;
    table.columns = {"n_mean", "value", "target", "abs_error"};
    table.rows.reserve(sweep.records.size());
    for (const auto& record : sweep.records)
        table.rows.push_back({record.n_mean, record.value, record.target, record.abs_error});
    return table;
}

}  // namespace absphase
