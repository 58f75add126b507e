#include "bondmine/discretize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bondmine {

DiscretizeResult discretize(const std::vector<std::vector<double>>& matrix,
                            const DiscretizationConfig& config) {
    if (config.under_cutoff >= config.over_cutoff)
        throw std::invalid_argument("under_cutoff must be below over_cutoff");
    if (matrix.empty()) throw std::invalid_argument("empty matrix");

    const std::size_t cols = matrix[0].size();
    if (cols == 0) throw std::invalid_argument("matrix has no columns");
    for (const auto& row : matrix) {
        if (row.size() != cols) throw std::invalid_argument("ragged rows");
        for (double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    }

    const double n = static_cast<double>(matrix.size());
    std::vector<double> mean(cols, 0.0), stddev(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        double sum = 0.0;
        for (const auto& row : matrix) sum += row[j];
        mean[j] = sum / n;
        double sq = 0.0;
        for (const auto& row : matrix) sq += (row[j] - mean[j]) * (row[j] - mean[j]);
        stddev[j] = std::sqrt(sq / n);  // population convention
    }

    DiscretizeResult result;
    std::vector<bool> skip(cols, false);
    for (std::size_t j = 0; j < cols; ++j)
        if (stddev[j] == 0.0) {
            skip[j] = true;
            result.skipped_columns.push_back(j);
        }

    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : matrix) {
        std::vector<std::int64_t> tx;
        for (std::size_t j = 0; j < cols; ++j) {
            if (skip[j]) continue;
            const double z = (row[j] - mean[j]) / stddev[j];
            if (z >= config.over_cutoff)
                tx.push_back(static_cast<std::int64_t>(j));
            else if (z <= config.under_cutoff)
                tx.push_back(static_cast<std::int64_t>(j + cols));
        }
        if (tx.empty()) {
            ++result.dropped_rows;
            continue;
        }
        rows.push_back(std::move(tx));
    }
    if (rows.empty()) throw std::invalid_argument("no expressed cells in any row");
    result.db = TransactionDb::from_transactions(rows);
    return result;
}

std::vector<std::vector<double>> read_csv_matrix(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::vector<double>> matrix;
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = has_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos])))
                ++pos;
            if (pos != cell.size())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": non-numeric cell '" + cell + "'");
            row.push_back(v);
        }
        if (!row.empty()) matrix.push_back(std::move(row));
    }
    if (matrix.empty()) throw ParseError("no data rows in " + path);
    return matrix;
}

}  // namespace bondmine
