// discretize.hpp -- z-score discretization of continuous matrices into
// transactional form. Column j yields item id j when a cell is over-expressed
// and item id j+M when under-expressed (M = column count).

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bondmine/transaction_db.hpp"

namespace bondmine {

struct DiscretizationConfig {
    double over_cutoff = 1.96;
    double under_cutoff = -1.96;
};

struct DiscretizeResult {
    TransactionDb db;
    std::size_t dropped_rows = 0;           // rows with no expressed cell
    std::vector<std::size_t> skipped_columns;  // zero-variance columns
};

/// Z-normalizes each column (population standard deviation), then keeps
/// cells with z >= over_cutoff (item j) or z <= under_cutoff (item j+M);
/// both comparisons are inclusive.
DiscretizeResult discretize(const std::vector<std::vector<double>>& matrix,
                            const DiscretizationConfig& config);

/// Reads a CSV of reals; the first row is skipped when has_header is set.
std::vector<std::vector<double>> read_csv_matrix(const std::string& path, bool has_header);

}  // namespace bondmine
