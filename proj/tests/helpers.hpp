// Shared fixtures for the test suites: the five-transaction toy context,
// seeded random context generation and itemset conversions.

#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bondmine/measures.hpp"
#include "bondmine/pattern.hpp"
#include "bondmine/transaction_db.hpp"

namespace testutil {

using namespace bondmine;

// Items A..E as original ids 1..5:
//   t1 = ACD, t2 = BCE, t3 = ABCE, t4 = BE, t5 = ABCE.
inline TransactionDb toy_db() {
    std::istringstream in("1 3 4\n2 3 5\n1 2 3 5\n2 5\n1 2 3 5\n");
    return TransactionDb::load_fimi(in);
}

constexpr std::int64_t kA = 1, kB = 2, kC = 3, kD = 4, kE = 5;

// Internal itemset from original ids.
inline Itemset iset(const TransactionDb& db, std::initializer_list<std::int64_t> originals) {
    Itemset s;
    for (auto o : originals) s.push_back(db.internal_id(o));
    std::sort(s.begin(), s.end());
    return s;
}

inline Itemset original_items(const TransactionDb& db, const Itemset& internal) {
    Itemset out;
    for (ItemId i : internal) out.push_back(static_cast<ItemId>(db.item_name(i)));
    std::sort(out.begin(), out.end());
    return out;
}

inline PatternRecord original_record(const TransactionDb& db, const PatternRecord& rec) {
    return PatternRecord(original_items(db, rec.itemset), rec.conj, rec.disj);
}

inline std::vector<PatternRecord> original_records(const TransactionDb& db,
                                                   std::vector<PatternRecord> recs) {
    for (auto& r : recs) r = original_record(db, r);
    canonical_sort(recs);
    return recs;
}

// Random context with the given item/transaction bounds; density is the
// per-cell presence probability. Retries until at least one non-empty row.
inline TransactionDb random_db(std::mt19937& rng, std::size_t max_items = 10,
                               std::size_t max_tx = 25, double min_density = 0.1,
                               double max_density = 0.9) {
    std::uniform_int_distribution<std::size_t> item_d(2, max_items);
    std::uniform_int_distribution<std::size_t> tx_d(2, max_tx);
    std::uniform_real_distribution<double> dens_d(min_density, max_density);
    std::uniform_real_distribution<double> cell(0.0, 1.0);
    for (;;) {
        const std::size_t items = item_d(rng);
        const std::size_t txs = tx_d(rng);
        const double density = dens_d(rng);
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t t = 0; t < txs; ++t) {
            std::vector<std::int64_t> row;
            for (std::size_t i = 0; i < items; ++i)
                if (cell(rng) < density) row.push_back(static_cast<std::int64_t>(i + 1));
            if (!row.empty()) rows.push_back(std::move(row));
        }
        if (rows.empty()) continue;
        return TransactionDb::from_transactions(rows);
    }
}

// All non-empty internal itemsets of a small db.
inline std::vector<Itemset> all_itemsets(const TransactionDb& db) {
    const std::size_t n = db.item_count();
    std::vector<Itemset> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Itemset s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(static_cast<ItemId>(i));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace testutil
