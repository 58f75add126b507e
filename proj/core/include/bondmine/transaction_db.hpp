// transaction_db.hpp -- codified extraction context.
//
// Items are remapped to dense 0-based ids in first-appearance order; the
// original id is kept as the item name and used in all outputs. For each
// item the database holds a presence bitset over transactions (bit t set
// iff the item appears in transaction t) and the sorted list of items
// co-occurring with it in at least one transaction.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bondmine/bitset.hpp"
#include "bondmine/pattern.hpp"

namespace bondmine {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TransactionDb {
public:
    std::size_t item_count() const { return presence_.size(); }
    std::size_t transaction_count() const { return transaction_count_; }

    const Bitset& presence(ItemId i) const { return presence_.at(i); }
    const std::vector<ItemId>& co_occurrence(ItemId i) const { return co_occurrence_.at(i); }

    std::int64_t item_support(ItemId i) const {
        return static_cast<std::int64_t>(supports_.at(i));
    }

    /// Original (input-file) id of an internal item.
    std::int64_t item_name(ItemId i) const { return item_names_.at(i); }

    /// Internal id of an original id, or throws if unknown.
    ItemId internal_id(std::int64_t original) const;
    bool has_original(std::int64_t original) const {
        return by_name_.count(original) != 0;
    }

    Itemset to_internal(const std::vector<std::int64_t>& originals) const;
    std::vector<std::int64_t> to_original(const Itemset& internal) const;

    /// Number of empty input lines-with-content that became empty transactions
    /// and were dropped (discretizer path).
    std::size_t dropped_transactions() const { return dropped_transactions_; }

    /// One transaction per line, items as original ids in first-appearance
    /// order; reloading reproduces the identical presence matrix.
    void write_fimi(std::ostream& out) const;

    static TransactionDb load_fimi(const std::string& path);
    static TransactionDb load_fimi(std::istream& in);

    /// Builds from already-tokenized transactions (original ids, duplicates
    /// allowed). Empty transactions are dropped and counted.
    static TransactionDb from_transactions(const std::vector<std::vector<std::int64_t>>& rows);

private:
    std::size_t transaction_count_ = 0;
    std::size_t dropped_transactions_ = 0;
    std::vector<Bitset> presence_;
    std::vector<std::vector<ItemId>> co_occurrence_;
    std::vector<std::size_t> supports_;
    std::vector<std::int64_t> item_names_;
    std::unordered_map<std::int64_t, ItemId> by_name_;
};

}  // namespace bondmine
