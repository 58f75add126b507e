#include "bondmine/transaction_db.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bondmine {

ItemId TransactionDb::internal_id(std::int64_t original) const {
    auto it = by_name_.find(original);
    if (it == by_name_.end())
        throw std::invalid_argument("unknown item id: " + std::to_string(original));
    return it->second;
}

Itemset TransactionDb::to_internal(const std::vector<std::int64_t>& originals) const {
    Itemset out;
    out.reserve(originals.size());
    for (std::int64_t o : originals) out.push_back(internal_id(o));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int64_t> TransactionDb::to_original(const Itemset& internal) const {
    std::vector<std::int64_t> out;
    out.reserve(internal.size());
    for (ItemId i : internal) out.push_back(item_name(i));
    return out;
}

void TransactionDb::write_fimi(std::ostream& out) const {
    for (std::size_t t = 0; t < transaction_count_; ++t) {
        bool first = true;
        for (ItemId i = 0; i < presence_.size(); ++i) {
            if (!presence_[i].test(t)) continue;
            if (!first) out << ' ';
            out << item_names_[i];
            first = false;
        }
        out << '\n';
    }
}

TransactionDb TransactionDb::load_fimi(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_fimi(in);
}

TransactionDb TransactionDb::load_fimi(std::istream& in) {
    std::vector<std::vector<std::int64_t>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::int64_t> row;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            std::size_t pos = 0;
            std::int64_t id = 0;
            try {
                id = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || id < 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": non-integer item token '" + tok + "'");
            row.push_back(id);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no usable transactions");
    return from_transactions(rows);
}

TransactionDb TransactionDb::from_transactions(
    const std::vector<std::vector<std::int64_t>>& rows) {
    TransactionDb db;

    std::vector<std::vector<ItemId>> internal_rows;
    internal_rows.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<ItemId> tx;
        tx.reserve(row.size());
        for (std::int64_t original : row) {
            if (original < 0 || original > 0xFFFFFFFFLL)
                throw ParseError("item id out of range: " + std::to_string(original));
            auto [it, inserted] = db.by_name_.emplace(
                original, static_cast<ItemId>(db.item_names_.size()));
            if (inserted) db.item_names_.push_back(original);
            tx.push_back(it->second);
        }
        std::sort(tx.begin(), tx.end());
        tx.erase(std::unique(tx.begin(), tx.end()), tx.end());
        if (tx.empty()) {
            ++db.dropped_transactions_;
            continue;
        }
        internal_rows.push_back(std::move(tx));
    }
    if (internal_rows.empty()) throw ParseError("no usable transactions");

    db.transaction_count_ = internal_rows.size();
    const std::size_t n_items = db.item_names_.size();
    db.presence_.assign(n_items, Bitset(db.transaction_count_));
    for (std::size_t t = 0; t < internal_rows.size(); ++t)
        for (ItemId i : internal_rows[t]) db.presence_[i].set(t);

    db.supports_.resize(n_items);
    for (ItemId i = 0; i < n_items; ++i) db.supports_[i] = db.presence_[i].count();

    db.co_occurrence_.assign(n_items, {});
    for (ItemId i = 0; i < n_items; ++i)
        for (ItemId j = i + 1; j < n_items; ++j)
            if (db.presence_[i].intersects(db.presence_[j])) {
                db.co_occurrence_[i].push_back(j);
                db.co_occurrence_[j].push_back(i);
            }
    for (auto& co : db.co_occurrence_) std::sort(co.begin(), co.end());
    return db;
}

}  // namespace bondmine
