#include "bondmine/measures.hpp"

#include <bit>

namespace bondmine {

namespace {

void check_itemset(const TransactionDb& db, const Itemset& itemset) {
    if (itemset.empty()) throw std::invalid_argument("empty itemset");
    if (!is_strictly_sorted(itemset))
        throw std::invalid_argument("itemset must be strictly sorted");
    if (itemset.back() >= db.item_count())
        throw std::invalid_argument("item id out of range");
}

}  // namespace

SupportTriple supports(const TransactionDb& db, const Itemset& itemset) {
    check_itemset(db, itemset);
    Bitset conj_bits = db.presence(itemset[0]);
    Bitset disj_bits = conj_bits;
    for (std::size_t k = 1; k < itemset.size(); ++k) {
        conj_bits &= db.presence(itemset[k]);
        disj_bits |= db.presence(itemset[k]);
    }
    SupportTriple t;
    t.conj = static_cast<std::int64_t>(conj_bits.count());
    t.disj = static_cast<std::int64_t>(disj_bits.count());
    t.neg = static_cast<std::int64_t>(db.transaction_count()) - t.disj;
    return t;
}

Rational bond(const TransactionDb& db, const Itemset& itemset) {
    const SupportTriple t = supports(db, itemset);
    if (t.disj == 0) throw UndefinedBondError();
    return Rational(t.conj, t.disj);
}

bool cross_support_violates(const TransactionDb& db, const Itemset& itemset,
                            const Rational& minbond) {
    if (itemset.size() < 2)
        throw std::invalid_argument("cross-support needs at least 2 items");
    check_itemset(db, itemset);
    std::int64_t lo = db.item_support(itemset[0]);
    std::int64_t hi = lo;
    for (std::size_t k = 1; k < itemset.size(); ++k) {
        const std::int64_t s = db.item_support(itemset[k]);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    // lo/hi < minbond, cross-multiplied.
    return lo * minbond.den < minbond.num * hi;
}

namespace {

// Alternating-sign sum over all non-empty subsets of target.
std::int64_t inclusion_exclusion(const Itemset& target, const SupportTable& table) {
    const std::size_t n = target.size();
    if (n == 0) throw std::invalid_argument("empty itemset");
    if (n > 30) throw std::invalid_argument("itemset too large for subset enumeration");
    std::int64_t sum = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Itemset subset;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) subset.push_back(target[k]);
        auto it = table.find(subset);
        if (it == table.end())
            throw std::invalid_argument("missing subset entry: " + itemset_to_string(subset));
        const int sign = (std::popcount(mask) % 2 == 1) ? 1 : -1;
        sum += sign * it->second;
    }
    return sum;
}

}  // namespace

std::int64_t disj_from_conj(const Itemset& target, const SupportTable& conj_of_subsets) {
    return inclusion_exclusion(target, conj_of_subsets);
}

std::int64_t conj_from_disj(const Itemset& target, const SupportTable& disj_of_subsets) {
    return inclusion_exclusion(target, disj_of_subsets);
}

}  // namespace bondmine
