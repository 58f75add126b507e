#include "bondmine/representation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bondmine {

std::string rep_kind_name(RepKind kind) {
    switch (kind) {
        case RepKind::Rcpr: return "rcpr";
        case RepKind::MMaxCr: return "mmaxcr";
        case RepKind::MinMCr: return "minmcr";
        case RepKind::MinMMaxCr: return "minmmaxcr";
        case RepKind::Rfccp: return "rfccp";
    }
    return "?";
}

std::optional<RepKind> rep_kind_from_name(const std::string& name) {
    if (name == "rcpr") return RepKind::Rcpr;
    if (name == "mmaxcr") return RepKind::MMaxCr;
    if (name == "minmcr") return RepKind::MinMCr;
    if (name == "minmmaxcr") return RepKind::MinMMaxCr;
    if (name == "rfccp") return RepKind::Rfccp;
    return std::nullopt;
}

std::size_t CondensedRepresentation::distinct_size() const {
    std::set<Itemset> seen;
    for (const auto& r : minimal_part) seen.insert(r.itemset);
    for (const auto& r : closed_part) seen.insert(r.itemset);
    return seen.size();
}

namespace {

bool contains_record(const std::vector<PatternRecord>& part, const Itemset& itemset,
                     PatternRecord* found = nullptr) {
    PatternRecord probe(itemset, 0, 0);
    auto it = std::lower_bound(part.begin(), part.end(), probe);
    if (it != part.end() && it->itemset == itemset) {
        if (found) *found = *it;
        return true;
    }
    return false;
}

// Inclusion-maximal elements of a canonically sorted part.
std::vector<PatternRecord> maximal_elements(const std::vector<PatternRecord>& part) {
    std::vector<PatternRecord> out;
    for (const auto& r : part) {
        bool dominated = false;
        for (const auto& other : part)
            if (other.itemset.size() > r.itemset.size() &&
                is_subset(r.itemset, other.itemset)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(r);
    }
    return out;
}

std::vector<PatternRecord> minimal_elements(const std::vector<PatternRecord>& part) {
    std::vector<PatternRecord> out;
    for (const auto& r : part) {
        bool dominated = false;
        for (const auto& other : part)
            if (other.itemset.size() < r.itemset.size() &&
                is_subset(other.itemset, r.itemset)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(r);
    }
    return out;
}

// The covering element with maximal bond lies in the queried itemset's
// equivalence class, so its support pair is the exact answer.
const PatternRecord* best_covering(const CondensedRepresentation& rep,
                                   const Itemset& itemset) {
    const PatternRecord* best = nullptr;
    auto consider = [&](const PatternRecord& r) {
        if (!is_subset(itemset, r.itemset)) return;
        if (best == nullptr || r.conj * best->disj > best->conj * r.disj ||
            (r.conj * best->disj == best->conj * r.disj &&
             canonical_less(r.itemset, best->itemset)))
            best = &r;
    };
    for (const auto& r : rep.minimal_part) consider(r);
    for (const auto& r : rep.closed_part) consider(r);
    return best;
}

bool has_stored_subset(const CondensedRepresentation& rep, const Itemset& itemset) {
    for (const auto& r : rep.minimal_part)
        if (is_subset(r.itemset, itemset)) return true;
    for (const auto& r : rep.closed_part)
        if (is_subset(r.itemset, itemset)) return true;
    return false;
}

QueryAnswer answer_from(const PatternRecord& rec, std::int64_t transaction_count,
                        bool member) {
    QueryAnswer a;
    a.conj = rec.conj;
    a.disj = rec.disj;
    a.neg = transaction_count - rec.disj;
    a.bond_value = rec.bond();
    a.member = member;
    return a;
}

void require_sorted_input(const Itemset& itemset) {
    if (itemset.empty()) throw std::invalid_argument("empty itemset");
    if (!is_strictly_sorted(itemset))
        throw std::invalid_argument("itemset must be strictly sorted");
}

}  // namespace

CondensedRepresentation derive(RepKind kind, const CondensedRepresentation& rcpr) {
    if (rcpr.kind != RepKind::Rcpr)
        throw std::invalid_argument("derive expects an rcpr representation");
    CondensedRepresentation out = rcpr;
    out.kind = kind;
    switch (kind) {
        case RepKind::MMaxCr:
            out.closed_part = maximal_elements(rcpr.closed_part);
            break;
        case RepKind::MinMCr:
            out.minimal_part = minimal_elements(rcpr.minimal_part);
            break;
        case RepKind::MinMMaxCr:
            out.closed_part = maximal_elements(rcpr.closed_part);
            out.minimal_part = minimal_elements(rcpr.minimal_part);
            break;
        default:
            throw std::invalid_argument("derive targets a reduced kind");
    }
    return out;
}

std::optional<QueryAnswer> query(const CondensedRepresentation& rep, const Itemset& itemset) {
    if (rep.kind != RepKind::Rcpr && rep.kind != RepKind::MinMCr)
        throw std::invalid_argument("query expects an rcpr or minmcr representation");
    require_sorted_input(itemset);

    PatternRecord stored;
    if (contains_record(rep.minimal_part, itemset, &stored) ||
        contains_record(rep.closed_part, itemset, &stored))
        return answer_from(stored, rep.transaction_count, true);

    const PatternRecord* cover = best_covering(rep, itemset);
    if (cover == nullptr || !has_stored_subset(rep, itemset)) return std::nullopt;
    return answer_from(*cover, rep.transaction_count, false);
}

std::optional<QueryAnswer> query_mmaxcr(const CondensedRepresentation& rep,
                                        const Itemset& itemset) {
    if (rep.kind != RepKind::MMaxCr)
        throw std::invalid_argument("query_mmaxcr expects an mmaxcr representation");
    require_sorted_input(itemset);

    PatternRecord stored;
    if (contains_record(rep.minimal_part, itemset, &stored) ||
        contains_record(rep.closed_part, itemset, &stored))
        return answer_from(stored, rep.transaction_count, true);

    bool has_superset = false;
    for (const auto& r : rep.minimal_part)
        if (is_subset(itemset, r.itemset)) { has_superset = true; break; }
    if (!has_superset)
        for (const auto& r : rep.closed_part)
            if (is_subset(itemset, r.itemset)) { has_superset = true; break; }

    // Both measures decrease upward, so the answer is the minimum over
    // stored subsets.
    std::optional<std::int64_t> min_conj;
    std::optional<Rational> min_bond;
    auto consider = [&](const PatternRecord& r) {
        if (!is_subset(r.itemset, itemset)) return;
        if (!min_conj || r.conj < *min_conj) min_conj = r.conj;
        const Rational b = r.bond();
        if (!min_bond || b < *min_bond) min_bond = b;
    };
    for (const auto& r : rep.minimal_part) consider(r);
    for (const auto& r : rep.closed_part) consider(r);

    if (!has_superset || !min_conj) return std::nullopt;

    QueryAnswer a;
    a.conj = *min_conj;
    a.bond_value = *min_bond;
    // conj/bond is integral: the minima are the true values of the itemset.
    a.disj = *min_conj * min_bond->den / min_bond->num;
    a.neg = rep.transaction_count - a.disj;
    a.member = false;
    return a;
}

std::optional<BondInterval> query_approx(const CondensedRepresentation& rep,
                                         const Itemset& itemset) {
    if (rep.kind != RepKind::MinMMaxCr)
        throw std::invalid_argument("query_approx expects a minmmaxcr representation");
    require_sorted_input(itemset);

    PatternRecord stored;
    if (contains_record(rep.minimal_part, itemset, &stored) ||
        contains_record(rep.closed_part, itemset, &stored)) {
        BondInterval iv;
        iv.conj_lo = iv.conj_hi = stored.conj;
        iv.disj_lo = iv.disj_hi = stored.disj;
        iv.bond_lo = iv.bond_hi = stored.bond();
        return iv;
    }

    // Bounds from maximal closeds above and minimal minimals below.
    std::optional<std::int64_t> r1, r2, r3, r4;
    for (const auto& f : rep.closed_part) {
        if (!is_subset(itemset, f.itemset)) continue;
        if (!r1 || f.conj > *r1) r1 = f.conj;
        if (!r3 || f.disj < *r3) r3 = f.disj;
    }
    for (const auto& g : rep.minimal_part) {
        if (!is_subset(g.itemset, itemset)) continue;
        if (!r2 || g.conj < *r2) r2 = g.conj;
        if (!r4 || g.disj > *r4) r4 = g.disj;
    }
    const bool has_subset =
        r2.has_value() || [&] {
            for (const auto& r : rep.closed_part)
                if (is_subset(r.itemset, itemset)) return true;
            return false;
        }();
    const bool has_superset =
        r1.has_value() || [&] {
            for (const auto& r : rep.minimal_part)
                if (is_subset(itemset, r.itemset)) return true;
            return false;
        }();
    if (!has_subset || !has_superset) return std::nullopt;
    if (!r1 || !r2) return std::nullopt;

    BondInterval iv;
    iv.conj_lo = std::min(*r1, *r2);
    iv.conj_hi = std::max(*r1, *r2);
    iv.disj_lo = std::min(*r3, *r4);
    iv.disj_hi = std::max(*r3, *r4);
    iv.bond_lo = Rational(iv.conj_lo, iv.disj_hi);
    iv.bond_hi = Rational(iv.conj_hi, iv.disj_lo);
    return iv;
}

std::vector<PatternRecord> regenerate_rcp(const CondensedRepresentation& rep) {
    if (rep.kind != RepKind::Rcpr)
        throw std::invalid_argument("regenerate_rcp expects an rcpr representation");

    std::set<Itemset> seen;
    std::vector<PatternRecord> out;
    auto emit = [&](const PatternRecord& r) {
        if (seen.insert(r.itemset).second) out.push_back(r);
    };
    for (const auto& r : rep.minimal_part) emit(r);
    for (const auto& r : rep.closed_part) emit(r);

    for (const auto& generator : rep.minimal_part) {
        // The closure is the unique closed superset with the same support pair.
        const PatternRecord* closure = nullptr;
        for (const auto& c : rep.closed_part)
            if (c.conj == generator.conj && c.disj == generator.disj &&
                is_subset(generator.itemset, c.itemset)) {
                closure = &c;
                break;
            }
        if (closure == nullptr)
            throw std::invalid_argument("generator without closure: not a valid rcpr");

        const Itemset extra = set_difference(closure->itemset, generator.itemset);
        if (extra.size() > 30)
            throw std::runtime_error("equivalence class too wide to expand");
        // Every pattern between the generator and its closure shares the
        // closure's supports.
        const std::uint32_t subsets = 1u << extra.size();
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            Itemset items = generator.itemset;
            for (std::size_t k = 0; k < extra.size(); ++k)
                if (mask & (1u << k)) items.push_back(extra[k]);
            std::sort(items.begin(), items.end());
            emit(PatternRecord(std::move(items), closure->conj, closure->disj));
        }
    }
    canonical_sort(out);
    return out;
}

Rational compactness(const CondensedRepresentation& rep, std::int64_t full_set_size) {
    if (full_set_size <= 0) throw std::invalid_argument("full set size must be positive");
    const std::int64_t distinct = static_cast<std::int64_t>(rep.distinct_size());
    if (distinct > full_set_size)
        throw std::invalid_argument("representation larger than the full set");
    return Rational(full_set_size - distinct, full_set_size);
}

}  // namespace bondmine
