// representation.hpp -- condensed representations of correlated pattern sets:
// build, reduce, query and regenerate.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bondmine/pattern.hpp"
#include "bondmine/rational.hpp"

namespace bondmine {

enum class RepKind { Rcpr, MMaxCr, MinMCr, MinMMaxCr, Rfccp };

std::string rep_kind_name(RepKind kind);
std::optional<RepKind> rep_kind_from_name(const std::string& name);

struct MiningThresholds {
    std::int64_t minsupp = 1;  // absolute
    Rational minbond{1, 1};
};

/// Tagged pattern collection: a minimal-generator part and a closed part.
/// Itemsets are original ids, canonically sorted within each part.
struct CondensedRepresentation {
    RepKind kind = RepKind::Rcpr;
    std::vector<PatternRecord> minimal_part;
    std::vector<PatternRecord> closed_part;
    std::int64_t transaction_count = 0;
    MiningThresholds thresholds;

    /// Distinct element count over both parts (the size metric).
    std::size_t distinct_size() const;
};

/// Exact query answer for an itemset covered by a representation.
struct QueryAnswer {
    std::int64_t conj = 0;
    std::int64_t disj = 0;
    std::int64_t neg = 0;
    Rational bond_value{0, 1};
    bool member = false;  // itemset stored verbatim in the representation
};

struct BondInterval {
    std::int64_t conj_lo = 0, conj_hi = 0;
    std::int64_t disj_lo = 0, disj_hi = 0;
    Rational bond_lo{0, 1}, bond_hi{0, 1};
};

/// MMaxCr keeps the minimal part and only the inclusion-maximal closeds;
/// MinMCr keeps the closed part and only the inclusion-minimal minimals;
/// MinMMaxCr applies both reductions. Input must be of kind Rcpr.
CondensedRepresentation derive(RepKind kind, const CondensedRepresentation& rcpr);

/// Exact membership/support query against an Rcpr or MinMCr representation:
/// stored record, or closure-localized values, or not-rare-correlated.
std::optional<QueryAnswer> query(const CondensedRepresentation& rep, const Itemset& itemset);

/// Exact query against an MMaxCr representation; non-member hits take the
/// minimum conjunctive support and bond over stored subsets.
std::optional<QueryAnswer> query_mmaxcr(const CondensedRepresentation& rep,
                                        const Itemset& itemset);

/// Approximate query against a MinMMaxCr representation; non-member hits get
/// interval bounds, members a degenerate interval.
std::optional<BondInterval> query_approx(const CondensedRepresentation& rep,
                                         const Itemset& itemset);

/// Expands an Rcpr representation back into the full rare correlated set:
/// all stored elements plus every pattern between each minimal generator and
/// its closure, deduplicated and canonically sorted.
std::vector<PatternRecord> regenerate_rcp(const CondensedRepresentation& rep);

/// 1 - distinct(rep)/full_set_size.
Rational compactness(const CondensedRepresentation& rep, std::int64_t full_set_size);

}  // namespace bondmine
