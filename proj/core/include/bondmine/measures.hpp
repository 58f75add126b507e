// measures.hpp -- supports, bond and cross-support pruning predicate.
//
// The empty itemset is rejected everywhere: its disjunctive support is 0 and
// its bond undefined (conventionally treated as vacuously correlated, it
// never appears in any input or output of this library).

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "bondmine/pattern.hpp"
#include "bondmine/transaction_db.hpp"

namespace bondmine {

/// Raised when bond is requested for an itemset whose disjunctive support
/// is zero (none of its items ever occurs).
struct UndefinedBondError : std::domain_error {
    UndefinedBondError() : std::domain_error("bond undefined: disjunctive support is 0") {}
};

struct SupportTriple {
    std::int64_t conj = 0;
    std::int64_t disj = 0;
    std::int64_t neg = 0;
};

/// conj = |AND of member bitsets|, disj = |OR|, neg = |T| - disj.
/// The itemset must be non-empty with valid ids.
SupportTriple supports(const TransactionDb& db, const Itemset& itemset);

/// bond(I) = Supp(and I) / Supp(or I), exact.
Rational bond(const TransactionDb& db, const Itemset& itemset);

/// True iff min item support / max item support < minbond, which certifies
/// bond(itemset) < minbond without counting supports. Requires >= 2 items.
bool cross_support_violates(const TransactionDb& db, const Itemset& itemset,
                            const Rational& minbond);

using SupportTable = std::map<Itemset, std::int64_t>;

/// Inclusion-exclusion: disjunctive support of `target` from the conjunctive
/// supports of all its non-empty subsets. Throws on a missing entry.
std::int64_t disj_from_conj(const Itemset& target, const SupportTable& conj_of_subsets);

/// Dual identity: conjunctive support from disjunctive subset supports.
std::int64_t conj_from_disj(const Itemset& target, const SupportTable& disj_of_subsets);

}  // namespace bondmine
