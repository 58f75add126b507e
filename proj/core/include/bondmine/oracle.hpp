// oracle.hpp -- brute-force reference engine over the full itemset lattice.
//
// Ground truth for property tests: Galois connection, the bond-preserving
// closure operator, equivalence classes and every pattern family, all
// computed literally from their definitions over the whole powerset.
// Guarded to small contexts (default cap 20 items, BONDMINER_ORACLE_CAP
// overrides). Never used on the CLI mining paths except under --miner oracle.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bondmine/measures.hpp"
#include "bondmine/pattern.hpp"
#include "bondmine/transaction_db.hpp"

namespace bondmine::oracle {

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Items common to all listed transactions.
Itemset galois_g(const TransactionDb& db, const std::vector<std::size_t>& transactions);

/// Transactions containing every listed item.
std::vector<std::size_t> galois_h(const TransactionDb& db, const Itemset& itemset);

/// I plus every outside item whose addition preserves the bond value.
/// Extensive, isotone and idempotent.
Itemset f_bond_closure(const TransactionDb& db, const Itemset& itemset);

struct EquivalenceClass {
    Itemset closed;
    std::vector<Itemset> minimals;
    std::int64_t conj = 0;
    std::int64_t disj = 0;
    std::vector<Itemset> members;  // populated for small instances only

    Rational bond() const { return Rational(conj, disj); }
};

struct FamilySet {
    std::vector<PatternRecord> correlated;                    // CP
    std::vector<PatternRecord> frequent_correlated;           // FCP
    std::vector<PatternRecord> rare_correlated;               // RCP
    std::vector<PatternRecord> closed_correlated;             // CCP
    std::vector<PatternRecord> minimal_correlated;            // MCP
    std::vector<PatternRecord> closed_rare_correlated;        // CRCP
    std::vector<PatternRecord> minimal_rare_correlated;       // MRCP
    std::vector<PatternRecord> maximal_correlated;            // MaxCP
    std::vector<PatternRecord> minimal_rare;                  // MinRP
    std::vector<PatternRecord> maximal_closed_rare_correlated;  // MaxCRCP
    std::vector<PatternRecord> minimal_minimal_rare_correlated; // MinMRCP
    std::vector<PatternRecord> frequent_closed_correlated;    // FCCP
};

/// Every family computed by full powerset enumeration. minsupp is absolute.
FamilySet enumerate_families(const TransactionDb& db, std::int64_t minsupp,
                             const Rational& minbond);

/// Equivalence classes of the bond-preserving closure over all itemsets with
/// defined bond, each with its closed pattern and minimal generators.
std::vector<EquivalenceClass> equivalence_classes(const TransactionDb& db,
                                                  bool keep_members = false);

/// Item-count guard honored by the enumeration entry points.
std::size_t item_cap();

/// Debug aid: the itemset lattice as DOT with family coloring.
void write_lattice_dot(std::ostream& out, const TransactionDb& db,
                       std::int64_t minsupp, const Rational& minbond);

}  // namespace bondmine::oracle
