// miner.hpp -- mining configuration and the two miners.
//
// Both miners emit identical, canonically sorted results for the same
// (database, config); per-item subproblems and per-root subtrees run on
// worker threads and merge deterministically.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bondmine/pattern.hpp"
#include "bondmine/representation.hpp"
#include "bondmine/transaction_db.hpp"

namespace bondmine {

enum class Scenario { Fcp, Rfccp, Rcp, Rcpr };

std::string scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(const std::string& name);

struct MiningConfig {
    // Either an absolute count or a fraction of |T| (converted by ceiling).
    std::int64_t minsupp_absolute = 0;
    Rational minsupp_fraction{0, 1};
    bool minsupp_is_fraction = false;

    Rational minbond{1, 5};
    Scenario scenario = Scenario::Rcpr;

    std::int64_t resolve_minsupp(std::size_t transaction_count) const;
    void validate(std::size_t transaction_count) const;
};

struct MiningStats {
    std::size_t candidates_generated = 0;
    std::size_t pruned_cross_support = 0;
    std::size_t pruned_order_ideal = 0;
    std::size_t pruned_zero_support = 0;
    std::size_t pruned_uncorrelated = 0;
};

struct MineResult {
    Scenario scenario = Scenario::Rcpr;
    // Fcp / Rcp scenarios: the plain pattern set.
    std::vector<PatternRecord> patterns;
    // Rcpr / Rfccp scenarios: the condensed representation.
    CondensedRepresentation rep;
    // Rfccp extended output: frequent minimal correlated generators,
    // needed for generic rule derivation.
    std::vector<PatternRecord> generators;
    MiningStats stats;
};

/// Level-wise per-item miner: candidate generation from co-occurrence lists
/// with cross-support and order-ideal pruning, local minimal/closed detection
/// by support-pair equality, then global filtering.
MineResult mine_gmjp(const TransactionDb& db, const MiningConfig& config,
                     unsigned workers = 1);

/// Depth-first tree miner over support-ascending items, pruning whole
/// subtrees on correlation failure.
MineResult mine_opt(const TransactionDb& db, const MiningConfig& config,
                    unsigned workers = 1);

/// The item order used by the tree miner: ascending conjunctive support,
/// ties by ascending original id. Returns internal ids.
std::vector<ItemId> opt_item_order(const TransactionDb& db);

}  // namespace bondmine
