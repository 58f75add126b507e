#include <atomic>
#include <map>
#include <thread>

#include "bondmine/measures.hpp"
#include "bondmine/miner.hpp"
#include "miner_internal.hpp"

namespace bondmine {

namespace {

using detail::SupportKey;

struct TreeContext {
    const TransactionDb* db = nullptr;
    std::int64_t minsupp = 0;
    Rational minbond{1, 5};
    bool collect_rare = false;     // Rcp/Rcpr vs Fcp/Rfccp
    bool frequency_prunes = false; // frequent-side scenarios stop at rare nodes
};

struct ThreadOut {
    std::vector<PatternRecord> answers;
    MiningStats stats;
};

struct TailEntry {
    ItemId item;
    Bitset cover;  // AND of the path bitsets including this item
    std::int64_t conj;
};

// Depth-first growth: each tail entry is evaluated as a node; nodes failing
// the correlation test drop out with their whole subtree (bond is
// anti-monotone, so nothing correlated is lost), surviving siblings join
// pairwise to form the next level.
void grow(const TreeContext& ctx, const Itemset& path_items, const Bitset& path_or,
          std::vector<TailEntry> tail, ThreadOut& out) {
    std::vector<std::size_t> survivors;
    std::vector<Bitset> or_covers(tail.size());
    survivors.reserve(tail.size());

    for (std::size_t k = 0; k < tail.size(); ++k) {
        const TailEntry& head = tail[k];
        or_covers[k] = path_or;
        or_covers[k] |= ctx.db->presence(head.item);
        const std::int64_t disj = static_cast<std::int64_t>(or_covers[k].count());

        if (!detail::correlated(head.conj, disj, ctx.minbond)) {
            ++out.stats.pruned_uncorrelated;
            continue;
        }
        const bool rare = head.conj < ctx.minsupp;
        if (rare == ctx.collect_rare) {
            Itemset sorted = path_items;
            sorted.push_back(head.item);
            std::sort(sorted.begin(), sorted.end());
            out.answers.emplace_back(std::move(sorted), head.conj, disj);
        }
        if (ctx.frequency_prunes && rare) continue;  // no frequent supersets
        survivors.push_back(k);
    }

    for (std::size_t s = 0; s < survivors.size(); ++s) {
        const TailEntry& head = tail[survivors[s]];
        std::vector<TailEntry> child_tail;
        for (std::size_t m = s + 1; m < survivors.size(); ++m) {
            ++out.stats.candidates_generated;
            TailEntry child;
            child.item = tail[survivors[m]].item;
            child.cover = head.cover;
            child.cover &= tail[survivors[m]].cover;
            child.conj = static_cast<std::int64_t>(child.cover.count());
            if (child.conj == 0) {
                ++out.stats.pruned_zero_support;
                continue;
            }
            child_tail.push_back(std::move(child));
        }
        if (child_tail.empty()) continue;
        Itemset items = path_items;
        items.push_back(head.item);
        grow(ctx, items, or_covers[survivors[s]], std::move(child_tail), out);
    }
}

ThreadOut mine_root(const TreeContext& ctx, const std::vector<ItemId>& order,
                    std::size_t root_pos) {
    ThreadOut out;
    const TransactionDb& db = *ctx.db;
    const ItemId root = order[root_pos];
    const std::int64_t support = db.item_support(root);

    const bool rare = support < ctx.minsupp;
    if (rare == ctx.collect_rare)
        out.answers.emplace_back(Itemset{root}, support, support);
    if (ctx.frequency_prunes && rare) return out;

    std::vector<TailEntry> tail;
    for (std::size_t m = root_pos + 1; m < order.size(); ++m) {
        ++out.stats.candidates_generated;
        TailEntry child;
        child.item = order[m];
        child.cover = db.presence(root);
        child.cover &= db.presence(order[m]);
        child.conj = static_cast<std::int64_t>(child.cover.count());
        if (child.conj == 0) {
            ++out.stats.pruned_zero_support;
            continue;
        }
        tail.push_back(std::move(child));
    }
    if (!tail.empty())
        grow(ctx, Itemset{root}, db.presence(root), std::move(tail), out);
    return out;
}

// Minimal/closed filters over a complete scenario set by support-pair key:
// an equal-bond direct neighbour of a member is itself a member, so the
// in-set check is exact.
std::vector<PatternRecord> minimal_within(const std::vector<PatternRecord>& set) {
    return detail::filter_no_equal_key_direct_subset(set);
}
std::vector<PatternRecord> closed_within(const std::vector<PatternRecord>& set) {
    return detail::filter_no_equal_key_direct_superset(set);
}

}  // namespace

std::vector<ItemId> opt_item_order(const TransactionDb& db) {
    std::vector<ItemId> order;
    for (ItemId i = 0; i < db.item_count(); ++i)
        if (db.item_support(i) > 0) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
        if (db.item_support(a) != db.item_support(b))
            return db.item_support(a) < db.item_support(b);
        return db.item_name(a) < db.item_name(b);
    });
    return order;
}

MineResult mine_opt(const TransactionDb& db, const MiningConfig& config,
                    unsigned workers) {
    config.validate(db.transaction_count());

    TreeContext ctx;
    ctx.db = &db;
    ctx.minsupp = config.resolve_minsupp(db.transaction_count());
    ctx.minbond = config.minbond;
    ctx.collect_rare =
        config.scenario == Scenario::Rcp || config.scenario == Scenario::Rcpr;
    ctx.frequency_prunes = !ctx.collect_rare;

    const std::vector<ItemId> order = opt_item_order(db);

    std::vector<ThreadOut> per_root(order.size());
    if (workers <= 1 || order.size() <= 1) {
        for (std::size_t k = 0; k < order.size(); ++k)
            per_root[k] = mine_root(ctx, order, k);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto work = [&]() {
            for (;;) {
                const std::size_t k = cursor.fetch_add(1);
                if (k >= order.size()) return;
                per_root[k] = mine_root(ctx, order, k);
            }
        };
        std::vector<std::thread> pool;
        const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(order.size()));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    MineResult result;
    result.scenario = config.scenario;
    std::vector<PatternRecord> collected;
    for (const ThreadOut& t : per_root) {
        collected.insert(collected.end(), t.answers.begin(), t.answers.end());
        result.stats.candidates_generated += t.stats.candidates_generated;
        result.stats.pruned_zero_support += t.stats.pruned_zero_support;
        result.stats.pruned_uncorrelated += t.stats.pruned_uncorrelated;
    }

    MiningThresholds thresholds{ctx.minsupp, ctx.minbond};
    switch (config.scenario) {
        case Scenario::Fcp:
        case Scenario::Rcp:
            result.patterns = detail::to_original(db, std::move(collected));
            break;
        case Scenario::Rcpr: {
            // Post-processing of the mined rare correlated set.
            std::vector<PatternRecord> mins = minimal_within(collected);
            std::vector<PatternRecord> clos = closed_within(collected);
            result.rep = detail::assemble_representation(db, RepKind::Rcpr, std::move(mins),
                                                         std::move(clos), thresholds);
            break;
        }
        case Scenario::Rfccp: {
            std::vector<PatternRecord> gens = minimal_within(collected);
            std::vector<PatternRecord> clos = closed_within(collected);
            result.generators = detail::to_original(db, std::move(gens));
            result.rep = detail::assemble_representation(db, RepKind::Rfccp, {},
                                                         std::move(clos), thresholds);
            break;
        }
    }
    return result;
}

}  // namespace bondmine
