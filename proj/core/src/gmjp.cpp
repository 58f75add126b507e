#include "bondmine/miner.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "bondmine/measures.hpp"
#include "miner_internal.hpp"

namespace bondmine {

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Fcp: return "fcp";
        case Scenario::Rfccp: return "rfccp";
        case Scenario::Rcp: return "rcp";
        case Scenario::Rcpr: return "rcpr";
    }
    return "?";
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
    if (name == "fcp") return Scenario::Fcp;
    if (name == "rfccp") return Scenario::Rfccp;
    if (name == "rcp") return Scenario::Rcp;
    if (name == "rcpr") return Scenario::Rcpr;
    return std::nullopt;
}

std::int64_t MiningConfig::resolve_minsupp(std::size_t transaction_count) const {
    if (!minsupp_is_fraction) return minsupp_absolute;
    // ceiling keeps "rare" strict for fractional thresholds
    const std::int64_t t = static_cast<std::int64_t>(transaction_count);
    return (minsupp_fraction.num * t + minsupp_fraction.den - 1) / minsupp_fraction.den;
}

void MiningConfig::validate(std::size_t transaction_count) const {
    if (minbond.num <= 0 || minbond.num > minbond.den)
        throw std::invalid_argument("minbond must lie in (0, 1]");
    const std::int64_t ms = resolve_minsupp(transaction_count);
    if (ms < 1 || ms > static_cast<std::int64_t>(transaction_count))
        throw std::invalid_argument("minsupp must lie in [1, |T|]");
}

namespace detail {

namespace {

struct KeyedPatterns {
    // (conj, disj) -> indices into `patterns`, grouped for neighbour lookups
    std::map<SupportKey, std::vector<std::size_t>> buckets;
    const std::vector<PatternRecord>* patterns = nullptr;

    explicit KeyedPatterns(const std::vector<PatternRecord>& p) : patterns(&p) {
        for (std::size_t k = 0; k < p.size(); ++k)
            buckets[key_of(p[k])].push_back(k);
    }
};

}  // namespace

std::vector<PatternRecord> filter_no_equal_key_direct_subset(
    const std::vector<PatternRecord>& patterns) {
    KeyedPatterns keyed(patterns);
    std::vector<PatternRecord> out;
    for (const PatternRecord& x : patterns) {
        bool dominated = false;
        const auto& bucket = keyed.buckets[key_of(x)];
        for (std::size_t idx : bucket) {
            const PatternRecord& other = patterns[idx];
            if (other.itemset.size() + 1 == x.itemset.size() &&
                is_subset(other.itemset, x.itemset)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(x);
    }
    canonical_sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PatternRecord> filter_no_equal_key_direct_superset(
    const std::vector<PatternRecord>& patterns) {
    KeyedPatterns keyed(patterns);
    std::vector<PatternRecord> out;
    for (const PatternRecord& x : patterns) {
        bool dominated = false;
        const auto& bucket = keyed.buckets[key_of(x)];
        for (std::size_t idx : bucket) {
            const PatternRecord& other = patterns[idx];
            if (other.itemset.size() == x.itemset.size() + 1 &&
                is_subset(x.itemset, other.itemset)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(x);
    }
    canonical_sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CondensedRepresentation assemble_representation(
    const TransactionDb& db, RepKind kind, std::vector<PatternRecord> minimal_internal,
    std::vector<PatternRecord> closed_internal, const MiningThresholds& thresholds) {
    CondensedRepresentation rep;
    rep.kind = kind;
    rep.minimal_part = to_original(db, std::move(minimal_internal));
    rep.closed_part = to_original(db, std::move(closed_internal));
    rep.transaction_count = static_cast<std::int64_t>(db.transaction_count());
    rep.thresholds = thresholds;
    return rep;
}

}  // namespace detail

namespace {

using detail::SupportKey;

struct Candidate {
    Itemset items;  // internal ids, all containing the subproblem item
    std::int64_t conj = 0;
    std::int64_t disj = 0;
    Bitset and_cover;
    Bitset or_cover;
};

struct Level {
    std::vector<Candidate> cands;
    std::map<SupportKey, std::vector<std::size_t>> by_key;
    std::set<Itemset> present;  // order-ideal subset checks at the next level

    void add(Candidate c) {
        by_key[{c.conj, c.disj}].push_back(cands.size());
        present.insert(c.items);
        cands.push_back(std::move(c));
    }
};

struct SubproblemOut {
    std::vector<PatternRecord> local_minimals;
    std::vector<PatternRecord> local_closeds;
    std::vector<PatternRecord> answers;  // plain Fcp/Rcp collection
    MiningStats stats;
};

// Constraint pair of the subproblem: which candidates make it into the
// scenario's collection, and whether frequency prunes the extension.
struct ScenarioPolicy {
    bool collect_rare;       // rare side (Rcp / Rcpr) vs frequent side
    bool track_min_closed;   // Rcpr / Rfccp need local minimal+closed machinery
    bool frequency_prunes;   // Fcp / Rfccp: infrequent candidates stop extending
};

ScenarioPolicy policy_for(Scenario s) {
    switch (s) {
        case Scenario::Fcp: return {false, false, true};
        case Scenario::Rfccp: return {false, true, true};
        case Scenario::Rcp: return {true, false, false};
        case Scenario::Rcpr: return {true, true, false};
    }
    return {true, true, false};
}

bool in_collection(const ScenarioPolicy& pol, std::int64_t conj, std::int64_t minsupp) {
    return pol.collect_rare ? conj < minsupp : conj >= minsupp;
}

// Level-wise mining of the sub-space rooted at `item`: candidates grow only
// with co-occurring items after `item` in the global order, so every itemset
// has a unique discovery owner.
SubproblemOut run_subproblem(const TransactionDb& db, ItemId item,
                             const ScenarioPolicy& pol, std::int64_t minsupp,
                             const Rational& minbond) {
    SubproblemOut out;
    const std::int64_t own_support = db.item_support(item);

    std::vector<ItemId> ext;
    if (!(pol.frequency_prunes && own_support < minsupp))
        for (ItemId j : db.co_occurrence(item))
            if (j > item && db.item_support(j) > 0) ext.push_back(j);

    Candidate root;
    root.items = {item};
    root.conj = root.disj = own_support;
    root.and_cover = db.presence(item);
    root.or_cover = db.presence(item);

    std::vector<Level> levels(1);
    levels[0].add(std::move(root));

    // Tracks, per level, which retained candidates belong to the scenario
    // collection and still await the local-closed decision.
    auto collect_level = [&](std::size_t n) {
        const Level& level = levels[n];
        const Level* next = n + 1 < levels.size() ? &levels[n + 1] : nullptr;
        for (const Candidate& c : level.cands) {
            if (!in_collection(pol, c.conj, minsupp)) continue;
            PatternRecord rec(c.items, c.conj, c.disj);
            if (!pol.track_min_closed) {
                out.answers.push_back(rec);
                continue;
            }
            // Local minimal: no immediate subset in scope shares the support
            // pair. Singletons are minimal outright.
            bool minimal = true;
            if (n > 0) {
                const Level& prev = levels[n - 1];
                auto it = prev.by_key.find({c.conj, c.disj});
                if (it != prev.by_key.end())
                    for (std::size_t idx : it->second)
                        if (is_subset(prev.cands[idx].items, c.items)) {
                            minimal = false;
                            break;
                        }
            }
            if (minimal) out.local_minimals.push_back(rec);

            // Local closed: no immediate superset in scope shares the pair.
            bool closed = true;
            if (next != nullptr) {
                auto it = next->by_key.find({c.conj, c.disj});
                if (it != next->by_key.end())
                    for (std::size_t idx : it->second)
                        if (is_subset(c.items, next->cands[idx].items)) {
                            closed = false;
                            break;
                        }
            }
            if (closed) out.local_closeds.push_back(rec);
        }
    };

    // Level 2 from the co-occurrence list.
    {
        Level level2;
        const Level& level1 = levels[0];
        const Candidate& base = level1.cands[0];
        for (ItemId j : ext) {
            ++out.stats.candidates_generated;
            Itemset items{item, j};
            std::sort(items.begin(), items.end());
            if (cross_support_violates(db, items, minbond)) {
                ++out.stats.pruned_cross_support;
                continue;
            }
            Candidate c;
            c.items = std::move(items);
            c.and_cover = base.and_cover;
            c.and_cover &= db.presence(j);
            c.or_cover = base.or_cover;
            c.or_cover |= db.presence(j);
            c.conj = static_cast<std::int64_t>(c.and_cover.count());
            c.disj = static_cast<std::int64_t>(c.or_cover.count());
            if (!detail::correlated(c.conj, c.disj, minbond)) {
                ++out.stats.pruned_uncorrelated;
                continue;
            }
            if (pol.frequency_prunes && c.conj < minsupp) continue;
            level2.add(std::move(c));
        }
        levels.push_back(std::move(level2));
    }

    // Deeper levels by prefix join over the retained previous level.
    while (!levels.back().cands.empty()) {
        const Level& prev = levels.back();
        Level next;
        for (std::size_t a = 0; a < prev.cands.size(); ++a) {
            for (std::size_t b = a + 1; b < prev.cands.size(); ++b) {
                const Candidate& p = prev.cands[a];
                const Candidate& q = prev.cands[b];
                // Candidates are lexicographic, so equal prefixes are contiguous.
                if (!std::equal(p.items.begin(), p.items.end() - 1, q.items.begin(),
                                q.items.end() - 1))
                    break;
                ++out.stats.candidates_generated;
                Itemset items = set_union(p.items, q.items);

                // Order-ideal check over in-scope immediate subsets.
                bool all_subsets_retained = true;
                for (std::size_t drop = 0; drop < items.size(); ++drop) {
                    if (items[drop] == item) continue;
                    Itemset sub;
                    sub.reserve(items.size() - 1);
                    for (std::size_t k = 0; k < items.size(); ++k)
                        if (k != drop) sub.push_back(items[k]);
                    if (sub == p.items || sub == q.items) continue;
                    if (!prev.present.count(sub)) {
                        all_subsets_retained = false;
                        break;
                    }
                }
                if (!all_subsets_retained) {
                    ++out.stats.pruned_order_ideal;
                    continue;
                }
                if (cross_support_violates(db, items, minbond)) {
                    ++out.stats.pruned_cross_support;
                    continue;
                }
                Candidate c;
                c.items = std::move(items);
                c.and_cover = p.and_cover;
                c.and_cover &= q.and_cover;
                c.or_cover = p.or_cover;
                c.or_cover |= q.or_cover;
                c.conj = static_cast<std::int64_t>(c.and_cover.count());
                c.disj = static_cast<std::int64_t>(c.or_cover.count());
                if (!detail::correlated(c.conj, c.disj, minbond)) {
                    ++out.stats.pruned_uncorrelated;
                    continue;
                }
                if (pol.frequency_prunes && c.conj < minsupp) continue;
                next.add(std::move(c));
            }
        }
        levels.push_back(std::move(next));
    }

    for (std::size_t n = 0; n < levels.size(); ++n) collect_level(n);
    return out;
}

}  // namespace

MineResult mine_gmjp(const TransactionDb& db, const MiningConfig& config,
                     unsigned workers) {
    config.validate(db.transaction_count());
    const std::int64_t minsupp = config.resolve_minsupp(db.transaction_count());
    const Rational minbond = config.minbond;
    const ScenarioPolicy pol = policy_for(config.scenario);

    std::vector<ItemId> items;
    for (ItemId i = 0; i < db.item_count(); ++i)
        if (db.item_support(i) > 0) items.push_back(i);

    std::vector<SubproblemOut> per_item(items.size());
    if (workers <= 1 || items.size() <= 1) {
        for (std::size_t k = 0; k < items.size(); ++k)
            per_item[k] = run_subproblem(db, items[k], pol, minsupp, minbond);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto work = [&]() {
            for (;;) {
                const std::size_t k = cursor.fetch_add(1);
                if (k >= items.size()) return;
                per_item[k] = run_subproblem(db, items[k], pol, minsupp, minbond);
            }
        };
        std::vector<std::thread> pool;
        const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(items.size()));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Merge in canonical item order so output is worker-count independent.
    MineResult result;
    result.scenario = config.scenario;
    std::vector<PatternRecord> minimals, closeds, answers;
    for (const SubproblemOut& sub : per_item) {
        minimals.insert(minimals.end(), sub.local_minimals.begin(), sub.local_minimals.end());
        closeds.insert(closeds.end(), sub.local_closeds.begin(), sub.local_closeds.end());
        answers.insert(answers.end(), sub.answers.begin(), sub.answers.end());
        result.stats.candidates_generated += sub.stats.candidates_generated;
        result.stats.pruned_cross_support += sub.stats.pruned_cross_support;
        result.stats.pruned_order_ideal += sub.stats.pruned_order_ideal;
        result.stats.pruned_uncorrelated += sub.stats.pruned_uncorrelated;
    }

    MiningThresholds thresholds{minsupp, minbond};
    if (!pol.track_min_closed) {
        result.patterns = detail::to_original(db, std::move(answers));
        return result;
    }

    std::vector<PatternRecord> global_min = detail::filter_no_equal_key_direct_subset(minimals);
    std::vector<PatternRecord> global_closed =
        detail::filter_no_equal_key_direct_superset(closeds);

    if (config.scenario == Scenario::Rcpr) {
        result.rep = detail::assemble_representation(db, RepKind::Rcpr, std::move(global_min),
                                                     std::move(global_closed), thresholds);
    } else {
        // Rfccp: the closed side is the representation, the minimal side is
        // the generator byproduct for rule derivation.
        result.generators = detail::to_original(db, std::move(global_min));
        result.rep = detail::assemble_representation(db, RepKind::Rfccp, {},
                                                     std::move(global_closed), thresholds);
    }
    return result;
}

}  // namespace bondmine
