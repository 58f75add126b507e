#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "bondmine/io.hpp"
#include "bondmine/miner.hpp"
#include "bondmine/oracle.hpp"
#include "helpers.hpp"

using namespace bondmine;
using namespace testutil;

namespace {

CondensedRepresentation toy_rcpr() {
    TransactionDb db = toy_db();
    MiningConfig cfg;
    cfg.minsupp_absolute = 4;
    cfg.minbond = Rational(1, 5);
    cfg.scenario = Scenario::Rcpr;
    return mine_gmjp(db, cfg).rep;
}

Itemset originals(std::initializer_list<std::int64_t> ids) {
    Itemset s;
    for (auto v : ids) s.push_back(static_cast<ItemId>(v));
    std::sort(s.begin(), s.end());
    return s;
}

std::set<Itemset> part_sets(const CondensedRepresentation& rep) {
    std::set<Itemset> out;
    for (const auto& r : rep.minimal_part) out.insert(r.itemset);
    for (const auto& r : rep.closed_part) out.insert(r.itemset);
    return out;
}

// Reference reduction of a pattern set to its minimal/closed members by
// direct-neighbour bond equality, written independently of the miners.
std::vector<PatternRecord> reference_minimals(const std::vector<PatternRecord>& set) {
    std::map<Itemset, std::pair<std::int64_t, std::int64_t>> keys;
    for (const auto& r : set) keys[r.itemset] = {r.conj, r.disj};
    std::vector<PatternRecord> out;
    for (const auto& r : set) {
        bool minimal = true;
        for (std::size_t drop = 0; drop < r.itemset.size() && minimal; ++drop) {
            if (r.itemset.size() == 1) break;
            Itemset sub;
            for (std::size_t k = 0; k < r.itemset.size(); ++k)
                if (k != drop) sub.push_back(r.itemset[k]);
            auto it = keys.find(sub);
            if (it != keys.end() && it->second == std::make_pair(r.conj, r.disj))
                minimal = false;
        }
        if (minimal) out.push_back(r);
    }
    canonical_sort(out);
    return out;
}

std::vector<PatternRecord> reference_closeds(const std::vector<PatternRecord>& set) {
    std::map<Itemset, std::pair<std::int64_t, std::int64_t>> keys;
    for (const auto& r : set) keys[r.itemset] = {r.conj, r.disj};
    std::vector<PatternRecord> out;
    for (const auto& r : set) {
        bool closed = true;
        for (const auto& other : set) {
            if (other.itemset.size() != r.itemset.size() + 1) continue;
            if (!is_subset(r.itemset, other.itemset)) continue;
            if (other.conj == r.conj && other.disj == r.disj) {
                closed = false;
                break;
            }
        }
        if (closed) out.push_back(r);
    }
    canonical_sort(out);
    return out;
}

}  // namespace

TEST_CASE("reductions drop exactly the published elements") {
    const CondensedRepresentation rcpr = toy_rcpr();

    SUBCASE("maximal-closed reduction drops only BCE") {
        const auto reduced = derive(RepKind::MMaxCr, rcpr);
        CHECK(reduced.distinct_size() == 11);
        const auto sets = part_sets(reduced);
        CHECK_FALSE(sets.count(originals({kB, kC, kE})));
        CHECK(sets.count(originals({kA, kC, kD})));
        CHECK(sets.count(originals({kA, kB, kC, kE})));
        CHECK(reduced.minimal_part == rcpr.minimal_part);
    }
    SUBCASE("minimal-minimal reduction drops AB, AE and CD") {
        const auto reduced = derive(RepKind::MinMCr, rcpr);
        CHECK(reduced.distinct_size() == 9);
        const auto sets = part_sets(reduced);
        CHECK_FALSE(sets.count(originals({kA, kB})));
        CHECK_FALSE(sets.count(originals({kA, kE})));
        CHECK_FALSE(sets.count(originals({kC, kD})));
        CHECK(reduced.closed_part == rcpr.closed_part);
    }
    SUBCASE("double reduction keeps the six-element core") {
        const auto reduced = derive(RepKind::MinMMaxCr, rcpr);
        CHECK(part_sets(reduced) ==
              std::set<Itemset>{originals({kA}), originals({kD}), originals({kB, kC}),
                                originals({kC, kE}), originals({kA, kC, kD}),
                                originals({kA, kB, kC, kE})});
    }
    SUBCASE("derive rejects non-rcpr input") {
        const auto reduced = derive(RepKind::MMaxCr, rcpr);
        CHECK_THROWS_AS(derive(RepKind::MinMCr, reduced), std::invalid_argument);
    }
}

TEST_CASE("exact query against the toy rcpr") {
    const CondensedRepresentation rcpr = toy_rcpr();

    SUBCASE("stored member") {
        const auto hit = query(rcpr, originals({kA, kD}));
        REQUIRE(hit.has_value());
        CHECK(hit->member);
        CHECK(hit->conj == 1);
        CHECK(hit->disj == 3);
        CHECK(hit->bond_value == Rational(1, 3));
    }
    SUBCASE("covered non-member gets its closure's values") {
        const auto hit = query(rcpr, originals({kA, kC, kE}));
        REQUIRE(hit.has_value());
        CHECK_FALSE(hit->member);
        CHECK(hit->conj == 2);
        CHECK(hit->disj == 5);
        CHECK(hit->neg == 0);
        CHECK(hit->bond_value == Rational(2, 5));
    }
    SUBCASE("pattern with covers but no stored subset is not rare correlated") {
        CHECK_FALSE(query(rcpr, originals({kB, kE})).has_value());
    }
    SUBCASE("unknown items are simply not covered") {
        CHECK_FALSE(query(rcpr, originals({77})).has_value());
    }
}

TEST_CASE("minimum-over-subsets query against the reduced representation") {
    const auto mmaxcr = derive(RepKind::MMaxCr, toy_rcpr());
    SUBCASE("ABE resolves through its stored subsets AB and AE") {
        const auto hit = query_mmaxcr(mmaxcr, originals({kA, kB, kE}));
        REQUIRE(hit.has_value());
        CHECK(hit->conj == 2);
        CHECK(hit->bond_value == Rational(2, 5));
        CHECK(hit->disj == 5);
    }
    SUBCASE("member answers from its record") {
        const auto hit = query_mmaxcr(mmaxcr, originals({kA, kC}));
        REQUIRE(hit.has_value());
        CHECK(hit->member);
        CHECK(hit->conj == 3);
    }
    SUBCASE("non-covered pattern") {
        CHECK_FALSE(query_mmaxcr(mmaxcr, originals({kB, kE})).has_value());
    }
}

TEST_CASE("interval query against the doubly reduced representation") {
    const auto minmmaxcr = derive(RepKind::MinMMaxCr, toy_rcpr());
    SUBCASE("ABE gets bounds from its stored neighborhood") {
        // below: A with support pair (3, 3); above: ABCE with (2, 5)
        const auto iv = query_approx(minmmaxcr, originals({kA, kB, kE}));
        REQUIRE(iv.has_value());
        CHECK(iv->conj_lo == 2);
        CHECK(iv->conj_hi == 3);
        CHECK(iv->disj_lo == 3);
        CHECK(iv->disj_hi == 5);
        CHECK(iv->bond_lo == Rational(2, 5));
        CHECK(iv->bond_hi == Rational(1, 1));
        // the true values (2, 5, 2/5) sit inside every bound
    }
    SUBCASE("member gets a degenerate interval") {
        const auto iv = query_approx(minmmaxcr, originals({kA, kC, kD}));
        REQUIRE(iv.has_value());
        CHECK(iv->conj_lo == iv->conj_hi);
        CHECK(iv->conj_lo == 1);
        CHECK(iv->bond_lo == iv->bond_hi);
    }
    SUBCASE("non-member outside the cover") {
        CHECK_FALSE(query_approx(minmmaxcr, originals({kB, kE})).has_value());
    }
}

TEST_CASE("regeneration expands the toy representation to all 15 patterns") {
    const auto rcp = regenerate_rcp(toy_rcpr());
    CHECK(rcp.size() == 15);
    std::map<Itemset, PatternRecord> by_set;
    for (const auto& r : rcp) by_set[r.itemset] = r;
    for (auto ids : {originals({kA, kB, kC}), originals({kA, kB, kE}),
                     originals({kA, kC, kE})}) {
        REQUIRE(by_set.count(ids));
        CHECK(by_set[ids].conj == 2);
        CHECK(by_set[ids].bond() == Rational(2, 5));
    }
}

TEST_CASE("regeneration of a representation of singleton classes is the identity") {
    // every minimal generator is its own closure
    CondensedRepresentation rep;
    rep.kind = RepKind::Rcpr;
    rep.transaction_count = 10;
    PatternRecord a(originals({1}), 2, 2);
    PatternRecord b(originals({2, 3}), 1, 4);
    rep.minimal_part = {a, b};
    rep.closed_part = {a, b};
    canonical_sort(rep.minimal_part);
    canonical_sort(rep.closed_part);
    const auto rcp = regenerate_rcp(rep);
    CHECK(rcp == rep.closed_part);
}

TEST_CASE("compactness rates") {
    const CondensedRepresentation rcpr = toy_rcpr();
    CHECK(compactness(rcpr, 15) == Rational(1, 5));  // 20%
    CHECK(compactness(rcpr, 12) == Rational(0, 1));
    CHECK_THROWS_AS(compactness(rcpr, 0), std::invalid_argument);
    CHECK_THROWS_AS(compactness(rcpr, 5), std::invalid_argument);

    // published mushroom-scale rate: 1 - 1704/98566 rounds to 98.27%
    CondensedRepresentation big;
    big.kind = RepKind::Rcpr;
    for (std::int64_t k = 0; k < 1704; ++k) {
        PatternRecord r(originals({static_cast<std::int64_t>(k + 1)}), 1, 1);
        big.closed_part.push_back(r);
    }
    canonical_sort(big.closed_part);
    const Rational gain = compactness(big, 98566);
    CHECK(static_cast<double>(gain.num) / static_cast<double>(gain.den) ==
          doctest::Approx(0.9827).epsilon(1e-4));
}

TEST_CASE("representation queries agree with the oracle everywhere") {
    std::mt19937 rng(202);
    for (int round = 0; round < 12; ++round) {
        TransactionDb db = random_db(rng, 8, 20);
        std::uniform_int_distribution<std::int64_t> ms_d(
            1, static_cast<std::int64_t>(db.transaction_count()));
        const std::int64_t minsupp = ms_d(rng);
        const Rational minbond(1, 2 + static_cast<std::int64_t>(rng() % 4));

        MiningConfig cfg;
        cfg.minsupp_absolute = minsupp;
        cfg.minbond = minbond;
        cfg.scenario = Scenario::Rcpr;
        const auto rcpr = mine_gmjp(db, cfg).rep;
        const auto mmaxcr = derive(RepKind::MMaxCr, rcpr);
        const auto minmcr = derive(RepKind::MinMCr, rcpr);
        const auto minmmaxcr = derive(RepKind::MinMMaxCr, rcpr);

        std::set<Itemset> rcp_members;
        std::map<Itemset, PatternRecord> truth;
        const auto fam = oracle::enumerate_families(db, minsupp, minbond);
        for (const auto& r : fam.rare_correlated) {
            const auto ids = original_items(db, r.itemset);
            rcp_members.insert(ids);
            truth[ids] = PatternRecord(ids, r.conj, r.disj);
        }

        for (const Itemset& internal : all_itemsets(db)) {
            const Itemset ids = original_items(db, internal);
            const bool member = rcp_members.count(ids) != 0;

            const auto exact = query(rcpr, ids);
            const auto reduced_exact = query(minmcr, ids);
            const auto min_based = query_mmaxcr(mmaxcr, ids);
            const auto interval = query_approx(minmmaxcr, ids);

            CHECK(exact.has_value() == member);
            CHECK(reduced_exact.has_value() == member);
            CHECK(min_based.has_value() == member);
            CHECK(interval.has_value() == member);
            if (!member) continue;

            const PatternRecord& t = truth[ids];
            for (const auto& ans : {exact, reduced_exact, min_based}) {
                CHECK(ans->conj == t.conj);
                CHECK(ans->disj == t.disj);
                CHECK(ans->neg ==
                      static_cast<std::int64_t>(db.transaction_count()) - t.disj);
                CHECK(ans->bond_value == t.bond());
            }
            CHECK(interval->conj_lo <= t.conj);
            CHECK(t.conj <= interval->conj_hi);
            CHECK(interval->disj_lo <= t.disj);
            CHECK(t.disj <= interval->disj_hi);
            CHECK(interval->bond_lo <= t.bond());
            CHECK(t.bond() <= interval->bond_hi);
        }

        // regeneration and the size chain
        const auto regen = regenerate_rcp(rcpr);
        std::set<Itemset> regen_sets;
        for (const auto& r : regen) {
            regen_sets.insert(r.itemset);
            CHECK(truth.count(r.itemset));
            CHECK(truth[r.itemset].conj == r.conj);
            CHECK(truth[r.itemset].disj == r.disj);
        }
        CHECK(regen_sets == rcp_members);

        CHECK(minmmaxcr.distinct_size() <= mmaxcr.distinct_size());
        CHECK(minmmaxcr.distinct_size() <= minmcr.distinct_size());
        CHECK(mmaxcr.distinct_size() <= rcpr.distinct_size());
        CHECK(minmcr.distinct_size() <= rcpr.distinct_size());
        CHECK(rcpr.distinct_size() <= rcp_members.size());

        // recomputing the representation from the regenerated set is a
        // fixed point
        CHECK(reference_minimals(regen) == rcpr.minimal_part);
        CHECK(reference_closeds(regen) == rcpr.closed_part);
    }
}
