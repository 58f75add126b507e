#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bondmine/io.hpp"
#include "helpers.hpp"

using namespace bondmine;
using namespace testutil;

TEST_CASE("supports on the toy context") {
    TransactionDb db = toy_db();
    SUBCASE("AD") {
        const auto t = supports(db, iset(db, {kA, kD}));
        CHECK(t.conj == 1);
        CHECK(t.disj == 3);
        CHECK(t.neg == 2);
    }
    SUBCASE("BCE") {
        const auto t = supports(db, iset(db, {kB, kC, kE}));
        CHECK(t.conj == 3);
        CHECK(t.disj == 5);
        CHECK(t.neg == 0);
    }
    SUBCASE("singletons have equal conjunctive and disjunctive support") {
        for (ItemId i = 0; i < db.item_count(); ++i) {
            const auto t = supports(db, {i});
            CHECK(t.conj == t.disj);
            CHECK(t.conj == db.item_support(i));
            CHECK(t.neg == static_cast<std::int64_t>(db.transaction_count()) - t.conj);
        }
    }
}

TEST_CASE("bond values on the toy context") {
    TransactionDb db = toy_db();
    CHECK(bond(db, iset(db, {kA, kB})) == Rational(2, 5));
    CHECK(bond(db, iset(db, {kA, kB, kC, kE})) == Rational(2, 5));
    CHECK(bond(db, iset(db, {kB})) == Rational(1, 1));
}

TEST_CASE("measure argument errors") {
    TransactionDb db = toy_db();
    CHECK_THROWS_AS(supports(db, {}), std::invalid_argument);
    CHECK_THROWS_AS(supports(db, {99}), std::invalid_argument);
    CHECK_THROWS_AS(supports(db, Itemset{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cross_support_violates(db, {0}, Rational(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("cross-support certifies non-correlation") {
    TransactionDb db = toy_db();
    SUBCASE("AD at minbond 0.4") {
        CHECK(cross_support_violates(db, iset(db, {kA, kD}), Rational(2, 5)));
    }
    SUBCASE("equal supports never violate") {
        CHECK_FALSE(cross_support_violates(db, iset(db, {kB, kE}), Rational(1, 1)));
    }
    SUBCASE("violation implies bond below threshold on random contexts") {
        std::mt19937 rng(11);
        for (int round = 0; round < 10; ++round) {
            TransactionDb r = random_db(rng, 8, 20);
            const Rational minbond(1, 3);
            for (const Itemset& s : all_itemsets(r)) {
                if (s.size() < 2 || s.size() > 4) continue;
                if (cross_support_violates(r, s, minbond)) {
                    const auto t = supports(r, s);
                    if (t.disj > 0) CHECK(Rational(t.conj, t.disj) < minbond);
                }
            }
        }
    }
}

TEST_CASE("inclusion-exclusion identities") {
    TransactionDb db = toy_db();
    SUBCASE("AD from its subsets") {
        SupportTable conj_table;
        conj_table[iset(db, {kA})] = 3;
        conj_table[iset(db, {kD})] = 1;
        conj_table[iset(db, {kA, kD})] = 1;
        CHECK(disj_from_conj(iset(db, {kA, kD}), conj_table) == 3);
    }
    SUBCASE("singleton is the identity") {
        SupportTable table;
        table[iset(db, {kC})] = 4;
        CHECK(disj_from_conj(iset(db, {kC}), table) == 4);
        CHECK(conj_from_disj(iset(db, {kC}), table) == 4);
    }
    SUBCASE("missing subset entry throws") {
        SupportTable table;
        table[iset(db, {kA})] = 3;
        CHECK_THROWS_AS(disj_from_conj(iset(db, {kA, kD}), table),
                        std::invalid_argument);
    }
    SUBCASE("identity matches the bitset oracle on random contexts") {
        std::mt19937 rng(5);
        for (int round = 0; round < 8; ++round) {
            TransactionDb r = random_db(rng, 6, 15);
            SupportTable conj_table, disj_table;
            for (const Itemset& s : all_itemsets(r)) {
                const auto t = supports(r, s);
                conj_table[s] = t.conj;
                disj_table[s] = t.disj;
            }
            for (const Itemset& s : all_itemsets(r)) {
                if (s.size() != 3) continue;
                const auto t = supports(r, s);
                CHECK(disj_from_conj(s, conj_table) == t.disj);
                CHECK(conj_from_disj(s, disj_table) == t.conj);
            }
        }
    }
}

TEST_CASE("support and bond monotonicity along the lattice") {
    std::mt19937 rng(23);
    for (int round = 0; round < 8; ++round) {
        TransactionDb db = random_db(rng, 6, 20);
        const auto sets = all_itemsets(db);
        for (const Itemset& small : sets) {
            if (small.size() > 4) continue;
            for (const Itemset& big : sets) {
                if (big.size() > 5 || big.size() <= small.size()) continue;
                if (!is_subset(small, big)) continue;
                const auto ts = supports(db, small);
                const auto tb = supports(db, big);
                CHECK(ts.conj >= tb.conj);
                CHECK(ts.disj <= tb.disj);
                CHECK(ts.neg == static_cast<std::int64_t>(db.transaction_count()) - ts.disj);
                if (ts.disj > 0 && tb.disj > 0) {
                    const Rational bs(ts.conj, ts.disj), bb(tb.conj, tb.disj);
                    CHECK(bs >= bb);
                    // equal positive bond along an inclusion pair forces
                    // equal supports; at bond 0 only conj is shared
                    if (bs == bb && ts.conj > 0) {
                        CHECK(ts.conj == tb.conj);
                        CHECK(ts.disj == tb.disj);
                    }
                }
            }
        }
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0, 13));
    CHECK(Rational(2, 5) < Rational(1, 2));
    CHECK(Rational(3, 5) >= Rational(3, 5));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    CHECK(parse_rational("3/20") == Rational(3, 20));
    CHECK(parse_rational("0.15") == Rational(3, 20));
    CHECK(parse_rational("1") == Rational(1, 1));
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational("1.0") == Rational(1, 1));
    CHECK_THROWS(parse_rational("x"));
}
