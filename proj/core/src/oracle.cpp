#include "bondmine/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <ostream>

namespace bondmine::oracle {

namespace {

Itemset mask_to_itemset(std::uint32_t mask) {
    Itemset s;
    while (mask) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(mask));
        s.push_back(static_cast<ItemId>(b));
        mask &= mask - 1;
    }
    return s;
}

// Per-mask conjunctive/disjunctive transaction covers, T <= 64.
struct Lattice {
    std::size_t n_items = 0;
    std::size_t n_tx = 0;
    std::vector<std::uint64_t> item_bits;
    std::vector<std::int64_t> conj;
    std::vector<std::int64_t> disj;

    explicit Lattice(const TransactionDb& db) {
        n_items = db.item_count();
        n_tx = db.transaction_count();
        if (n_items > item_cap())
            throw GuardError("oracle guard: " + std::to_string(n_items) +
                             " items exceeds cap " + std::to_string(item_cap()));
        if (n_tx > 64)
            throw GuardError("oracle guard: more than 64 transactions");

        item_bits.resize(n_items, 0);
        for (ItemId i = 0; i < n_items; ++i)
            for (std::size_t t = 0; t < n_tx; ++t)
                if (db.presence(i).test(t)) item_bits[i] |= std::uint64_t{1} << t;

        const std::size_t total = std::size_t{1} << n_items;
        std::vector<std::uint64_t> and_cover(total), or_cover(total);
        and_cover[0] = (n_tx == 64) ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n_tx) - 1;
        or_cover[0] = 0;
        for (std::uint32_t mask = 1; mask < total; ++mask) {
            const std::uint32_t low = mask & (~mask + 1);
            const unsigned item = static_cast<unsigned>(std::countr_zero(low));
            and_cover[mask] = and_cover[mask ^ low] & item_bits[item];
            or_cover[mask] = or_cover[mask ^ low] | item_bits[item];
        }
        conj.resize(total);
        disj.resize(total);
        for (std::size_t mask = 0; mask < total; ++mask) {
            conj[mask] = std::popcount(and_cover[mask]);
            disj[mask] = std::popcount(or_cover[mask]);
        }
    }

    bool bond_defined(std::uint32_t mask) const { return disj[mask] > 0; }

    bool bond_equal(std::uint32_t a, std::uint32_t b) const {
        return conj[a] * disj[b] == conj[b] * disj[a];
    }

    bool correlated(std::uint32_t mask, const Rational& minbond) const {
        // conj/disj >= minbond, cross-multiplied; requires disj > 0.
        return bond_defined(mask) && conj[mask] * minbond.den >= minbond.num * disj[mask];
    }
};

PatternRecord make_record(const Lattice& lat, std::uint32_t mask) {
    return PatternRecord(mask_to_itemset(mask), lat.conj[mask], lat.disj[mask]);
}

std::uint32_t closure_mask(const Lattice& lat, std::uint32_t mask) {
    std::uint32_t closed = mask;
    for (unsigned i = 0; i < lat.n_items; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if (mask & bit) continue;
        if (lat.bond_equal(mask, mask | bit)) closed |= bit;
    }
    return closed;
}

}  // namespace

std::size_t item_cap() {
    if (const char* env = std::getenv("BONDMINER_ORACLE_CAP")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 20;
}

Itemset galois_g(const TransactionDb& db, const std::vector<std::size_t>& transactions) {
    Itemset items;
    for (ItemId i = 0; i < db.item_count(); ++i) {
        bool in_all = true;
        for (std::size_t t : transactions) {
            if (t >= db.transaction_count())
                throw std::invalid_argument("transaction id out of range");
            if (!db.presence(i).test(t)) {
                in_all = false;
                break;
            }
        }
        if (in_all) items.push_back(i);
    }
    return items;
}

std::vector<std::size_t> galois_h(const TransactionDb& db, const Itemset& itemset) {
    std::vector<std::size_t> txs;
    for (std::size_t t = 0; t < db.transaction_count(); ++t) {
        bool has_all = true;
        for (ItemId i : itemset) {
            if (i >= db.item_count()) throw std::invalid_argument("item id out of range");
            if (!db.presence(i).test(t)) {
                has_all = false;
                break;
            }
        }
        if (has_all) txs.push_back(t);
    }
    return txs;
}

Itemset f_bond_closure(const TransactionDb& db, const Itemset& itemset) {
    const Rational base = bond(db, itemset);
    Itemset closed = itemset;
    for (ItemId i = 0; i < db.item_count(); ++i) {
        if (std::binary_search(itemset.begin(), itemset.end(), i)) continue;
        Itemset extended = set_union(itemset, Itemset{i});
        const SupportTriple t = supports(db, extended);
        if (t.disj > 0 && Rational(t.conj, t.disj) == base)
            closed.push_back(i);
    }
    std::sort(closed.begin(), closed.end());
    return closed;
}

FamilySet enumerate_families(const TransactionDb& db, std::int64_t minsupp,
                             const Rational& minbond) {
    const Lattice lat(db);
    const std::uint32_t total = std::uint32_t{1} << lat.n_items;

    FamilySet fam;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (!lat.correlated(mask, minbond)) continue;
        const bool rare = lat.conj[mask] < minsupp;

        // Closed: no direct superset with equal bond. Minimal: no direct
        // subset with equal bond (the one-item formulations of the
        // closure-based definitions).
        bool closed = true;
        for (unsigned i = 0; i < lat.n_items && closed; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if (!(mask & bit) && lat.bond_equal(mask, mask | bit)) closed = false;
        }
        bool minimal = true;
        for (unsigned i = 0; i < lat.n_items && minimal; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if ((mask & bit) && mask != bit) {
                const std::uint32_t sub = mask ^ bit;
                if (lat.bond_defined(sub) && lat.bond_equal(mask, sub)) minimal = false;
            }
        }
        // Maximal correlated: every direct superset fails the correlation test.
        bool maximal = true;
        for (unsigned i = 0; i < lat.n_items && maximal; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if (!(mask & bit) && lat.correlated(mask | bit, minbond)) maximal = false;
        }

        const PatternRecord rec = make_record(lat, mask);
        fam.correlated.push_back(rec);
        if (!rare) fam.frequent_correlated.push_back(rec);
        if (rare) fam.rare_correlated.push_back(rec);
        if (closed) fam.closed_correlated.push_back(rec);
        if (minimal) fam.minimal_correlated.push_back(rec);
        if (rare && closed) fam.closed_rare_correlated.push_back(rec);
        if (rare && minimal) fam.minimal_rare_correlated.push_back(rec);
        if (maximal) fam.maximal_correlated.push_back(rec);
        if (rare && closed && maximal) fam.maximal_closed_rare_correlated.push_back(rec);
        if (!rare && closed) fam.frequent_closed_correlated.push_back(rec);
    }

    // Minimal rare: rare with every direct subset frequent (order filter
    // makes the one-level check equivalent to the all-subsets definition).
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (lat.conj[mask] >= minsupp) continue;
        bool all_subs_frequent = true;
        for (unsigned i = 0; i < lat.n_items && all_subs_frequent; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if ((mask & bit) && mask != bit && lat.conj[mask ^ bit] < minsupp)
                all_subs_frequent = false;
        }
        if (all_subs_frequent) fam.minimal_rare.push_back(make_record(lat, mask));
    }

    // MinMRCP = MRCP intersect MinRP.
    for (const PatternRecord& r : fam.minimal_rare_correlated) {
        for (const PatternRecord& m : fam.minimal_rare)
            if (m.itemset == r.itemset) {
                fam.minimal_minimal_rare_correlated.push_back(r);
                break;
            }
    }

    canonical_sort(fam.correlated);
    canonical_sort(fam.frequent_correlated);
    canonical_sort(fam.rare_correlated);
    canonical_sort(fam.closed_correlated);
    canonical_sort(fam.minimal_correlated);
    canonical_sort(fam.closed_rare_correlated);
    canonical_sort(fam.minimal_rare_correlated);
    canonical_sort(fam.maximal_correlated);
    canonical_sort(fam.minimal_rare);
    canonical_sort(fam.maximal_closed_rare_correlated);
    canonical_sort(fam.minimal_minimal_rare_correlated);
    canonical_sort(fam.frequent_closed_correlated);
    return fam;
}

std::vector<EquivalenceClass> equivalence_classes(const TransactionDb& db,
                                                  bool keep_members) {
    const Lattice lat(db);
    const std::uint32_t total = std::uint32_t{1} << lat.n_items;

    std::vector<std::uint32_t> closure(total, 0);
    std::vector<std::uint32_t> closed_masks;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (!lat.bond_defined(mask)) continue;
        closure[mask] = closure_mask(lat, mask);
        if (closure[mask] == mask) closed_masks.push_back(mask);
    }

    std::vector<EquivalenceClass> classes;
    classes.reserve(closed_masks.size());
    for (std::uint32_t cm : closed_masks) {
        EquivalenceClass cls;
        cls.closed = mask_to_itemset(cm);
        cls.conj = lat.conj[cm];
        cls.disj = lat.disj[cm];

        std::vector<std::uint32_t> members;
        for (std::uint32_t mask = 1; mask < total; ++mask)
            if (lat.bond_defined(mask) && closure[mask] == cm) members.push_back(mask);

        // Minimal: no member of the class is a proper subset.
        for (std::uint32_t m : members) {
            bool minimal = true;
            for (std::uint32_t o : members)
                if (o != m && (o & m) == o) {
                    minimal = false;
                    break;
                }
            if (minimal) cls.minimals.push_back(mask_to_itemset(m));
        }
        std::sort(cls.minimals.begin(), cls.minimals.end(), canonical_less);
        if (keep_members) {
            for (std::uint32_t m : members) cls.members.push_back(mask_to_itemset(m));
            std::sort(cls.members.begin(), cls.members.end(), canonical_less);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

void write_lattice_dot(std::ostream& out, const TransactionDb& db,
                       std::int64_t minsupp, const Rational& minbond) {
    const Lattice lat(db);
    if (lat.n_items > 8)
        throw GuardError("lattice plot limited to 8 items");
    const std::uint32_t total = std::uint32_t{1} << lat.n_items;

    auto label = [&](std::uint32_t mask) {
        std::string s;
        for (ItemId i : mask_to_itemset(mask)) {
            if (!s.empty()) s += ' ';
            s += std::to_string(db.item_name(i));
        }
        return s.empty() ? std::string("{}") : s;
    };

    out << "digraph lattice {\n  rankdir=BT;\n  node [style=filled];\n";
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::string color = "white";
        if (lat.correlated(mask, minbond))
            color = lat.conj[mask] >= minsupp ? "lightblue" : "lightsalmon";
        out << "  n" << mask << " [label=\"" << label(mask) << "\\n" << lat.conj[mask]
            << "," << lat.disj[mask] << "\", fillcolor=" << color << "];\n";
    }
    for (std::uint32_t mask = 1; mask < total; ++mask)
        for (unsigned i = 0; i < lat.n_items; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if (!(mask & bit) || mask == bit) continue;
            out << "  n" << (mask ^ bit) << " -> n" << mask << ";\n";
        }
    out << "}\n";
}

}  // namespace bondmine::oracle
