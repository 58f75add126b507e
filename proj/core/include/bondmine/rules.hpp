// rules.hpp -- generic association rules from condensed representations and
// the rule-based classifier.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bondmine/pattern.hpp"
#include "bondmine/rational.hpp"
#include "bondmine/representation.hpp"

namespace bondmine {

struct AssociationRule {
    Itemset premise;
    Itemset conclusion;          // disjoint from premise, non-empty
    std::int64_t support = 0;    // conj(premise | conclusion)
    Rational confidence{1, 1};   // conj(premise | conclusion) / conj(premise)
    std::optional<std::int64_t> class_label;

    bool exact() const { return confidence == Rational(1, 1); }
    Itemset full_itemset() const { return set_union(premise, conclusion); }

    friend bool operator==(const AssociationRule& a, const AssociationRule& b) {
        return a.premise == b.premise && a.conclusion == b.conclusion &&
               a.support == b.support && a.confidence == b.confidence &&
               a.class_label == b.class_label;
    }
};

/// One rule g => closure(g) \ g per generator with a non-trivial conclusion,
/// keeping only confidence >= minconf. For an Rcpr representation the
/// generators are its minimal part; for Rfccp pass the miner's generator
/// byproduct explicitly.
std::vector<AssociationRule> generate_generic_rules(const CondensedRepresentation& rep,
                                                    const Rational& minconf);
std::vector<AssociationRule> generate_generic_rules(
    const CondensedRepresentation& rep, const std::vector<PatternRecord>& generators,
    const Rational& minconf);

/// Keeps a rule only when no strictly smaller generator of the same closure,
/// or of a sub-closure, already yields a confident rule for that closure:
/// premises minimal, conclusions maximal.
std::vector<AssociationRule> filter_igb(const std::vector<AssociationRule>& rules,
                                        const std::vector<PatternRecord>& all_generators,
                                        const Rational& minconf);

struct ClassificationRules {
    std::vector<AssociationRule> rules;
    std::size_t rejected_multi_class = 0;
};

/// Keeps rules whose conclusion names exactly one class item and labels them.
ClassificationRules classification_rules(const std::vector<AssociationRule>& rules,
                                         const std::vector<std::int64_t>& class_items);

/// Best firing rule by (confidence, support, shorter premise, lexicographic
/// premise); default label when nothing fires.
std::int64_t classify(const std::vector<AssociationRule>& rules, const Itemset& transaction,
                      std::int64_t default_label);

struct LabeledTransaction {
    Itemset features;
    std::int64_t label = 0;
};

struct ClassReport {
    std::int64_t label = 0;
    std::size_t total = 0;
    std::size_t correct = 0;
};

struct EvalReport {
    std::vector<ClassReport> per_class;
    std::size_t total = 0;
    std::size_t correct = 0;
    Rational accuracy() const {
        return total == 0 ? Rational(0, 1)
                          : Rational(static_cast<std::int64_t>(correct),
                                     static_cast<std::int64_t>(total));
    }
};

EvalReport evaluate(const std::vector<AssociationRule>& rules,
                    const std::vector<LabeledTransaction>& transactions,
                    std::int64_t default_label);

}  // namespace bondmine
