#include "bondmine/rules.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bondmine {

namespace {

bool rule_less(const AssociationRule& a, const AssociationRule& b) {
    if (a.premise != b.premise) return canonical_less(a.premise, b.premise);
    return canonical_less(a.conclusion, b.conclusion);
}

// The closure of a generator is the unique closed-part element covering it
// with the same support pair.
const PatternRecord* closure_of(const std::vector<PatternRecord>& closed_part,
                                const PatternRecord& generator) {
    for (const auto& c : closed_part)
        if (c.conj == generator.conj && c.disj == generator.disj &&
            is_subset(generator.itemset, c.itemset))
            return &c;
    return nullptr;
}

}  // namespace

std::vector<AssociationRule> generate_generic_rules(const CondensedRepresentation& rep,
                                                    const Rational& minconf) {
    if (rep.kind == RepKind::Rfccp)
        throw std::invalid_argument(
            "rfccp rule generation needs the generator byproduct; pass it explicitly");
    return generate_generic_rules(rep, rep.minimal_part, minconf);
}

std::vector<AssociationRule> generate_generic_rules(
    const CondensedRepresentation& rep, const std::vector<PatternRecord>& generators,
    const Rational& minconf) {
    if (rep.kind != RepKind::Rcpr && rep.kind != RepKind::Rfccp)
        throw std::invalid_argument("rule generation expects an rcpr or rfccp representation");
    if (minconf.num <= 0 || minconf.num > minconf.den)
        throw std::invalid_argument("minconf must lie in (0, 1]");

    std::vector<AssociationRule> rules;
    for (const PatternRecord& g : generators) {
        const PatternRecord* closure = closure_of(rep.closed_part, g);
        if (closure == nullptr)
            throw std::invalid_argument("generator without closure in representation");
        Itemset conclusion = set_difference(closure->itemset, g.itemset);
        if (conclusion.empty()) continue;

        AssociationRule rule;
        rule.premise = g.itemset;
        rule.conclusion = std::move(conclusion);
        rule.support = closure->conj;
        rule.confidence = Rational(closure->conj, g.conj);
        if (rule.confidence >= minconf) rules.push_back(std::move(rule));
    }
    std::sort(rules.begin(), rules.end(), rule_less);
    return rules;
}

std::vector<AssociationRule> filter_igb(const std::vector<AssociationRule>& rules,
                                        const std::vector<PatternRecord>& all_generators,
                                        const Rational& minconf) {
    std::vector<AssociationRule> kept;
    for (const AssociationRule& rule : rules) {
        // A strictly smaller generator has a closure inside this rule's
        // closure (isotony), so it dominates whenever its implied rule for
        // the same closure stays confident.
        bool dominated = false;
        for (const PatternRecord& g1 : all_generators) {
            if (!is_proper_subset(g1.itemset, rule.premise)) continue;
            const Rational implied(rule.support, g1.conj);
            if (implied >= minconf) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(rule);
    }
    std::sort(kept.begin(), kept.end(), rule_less);
    return kept;
}

ClassificationRules classification_rules(const std::vector<AssociationRule>& rules,
                                         const std::vector<std::int64_t>& class_items) {
    if (class_items.empty()) throw std::invalid_argument("no class items given");
    std::set<std::int64_t> classes(class_items.begin(), class_items.end());

    ClassificationRules out;
    for (const AssociationRule& rule : rules) {
        std::vector<std::int64_t> labels;
        for (ItemId i : rule.conclusion)
            if (classes.count(static_cast<std::int64_t>(i)))
                labels.push_back(static_cast<std::int64_t>(i));
        if (labels.empty()) continue;
        if (labels.size() > 1) {
            ++out.rejected_multi_class;
            continue;
        }
        AssociationRule labeled = rule;
        labeled.class_label = labels[0];
        out.rules.push_back(std::move(labeled));
    }
    return out;
}

std::int64_t classify(const std::vector<AssociationRule>& rules, const Itemset& transaction,
                      std::int64_t default_label) {
    const AssociationRule* best = nullptr;
    for (const AssociationRule& rule : rules) {
        if (!rule.class_label) continue;
        if (!is_subset(rule.premise, transaction)) continue;
        if (best == nullptr) {
            best = &rule;
            continue;
        }
        if (rule.confidence != best->confidence) {
            if (rule.confidence > best->confidence) best = &rule;
            continue;
        }
        if (rule.support != best->support) {
            if (rule.support > best->support) best = &rule;
            continue;
        }
        if (rule.premise.size() != best->premise.size()) {
            if (rule.premise.size() < best->premise.size()) best = &rule;
            continue;
        }
        if (rule.premise < best->premise) best = &rule;
    }
    return best ? *best->class_label : default_label;
}

EvalReport evaluate(const std::vector<AssociationRule>& rules,
                    const std::vector<LabeledTransaction>& transactions,
                    std::int64_t default_label) {
    EvalReport report;
    std::map<std::int64_t, ClassReport> per_class;
    for (const LabeledTransaction& tx : transactions) {
        const std::int64_t predicted = classify(rules, tx.features, default_label);
        ClassReport& row = per_class[tx.label];
        row.label = tx.label;
        ++row.total;
        ++report.total;
        if (predicted == tx.label) {
            ++row.correct;
            ++report.correct;
        }
    }
    for (auto& [label, row] : per_class) report.per_class.push_back(row);
    return report;
}

}  // namespace bondmine
