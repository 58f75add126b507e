// io.hpp -- file formats: representation/pattern files, rule files,
// evaluation reports and run manifests.
//
// Representation file, UTF-8 with LF endings:
//   line 1:  kind;|T|;minsupp;minbond_num/minbond_den
//   then     part;itemset-ids-space-separated;conj;disj;bond_num/bond_den
// with part one of "min", "closed", "pattern". Loaders validate invariants.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bondmine/miner.hpp"
#include "bondmine/representation.hpp"
#include "bondmine/rules.hpp"

namespace bondmine {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File payload: either a condensed representation (two tagged parts) or a
/// plain pattern set (scenario fcp/rcp), under one header.
struct PatternFile {
    std::string kind;  // rcpr|mmaxcr|minmcr|minmmaxcr|rfccp|fcp|rcp
    std::int64_t transaction_count = 0;
    MiningThresholds thresholds;
    std::vector<PatternRecord> minimal_part;
    std::vector<PatternRecord> closed_part;
    std::vector<PatternRecord> plain;

    CondensedRepresentation to_representation() const;
    bool is_representation() const;
};

void write_pattern_file(std::ostream& out, const PatternFile& file);
PatternFile read_pattern_file(std::istream& in);
PatternFile read_pattern_file(const std::string& path);

PatternFile pattern_file_from_result(const MineResult& result,
                                     std::int64_t transaction_count,
                                     const MiningThresholds& thresholds);
PatternFile pattern_file_from_representation(const CondensedRepresentation& rep);

/// Rule file: "premise-ids => conclusion-ids;support;conf_num/conf_den;
/// exact|approx[;label]" one rule per line.
void write_rule_file(std::ostream& out, const std::vector<AssociationRule>& rules);
std::vector<AssociationRule> read_rule_file(std::istream& in);
std::vector<AssociationRule> read_rule_file(const std::string& path);

/// Evaluation report as CSV: class,n,correct,rate.
void write_eval_csv(std::ostream& out, const EvalReport& report);

/// FNV-1a digest of a file's bytes, hex-encoded; run manifests record it so
/// reruns can verify they saw identical input.
std::string file_digest(const std::string& path);

}  // namespace bondmine
