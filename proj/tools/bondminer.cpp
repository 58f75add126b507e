// bondminer -- mine correlated pattern sets and their condensed
// representations, query and regenerate them, derive generic association
// rules and run the associative classifier.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bondmine/discretize.hpp"
#include "bondmine/io.hpp"
#include "bondmine/miner.hpp"
#include "bondmine/oracle.hpp"
#include "bondmine/rules.hpp"

using namespace bondmine;
using nlohmann::json;

namespace {

constexpr int kExitFlags = 2;
constexpr int kExitInput = 3;
constexpr int kExitGuard = 4;

struct CliError {
    int code;
    std::string message;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// "4" (absolute), "35%" (ceiling fraction) -- applied to MiningConfig.
void parse_minsupp(const std::string& text, MiningConfig& config) {
    if (text.empty()) throw CliError{kExitFlags, "empty --minsupp"};
    try {
        if (text.back() == '%') {
            config.minsupp_is_fraction = true;
            const Rational pct = parse_rational(text.substr(0, text.size() - 1));
            config.minsupp_fraction = Rational(pct.num, pct.den * 100);
        } else if (text.find('/') != std::string::npos ||
                   text.find('.') != std::string::npos) {
            config.minsupp_is_fraction = true;
            config.minsupp_fraction = parse_rational(text);
        } else {
            config.minsupp_is_fraction = false;
            config.minsupp_absolute = std::stoll(text);
        }
    } catch (const std::exception& e) {
        throw CliError{kExitFlags, std::string("bad --minsupp: ") + e.what()};
    }
}

Rational parse_bond_flag(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw CliError{kExitFlags, std::string("bad ") + flag + ": " + e.what()};
    }
}

Itemset parse_id_list(const std::string& text, const char* flag) {
    Itemset out;
    std::istringstream ss(text);
    long long v;
    while (ss >> v) {
        if (v < 0 || v > 0xFFFFFFFFLL)
            throw CliError{kExitFlags, std::string(flag) + ": id out of range"};
        out.push_back(static_cast<ItemId>(v));
    }
    if (!ss.eof() || out.empty())
        throw CliError{kExitFlags, std::string(flag) + ": expected space-separated ids"};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void write_text_file(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kExitInput, "cannot write " + path};
    out << payload;
}

void write_manifest(const std::string& out_path, const json& manifest) {
    std::ofstream out(out_path + ".manifest.json", std::ios::binary);
    if (out) out << manifest.dump(2) << '\n';
}

// --- mine -------------------------------------------------------------

struct MineOptions {
    std::string input, out;
    std::string minsupp = "2";
    std::string minbond = "1/5";
    std::string scenario = "rcpr";
    std::string miner = "gmjp";
    std::string generators_out;
    unsigned workers = 1;
    bool full_count = false;
    std::string dot_out;
};

MineResult run_oracle_miner(const TransactionDb& db, const MiningConfig& config) {
    const std::int64_t minsupp = config.resolve_minsupp(db.transaction_count());
    const auto fam = oracle::enumerate_families(db, minsupp, config.minbond);

    auto originals = [&](std::vector<PatternRecord> recs) {
        for (auto& r : recs) {
            Itemset names;
            for (ItemId i : r.itemset)
                names.push_back(static_cast<ItemId>(db.item_name(i)));
            std::sort(names.begin(), names.end());
            r.itemset = std::move(names);
        }
        canonical_sort(recs);
        return recs;
    };

    MineResult result;
    result.scenario = config.scenario;
    MiningThresholds thresholds{minsupp, config.minbond};
    switch (config.scenario) {
        case Scenario::Fcp:
            result.patterns = originals(fam.frequent_correlated);
            break;
        case Scenario::Rcp:
            result.patterns = originals(fam.rare_correlated);
            break;
        case Scenario::Rcpr:
            result.rep.kind = RepKind::Rcpr;
            result.rep.minimal_part = originals(fam.minimal_rare_correlated);
            result.rep.closed_part = originals(fam.closed_rare_correlated);
            result.rep.transaction_count =
                static_cast<std::int64_t>(db.transaction_count());
            result.rep.thresholds = thresholds;
            break;
        case Scenario::Rfccp:
            result.rep.kind = RepKind::Rfccp;
            result.rep.closed_part = originals(fam.frequent_closed_correlated);
            result.rep.transaction_count =
                static_cast<std::int64_t>(db.transaction_count());
            result.rep.thresholds = thresholds;
            result.generators = originals([&] {
                std::vector<PatternRecord> gens;
                for (const auto& r : fam.minimal_correlated)
                    if (r.conj >= minsupp) gens.push_back(r);
                return gens;
            }());
            break;
    }
    return result;
}

int cmd_mine(const MineOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();

    MiningConfig config;
    parse_minsupp(opt.minsupp, config);
    config.minbond = parse_bond_flag(opt.minbond, "--minbond");
    const auto scenario = scenario_from_name(opt.scenario);
    if (!scenario) throw CliError{kExitFlags, "unknown --scenario " + opt.scenario};
    config.scenario = *scenario;
    if (opt.miner != "gmjp" && opt.miner != "opt" && opt.miner != "oracle")
        throw CliError{kExitFlags, "unknown --miner " + opt.miner};
    if (opt.workers == 0) throw CliError{kExitFlags, "--workers must be positive"};

    TransactionDb db;
    try {
        db = TransactionDb::load_fimi(opt.input);
    } catch (const ParseError& e) {
        throw CliError{kExitInput, e.what()};
    }
    try {
        config.validate(db.transaction_count());
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitFlags, e.what()};
    }
    const double load_s = seconds_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    MineResult result;
    try {
        if (opt.miner == "gmjp")
            result = mine_gmjp(db, config, opt.workers);
        else if (opt.miner == "opt")
            result = mine_opt(db, config, opt.workers);
        else
            result = run_oracle_miner(db, config);
    } catch (const oracle::GuardError& e) {
        throw CliError{kExitGuard, e.what()};
    }
    const double mine_s = seconds_since(t1);

    const std::int64_t minsupp = config.resolve_minsupp(db.transaction_count());
    MiningThresholds thresholds{minsupp, config.minbond};
    const PatternFile file = pattern_file_from_result(
        result, static_cast<std::int64_t>(db.transaction_count()), thresholds);
    {
        std::ostringstream payload;
        write_pattern_file(payload, file);
        write_text_file(opt.out, payload.str());
    }
    if (!opt.generators_out.empty()) {
        PatternFile gens;
        gens.kind = "fmcp";
        gens.transaction_count = static_cast<std::int64_t>(db.transaction_count());
        gens.thresholds = thresholds;
        gens.plain = result.generators;
        std::ostringstream payload;
        write_pattern_file(payload, gens);
        write_text_file(opt.generators_out, payload.str());
    }
    if (!opt.dot_out.empty()) {
        std::ostringstream payload;
        oracle::write_lattice_dot(payload, db, minsupp, config.minbond);
        write_text_file(opt.dot_out, payload.str());
    }

    json counts;
    if (config.scenario == Scenario::Rcpr) {
        counts["minimal"] = result.rep.minimal_part.size();
        counts["closed"] = result.rep.closed_part.size();
        counts["distinct"] = result.rep.distinct_size();
        std::cout << "|MRCP|=" << result.rep.minimal_part.size()
                  << " |CRCP|=" << result.rep.closed_part.size()
                  << " distinct=" << result.rep.distinct_size() << '\n';
        if (opt.full_count) {
            const auto rcp = regenerate_rcp(result.rep);
            counts["full"] = rcp.size();
            const Rational gain =
                compactness(result.rep, static_cast<std::int64_t>(rcp.size()));
            counts["compactness"] = gain.str();
            std::cout << "|RCP|=" << rcp.size() << " compactness=" << gain.str() << '\n';
        }
    } else if (config.scenario == Scenario::Rfccp) {
        counts["closed"] = result.rep.closed_part.size();
        std::cout << "|FCCP|=" << result.rep.closed_part.size() << '\n';
    } else {
        counts["patterns"] = result.patterns.size();
        std::cout << "patterns=" << result.patterns.size() << '\n';
    }

    json manifest{{"command", "mine"},
                  {"input", opt.input},
                  {"digest", file_digest(opt.input)},
                  {"minsupp", opt.minsupp},
                  {"minsupp_absolute", minsupp},
                  {"minbond", config.minbond.str()},
                  {"scenario", opt.scenario},
                  {"miner", opt.miner},
                  {"workers", opt.workers},
                  {"out", opt.out},
                  {"counts", counts},
                  {"timings", json{{"load_s", load_s}, {"mine_s", mine_s}}}};
    write_manifest(opt.out, manifest);
    return 0;
}

// --- query ------------------------------------------------------------

int cmd_query(const std::string& rep_path, const std::string& itemset_text) {
    PatternFile file;
    try {
        file = read_pattern_file(rep_path);
    } catch (const FormatError& e) {
        throw CliError{kExitInput, e.what()};
    }
    if (!file.is_representation())
        throw CliError{kExitGuard, "query needs a representation file"};
    const CondensedRepresentation rep = file.to_representation();
    const Itemset probe = parse_id_list(itemset_text, "--itemset");

    if (rep.kind == RepKind::MinMMaxCr) {
        const auto iv = query_approx(rep, probe);
        if (!iv) {
            std::cout << "NOT_RARE_CORRELATED\n";
            return 0;
        }
        std::cout << "RARE_CORRELATED conj=[" << iv->conj_lo << ',' << iv->conj_hi
                  << "] disj=[" << iv->disj_lo << ',' << iv->disj_hi << "] bond=["
                  << iv->bond_lo.str() << ',' << iv->bond_hi.str() << "]\n";
        return 0;
    }

    std::optional<QueryAnswer> answer;
    if (rep.kind == RepKind::MMaxCr)
        answer = query_mmaxcr(rep, probe);
    else if (rep.kind == RepKind::Rcpr || rep.kind == RepKind::MinMCr)
        answer = query(rep, probe);
    else
        throw CliError{kExitGuard, "query does not apply to an rfccp file"};

    if (!answer) {
        std::cout << "NOT_RARE_CORRELATED\n";
        return 0;
    }
    std::cout << "RARE_CORRELATED conj=" << answer->conj << " disj=" << answer->disj
              << " neg=" << answer->neg << " bond=" << answer->bond_value.str() << '\n';
    return 0;
}

// --- regenerate / derive ----------------------------------------------

int cmd_regenerate(const std::string& rep_path, const std::string& out_path) {
    PatternFile file;
    try {
        file = read_pattern_file(rep_path);
    } catch (const FormatError& e) {
        throw CliError{kExitInput, e.what()};
    }
    if (file.kind != "rcpr")
        throw CliError{kExitGuard, "regenerate needs an rcpr representation"};
    const CondensedRepresentation rep = file.to_representation();
    const auto rcp = regenerate_rcp(rep);

    PatternFile out;
    out.kind = "rcp";
    out.transaction_count = rep.transaction_count;
    out.thresholds = rep.thresholds;
    out.plain = rcp;
    std::ostringstream payload;
    write_pattern_file(payload, out);
    write_text_file(out_path, payload.str());

    std::cout << "|RCP|=" << rcp.size() << '\n';
    json manifest{{"command", "regenerate"},
                  {"input", rep_path},
                  {"digest", file_digest(rep_path)},
                  {"out", out_path},
                  {"counts", json{{"full", rcp.size()}}}};
    write_manifest(out_path, manifest);
    return 0;
}

int cmd_derive(const std::string& rep_path, const std::string& kind_name,
               const std::string& out_path) {
    PatternFile file;
    try {
        file = read_pattern_file(rep_path);
    } catch (const FormatError& e) {
        throw CliError{kExitInput, e.what()};
    }
    if (file.kind != "rcpr") throw CliError{kExitGuard, "derive needs an rcpr file"};
    const auto kind = rep_kind_from_name(kind_name);
    if (!kind || *kind == RepKind::Rcpr || *kind == RepKind::Rfccp)
        throw CliError{kExitFlags, "--kind must be mmaxcr, minmcr or minmmaxcr"};

    const CondensedRepresentation reduced = derive(*kind, file.to_representation());
    std::ostringstream payload;
    write_pattern_file(payload, pattern_file_from_representation(reduced));
    write_text_file(out_path, payload.str());
    std::cout << "distinct=" << reduced.distinct_size() << '\n';
    return 0;
}

// --- rules / classify ---------------------------------------------------

int cmd_rules(const std::string& rep_path, const std::string& generators_path,
              const std::string& minconf_text, bool igb, const std::string& out_path) {
    PatternFile file;
    try {
        file = read_pattern_file(rep_path);
    } catch (const FormatError& e) {
        throw CliError{kExitInput, e.what()};
    }
    if (file.kind != "rcpr" && file.kind != "rfccp")
        throw CliError{kExitGuard, "rules need an rcpr or rfccp representation"};
    const CondensedRepresentation rep = file.to_representation();
    const Rational minconf = parse_bond_flag(minconf_text, "--minconf");

    std::vector<PatternRecord> generators;
    if (rep.kind == RepKind::Rfccp) {
        if (generators_path.empty())
            throw CliError{kExitFlags, "rfccp rules need --generators"};
        PatternFile gens;
        try {
            gens = read_pattern_file(generators_path);
        } catch (const FormatError& e) {
            throw CliError{kExitInput, e.what()};
        }
        if (gens.kind != "fmcp")
            throw CliError{kExitGuard, "--generators must be an fmcp file"};
        generators = gens.plain;
    } else {
        generators = rep.minimal_part;
    }

    std::vector<AssociationRule> rules;
    try {
        rules = generate_generic_rules(rep, generators, minconf);
        if (igb) rules = filter_igb(rules, generators, minconf);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitGuard, e.what()};
    }

    std::ostringstream payload;
    write_rule_file(payload, rules);
    write_text_file(out_path, payload.str());

    std::size_t exact = 0;
    for (const auto& r : rules) exact += r.exact() ? 1 : 0;
    std::cout << "rules=" << rules.size() << " exact=" << exact
              << " approx=" << (rules.size() - exact) << '\n';
    json manifest{{"command", "rules"},
                  {"input", rep_path},
                  {"digest", file_digest(rep_path)},
                  {"minconf", minconf.str()},
                  {"igb", igb},
                  {"out", out_path},
                  {"counts", json{{"rules", rules.size()}, {"exact", exact}}}};
    write_manifest(out_path, manifest);
    return 0;
}

int cmd_classify(const std::string& rules_path, const std::string& input_path,
                 const std::string& class_items_text, const std::string& default_text,
                 const std::string& out_path) {
    std::vector<AssociationRule> rules;
    try {
        rules = read_rule_file(rules_path);
    } catch (const FormatError& e) {
        throw CliError{kExitInput, e.what()};
    }
    const Itemset class_items = parse_id_list(class_items_text, "--class-items");
    std::vector<std::int64_t> class_list(class_items.begin(), class_items.end());

    ClassificationRules cls;
    try {
        cls = classification_rules(rules, class_list);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitFlags, e.what()};
    }
    if (cls.rejected_multi_class > 0)
        std::cerr << "warning: dropped " << cls.rejected_multi_class
                  << " rules with multiple class items in the conclusion\n";

    TransactionDb db;
    try {
        db = TransactionDb::load_fimi(input_path);
    } catch (const ParseError& e) {
        throw CliError{kExitInput, e.what()};
    }

    // Each transaction carries its true label as a class item.
    std::vector<LabeledTransaction> labeled;
    std::map<std::int64_t, std::size_t> label_counts;
    for (std::size_t t = 0; t < db.transaction_count(); ++t) {
        LabeledTransaction row;
        std::optional<std::int64_t> label;
        bool multi = false;
        for (ItemId i = 0; i < db.item_count(); ++i) {
            if (!db.presence(i).test(t)) continue;
            const std::int64_t name = db.item_name(i);
            if (std::binary_search(class_items.begin(), class_items.end(),
                                   static_cast<ItemId>(name))) {
                if (label) multi = true;
                label = name;
            } else {
                row.features.push_back(static_cast<ItemId>(name));
            }
        }
        if (!label || multi)
            throw CliError{kExitInput,
                           "transaction " + std::to_string(t + 1) +
                               " must carry exactly one class item"};
        std::sort(row.features.begin(), row.features.end());
        row.label = *label;
        ++label_counts[*label];
        labeled.push_back(std::move(row));
    }

    std::int64_t default_label;
    if (!default_text.empty()) {
        default_label = std::stoll(default_text);
    } else {
        // majority class of the provided transactions
        default_label = label_counts.begin()->first;
        for (const auto& [label, n] : label_counts)
            if (n > label_counts[default_label]) default_label = label;
    }

    const EvalReport report = evaluate(cls.rules, labeled, default_label);
    std::ostringstream payload;
    write_eval_csv(payload, report);
    write_text_file(out_path, payload.str());
    std::cout << "accuracy=" << report.accuracy().str() << " (" << report.correct << '/'
              << report.total << ")\n";
    json manifest{{"command", "classify"},
                  {"rules", rules_path},
                  {"input", input_path},
                  {"digest", file_digest(input_path)},
                  {"default_label", default_label},
                  {"out", out_path},
                  {"counts", json{{"total", report.total}, {"correct", report.correct}}}};
    write_manifest(out_path, manifest);
    return 0;
}

// --- discretize ---------------------------------------------------------

int cmd_discretize(const std::string& input_path, bool header, double over, double under,
                   const std::string& out_path) {
    std::vector<std::vector<double>> matrix;
    try {
        matrix = read_csv_matrix(input_path, header);
    } catch (const ParseError& e) {
        throw CliError{kExitInput, e.what()};
    }
    DiscretizationConfig config;
    config.over_cutoff = over;
    config.under_cutoff = under;
    DiscretizeResult result;
    try {
        result = discretize(matrix, config);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitInput, e.what()};
    }

    std::ostringstream payload;
    result.db.write_fimi(payload);
    write_text_file(out_path, payload.str());

    std::cout << "transactions=" << result.db.transaction_count()
              << " items=" << result.db.item_count()
              << " dropped_rows=" << result.dropped_rows
              << " skipped_columns=" << result.skipped_columns.size() << '\n';
    json manifest{{"command", "discretize"},
                  {"input", input_path},
                  {"digest", file_digest(input_path)},
                  {"over_cutoff", over},
                  {"under_cutoff", under},
                  {"out", out_path},
                  {"counts", json{{"transactions", result.db.transaction_count()},
                                  {"dropped_rows", result.dropped_rows},
                                  {"skipped_columns", result.skipped_columns.size()}}}};
    write_manifest(out_path, manifest);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"correlated pattern mining under the bond measure"};
    app.require_subcommand(1);

    MineOptions mine;
    auto* mine_cmd = app.add_subcommand("mine", "mine a scenario result set");
    mine_cmd->add_option("--input", mine.input, "FIMI transaction file")->required();
    mine_cmd->add_option("--minsupp", mine.minsupp, "absolute count or percentage (e.g. 35%)");
    mine_cmd->add_option("--minbond", mine.minbond, "rational or decimal in (0,1]");
    mine_cmd->add_option("--scenario", mine.scenario, "fcp|rfccp|rcp|rcpr");
    mine_cmd->add_option("--miner", mine.miner, "gmjp|opt|oracle");
    mine_cmd->add_option("--workers", mine.workers, "worker threads");
    mine_cmd->add_option("--out", mine.out, "result file")->required();
    mine_cmd->add_option("--generators-out", mine.generators_out,
                         "write rfccp generators (fmcp file)");
    mine_cmd->add_flag("--full-count", mine.full_count,
                       "also report |RCP| and the compactness rate");
    mine_cmd->add_option("--dot", mine.dot_out, "emit the colored lattice as DOT");

    std::string rep_path, itemset_text;
    auto* query_cmd = app.add_subcommand("query", "query a representation file");
    query_cmd->add_option("--rep", rep_path, "representation file")->required();
    query_cmd->add_option("--itemset", itemset_text, "space-separated original ids")
        ->required();

    std::string regen_in, regen_out;
    auto* regen_cmd = app.add_subcommand("regenerate", "expand an rcpr file to the full set");
    regen_cmd->add_option("--rep", regen_in, "rcpr representation file")->required();
    regen_cmd->add_option("--out", regen_out, "output pattern file")->required();

    std::string derive_in, derive_kind, derive_out;
    auto* derive_cmd = app.add_subcommand("derive", "reduce an rcpr representation");
    derive_cmd->add_option("--rep", derive_in, "rcpr representation file")->required();
    derive_cmd->add_option("--kind", derive_kind, "mmaxcr|minmcr|minmmaxcr")->required();
    derive_cmd->add_option("--out", derive_out, "output representation file")->required();

    std::string rules_rep, rules_gens, rules_minconf = "1/2", rules_out;
    bool rules_igb = false;
    auto* rules_cmd = app.add_subcommand("rules", "derive generic association rules");
    rules_cmd->add_option("--rep", rules_rep, "rcpr or rfccp representation")->required();
    rules_cmd->add_option("--generators", rules_gens, "fmcp generators (rfccp only)");
    rules_cmd->add_option("--minconf", rules_minconf, "minimal confidence");
    rules_cmd->add_flag("--igb", rules_igb, "apply the generic-base dominance filter");
    rules_cmd->add_option("--out", rules_out, "rule file")->required();

    std::string cls_rules, cls_input, cls_classes, cls_default, cls_out;
    auto* classify_cmd = app.add_subcommand("classify", "evaluate classification rules");
    classify_cmd->add_option("--rules", cls_rules, "rule file")->required();
    classify_cmd->add_option("--input", cls_input, "labeled FIMI transactions")->required();
    classify_cmd->add_option("--class-items", cls_classes, "ids of the class items")
        ->required();
    classify_cmd->add_option("--default-label", cls_default,
                             "fallback label (default: majority class)");
    classify_cmd->add_option("--out", cls_out, "report CSV")->required();

    std::string disc_in, disc_out;
    bool disc_header = false;
    double disc_over = 1.96, disc_under = -1.96;
    auto* disc_cmd = app.add_subcommand("discretize", "CSV matrix to FIMI transactions");
    disc_cmd->add_option("--input", disc_in, "CSV of reals")->required();
    disc_cmd->add_flag("--header", disc_header, "first row is a header");
    disc_cmd->add_option("--over", disc_over, "over-expressed z cutoff");
    disc_cmd->add_option("--under", disc_under, "under-expressed z cutoff");
    disc_cmd->add_option("--out", disc_out, "FIMI output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitFlags;
    }

    try {
        if (mine_cmd->parsed()) return cmd_mine(mine);
        if (query_cmd->parsed()) return cmd_query(rep_path, itemset_text);
        if (regen_cmd->parsed()) return cmd_regenerate(regen_in, regen_out);
        if (derive_cmd->parsed()) return cmd_derive(derive_in, derive_kind, derive_out);
        if (rules_cmd->parsed())
            return cmd_rules(rules_rep, rules_gens, rules_minconf, rules_igb, rules_out);
        if (classify_cmd->parsed())
            return cmd_classify(cls_rules, cls_input, cls_classes, cls_default, cls_out);
        if (disc_cmd->parsed())
            return cmd_discretize(disc_in, disc_header, disc_over, disc_under, disc_out);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
