#include "bondmine/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

// UTF-8 double arrow used by the rule file format.
static const char* const kRuleArrow = " ⇒ ";
static const std::size_t kRuleArrowLen = 5;

namespace bondmine {

std::string itemset_to_string(const Itemset& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(s[k]);
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t num = std::stoll(text.substr(0, slash));
        const std::int64_t den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15)
            throw std::invalid_argument("bad decimal: " + text);
        std::int64_t den = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
        const std::int64_t w = whole.empty() ? 0 : std::stoll(whole);
        const std::int64_t f = std::stoll(frac);
        return Rational(w * den + f, den);
    }
    return Rational(std::stoll(text), 1);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

Itemset parse_itemset(const std::string& text) {
    Itemset s;
    std::istringstream ss(text);
    long long v;
    while (ss >> v) {
        if (v < 0 || v > 0xFFFFFFFFLL) throw FormatError("item id out of range: " + text);
        s.push_back(static_cast<ItemId>(v));
    }
    if (!ss.eof()) throw FormatError("bad itemset field: " + text);
    return s;
}

void validate_record(const PatternRecord& r, std::int64_t transaction_count,
                     const Rational& bond_field) {
    if (r.itemset.empty()) throw FormatError("empty itemset in record");
    if (!is_strictly_sorted(r.itemset)) throw FormatError("unsorted itemset in record");
    if (r.conj < 0 || r.conj > r.disj || r.disj > transaction_count)
        throw FormatError("support pair violates 0 <= conj <= disj <= |T|");
    if (r.disj == 0) throw FormatError("record with zero disjunctive support");
    if (bond_field != r.bond()) throw FormatError("bond field disagrees with supports");
}

void write_records(std::ostream& out, const char* part,
                   const std::vector<PatternRecord>& records) {
    for (const PatternRecord& r : records)
        out << part << ';' << itemset_to_string(r.itemset) << ';' << r.conj << ';'
            << r.disj << ';' << r.bond().str() << '\n';
}

const char* kRepKinds[] = {"rcpr", "mmaxcr", "minmcr", "minmmaxcr", "rfccp"};
const char* kPlainKinds[] = {"fcp", "rcp", "fmcp"};

bool is_rep_kind(const std::string& kind) {
    for (const char* k : kRepKinds)
        if (kind == k) return true;
    return false;
}
bool is_plain_kind(const std::string& kind) {
    for (const char* k : kPlainKinds)
        if (kind == k) return true;
    return false;
}

}  // namespace

bool PatternFile::is_representation() const { return is_rep_kind(kind); }

CondensedRepresentation PatternFile::to_representation() const {
    const auto rk = rep_kind_from_name(kind);
    if (!rk) throw FormatError("file holds a plain pattern set, not a representation");
    CondensedRepresentation rep;
    rep.kind = *rk;
    rep.minimal_part = minimal_part;
    rep.closed_part = closed_part;
    rep.transaction_count = transaction_count;
    rep.thresholds = thresholds;
    return rep;
}

void write_pattern_file(std::ostream& out, const PatternFile& file) {
    out << file.kind << ';' << file.transaction_count << ';' << file.thresholds.minsupp
        << ';' << file.thresholds.minbond.str() << '\n';
    write_records(out, "min", file.minimal_part);
    write_records(out, "closed", file.closed_part);
    write_records(out, "pattern", file.plain);
}

PatternFile read_pattern_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty pattern file");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    PatternFile file;
    {
        const auto head = split(line, ';');
        if (head.size() != 4) throw FormatError("bad header: " + line);
        file.kind = head[0];
        if (!is_rep_kind(file.kind) && !is_plain_kind(file.kind))
            throw FormatError("unknown kind: " + file.kind);
        try {
            file.transaction_count = std::stoll(head[1]);
            file.thresholds.minsupp = std::stoll(head[2]);
            file.thresholds.minbond = parse_rational(head[3]);
        } catch (const std::exception& e) {
            throw FormatError(std::string("bad header: ") + e.what());
        }
    }

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto parts = split(line, ';');
        if (parts.size() != 5)
            throw FormatError("line " + std::to_string(line_no) + ": expected 5 fields");
        PatternRecord rec;
        Rational bond_field;
        try {
            rec.itemset = parse_itemset(parts[1]);
            rec.conj = std::stoll(parts[2]);
            rec.disj = std::stoll(parts[3]);
            bond_field = parse_rational(parts[4]);
        } catch (const std::exception& e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
        validate_record(rec, file.transaction_count, bond_field);

        if (parts[0] == "min") {
            if (!is_rep_kind(file.kind))
                throw FormatError("min record in a plain pattern file");
            file.minimal_part.push_back(std::move(rec));
        } else if (parts[0] == "closed") {
            if (!is_rep_kind(file.kind))
                throw FormatError("closed record in a plain pattern file");
            file.closed_part.push_back(std::move(rec));
        } else if (parts[0] == "pattern") {
            if (is_rep_kind(file.kind))
                throw FormatError("pattern record in a representation file");
            file.plain.push_back(std::move(rec));
        } else {
            throw FormatError("unknown part tag: " + parts[0]);
        }
    }
    if (file.kind == "rfccp" && !file.minimal_part.empty())
        throw FormatError("rfccp representation must not carry a minimal part");
    canonical_sort(file.minimal_part);
    canonical_sort(file.closed_part);
    canonical_sort(file.plain);
    return file;
}

PatternFile read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_pattern_file(in);
}

PatternFile pattern_file_from_result(const MineResult& result,
                                     std::int64_t transaction_count,
                                     const MiningThresholds& thresholds) {
    PatternFile file;
    file.transaction_count = transaction_count;
    file.thresholds = thresholds;
    switch (result.scenario) {
        case Scenario::Fcp:
            file.kind = "fcp";
            file.plain = result.patterns;
            break;
        case Scenario::Rcp:
            file.kind = "rcp";
            file.plain = result.patterns;
            break;
        case Scenario::Rcpr:
        case Scenario::Rfccp:
            return pattern_file_from_representation(result.rep);
    }
    return file;
}

PatternFile pattern_file_from_representation(const CondensedRepresentation& rep) {
    PatternFile file;
    file.kind = rep_kind_name(rep.kind);
    file.transaction_count = rep.transaction_count;
    file.thresholds = rep.thresholds;
    file.minimal_part = rep.minimal_part;
    file.closed_part = rep.closed_part;
    return file;
}

void write_rule_file(std::ostream& out, const std::vector<AssociationRule>& rules) {
    for (const AssociationRule& r : rules) {
        out << itemset_to_string(r.premise) << kRuleArrow << itemset_to_string(r.conclusion)
            << ';' << r.support << ';' << r.confidence.str() << ';'
            << (r.exact() ? "exact" : "approx");
        if (r.class_label) out << ';' << *r.class_label;
        out << '\n';
    }
}

std::vector<AssociationRule> read_rule_file(std::istream& in) {
    std::vector<AssociationRule> rules;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto parts = split(line, ';');
        if (parts.size() != 4 && parts.size() != 5)
            throw FormatError("line " + std::to_string(line_no) + ": expected 4-5 fields");
        const auto arrow = parts[0].find(kRuleArrow);
        if (arrow == std::string::npos)
            throw FormatError("line " + std::to_string(line_no) + ": missing rule arrow");
        AssociationRule rule;
        try {
            rule.premise = parse_itemset(parts[0].substr(0, arrow));
            rule.conclusion = parse_itemset(parts[0].substr(arrow + kRuleArrowLen));
            rule.support = std::stoll(parts[1]);
            rule.confidence = parse_rational(parts[2]);
            if (parts.size() == 5) rule.class_label = std::stoll(parts[4]);
        } catch (const std::exception& e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (rule.conclusion.empty() || !is_strictly_sorted(rule.premise) ||
            !is_strictly_sorted(rule.conclusion))
            throw FormatError("line " + std::to_string(line_no) + ": malformed rule");
        if ((parts[3] == "exact") != rule.exact())
            throw FormatError("line " + std::to_string(line_no) +
                              ": exact flag disagrees with confidence");
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::vector<AssociationRule> read_rule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_rule_file(in);
}

void write_eval_csv(std::ostream& out, const EvalReport& report) {
    out << "class,n,correct,rate\n";
    for (const ClassReport& row : report.per_class) {
        out << row.label << ',' << row.total << ',' << row.correct << ',';
        if (row.total == 0)
            out << "0";
        else
            out << Rational(static_cast<std::int64_t>(row.correct),
                            static_cast<std::int64_t>(row.total))
                       .str();
        out << '\n';
    }
    out << "TOTAL," << report.total << ',' << report.correct << ','
        << report.accuracy().str() << '\n';
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize k = 0; k < in.gcount(); ++k) {
            hash ^= static_cast<unsigned char>(buf[k]);
            hash *= 1099511628211ull;
        }
        if (in.eof()) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(hex);
}

}  // namespace bondmine
