// End-to-end checks of the command-line surface: exit codes, file formats
// and the mine -> regenerate -> re-mine fixed point.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BONDMINER_BIN
#define BONDMINER_BIN "bondminer"
#endif

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(BONDMINER_BIN) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct Fixture {
    Fixture() {
        write_file("cli_toy.fimi", "1 3 4\n2 3 5\n1 2 3 5\n2 5\n1 2 3 5\n");
    }
    ~Fixture() {
        for (const char* f :
             {"cli_toy.fimi", "cli_rcpr.txt", "cli_rcpr2.txt", "cli_rcp.txt",
              "cli_reduced.txt", "cli_rules.txt", "cli_report.csv", "cli_train.fimi",
              "cli_matrix.csv", "cli_disc.fimi", "cli_stdout.txt", "cli_stderr.txt",
              "cli_rcpr.txt.manifest.json", "cli_rcpr2.txt.manifest.json",
              "cli_rcp.txt.manifest.json", "cli_rules.txt.manifest.json",
              "cli_report.csv.manifest.json", "cli_disc.fimi.manifest.json",
              "cli_gens.txt", "cli_fccp.txt", "cli_fccp.txt.manifest.json"})
            std::remove(f);
    }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "mine, query and regenerate round trip") {
    REQUIRE(run("mine --input cli_toy.fimi --minsupp 4 --minbond 1/5 "
                "--scenario rcpr --out cli_rcpr.txt") == 0);
    const std::string counts = slurp("cli_stdout.txt");
    CHECK(counts.find("|MRCP|=9") != std::string::npos);
    CHECK(counts.find("|CRCP|=7") != std::string::npos);
    CHECK(counts.find("distinct=12") != std::string::npos);
    CHECK(slurp("cli_rcpr.txt.manifest.json").find("\"digest\"") != std::string::npos);

    REQUIRE(run("query --rep cli_rcpr.txt --itemset \"1 3 5\"") == 0);
    CHECK(slurp("cli_stdout.txt") == "RARE_CORRELATED conj=2 disj=5 neg=0 bond=2/5\n");
    REQUIRE(run("query --rep cli_rcpr.txt --itemset \"2 5\"") == 0);
    CHECK(slurp("cli_stdout.txt") == "NOT_RARE_CORRELATED\n");

    REQUIRE(run("regenerate --rep cli_rcpr.txt --out cli_rcp.txt") == 0);
    CHECK(slurp("cli_stdout.txt") == "|RCP|=15\n");
    std::istringstream rcp(slurp("cli_rcp.txt"));
    std::string line;
    std::size_t records = 0;
    while (std::getline(rcp, line))
        if (line.rfind("pattern;", 0) == 0) ++records;
    CHECK(records == 15);

    // re-mining the same input reproduces the representation byte for byte
    REQUIRE(run("mine --input cli_toy.fimi --minsupp 4 --minbond 1/5 "
                "--scenario rcpr --out cli_rcpr2.txt") == 0);
    CHECK(slurp("cli_rcpr2.txt") == slurp("cli_rcpr.txt"));

    // full-count reports the compactness rate of the running example
    REQUIRE(run("mine --input cli_toy.fimi --minsupp 4 --minbond 1/5 "
                "--scenario rcpr --full-count --out cli_rcpr2.txt") == 0);
    const std::string full = slurp("cli_stdout.txt");
    CHECK(full.find("|RCP|=15") != std::string::npos);
    CHECK(full.find("compactness=1/5") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "all three miners write identical files") {
    for (const char* scenario : {"fcp", "rfccp", "rcp", "rcpr"}) {
        std::string reference;
        for (const char* miner : {"gmjp", "opt", "oracle"}) {
            REQUIRE(run(std::string("mine --input cli_toy.fimi --minsupp 4 "
                                    "--minbond 1/5 --scenario ") +
                        scenario + " --miner " + miner + " --out cli_rcpr.txt") == 0);
            const std::string bytes = slurp("cli_rcpr.txt");
            if (reference.empty())
                reference = bytes;
            else
                CHECK(bytes == reference);
        }
    }
}

TEST_CASE_FIXTURE(Fixture, "derive and interval query") {
    REQUIRE(run("mine --input cli_toy.fimi --minsupp 4 --minbond 0.2 "
                "--scenario rcpr --out cli_rcpr.txt") == 0);
    REQUIRE(run("derive --rep cli_rcpr.txt --kind minmmaxcr --out cli_reduced.txt") == 0);
    CHECK(slurp("cli_stdout.txt") == "distinct=6\n");

    REQUIRE(run("query --rep cli_reduced.txt --itemset \"1 2 5\"") == 0);
    CHECK(slurp("cli_stdout.txt") ==
          "RARE_CORRELATED conj=[2,3] disj=[3,5] bond=[2/5,1/1]\n");
    REQUIRE(run("query --rep cli_reduced.txt --itemset \"2 5\"") == 0);
    CHECK(slurp("cli_stdout.txt") == "NOT_RARE_CORRELATED\n");
}

TEST_CASE_FIXTURE(Fixture, "rules and classification pipeline") {
    write_file("cli_train.fimi", "10 100\n10 100\n20 200\n20 200\n");
    REQUIRE(run("mine --input cli_train.fimi --minsupp 3 --minbond 1/10 "
                "--scenario rcpr --out cli_rcpr.txt") == 0);
    REQUIRE(run("rules --rep cli_rcpr.txt --minconf 1/2 --out cli_rules.txt") == 0);
    CHECK(slurp("cli_rules.txt").find("⇒") != std::string::npos);

    REQUIRE(run("classify --rules cli_rules.txt --input cli_train.fimi "
                "--class-items \"100 200\" --out cli_report.csv") == 0);
    CHECK(slurp("cli_stdout.txt").find("accuracy=1/1") != std::string::npos);
    CHECK(slurp("cli_report.csv").find("TOTAL,4,4,1/1") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "rfccp rules require the generator file") {
    REQUIRE(run("mine --input cli_toy.fimi --minsupp 4 --minbond 1/5 "
                "--scenario rfccp --generators-out cli_gens.txt --out cli_fccp.txt") == 0);
    CHECK(run("rules --rep cli_fccp.txt --minconf 1/2 --out cli_rules.txt") == 2);
    REQUIRE(run("rules --rep cli_fccp.txt --generators cli_gens.txt --minconf 1/2 "
                "--out cli_rules.txt") == 0);
    CHECK(slurp("cli_stdout.txt").find("rules=2") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "discretize produces transactions") {
    write_file("cli_matrix.csv", "g1,g2\n10,0\n-10,0\n");
    REQUIRE(run("discretize --input cli_matrix.csv --header --over 1.0 --under -1.0 "
                "--out cli_disc.fimi") == 0);
    CHECK(slurp("cli_disc.fimi") == "0\n2\n");
    const std::string report = slurp("cli_stdout.txt");
    CHECK(report.find("transactions=2") != std::string::npos);
    CHECK(report.find("skipped_columns=1") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "exit codes distinguish flag, input and guard errors") {
    // 2: flag errors
    CHECK(run("mine --input cli_toy.fimi --minsupp 0 --out cli_rcpr.txt") == 2);
    CHECK(run("mine --input cli_toy.fimi --scenario bogus --out cli_rcpr.txt") == 2);
    CHECK(run("mine --input cli_toy.fimi --minbond 2/1 --out cli_rcpr.txt") == 2);
    CHECK(run("bogus-subcommand") == 2);

    // 3: input errors
    CHECK(run("mine --input missing.fimi --out cli_rcpr.txt") == 3);
    write_file("cli_rcpr.txt", "not a representation\n");
    CHECK(run("query --rep cli_rcpr.txt --itemset \"1\"") == 3);

    // 4: guard violations and kind mismatches
    REQUIRE(run("mine --input cli_toy.fimi --minsupp 4 --minbond 1/5 "
                "--scenario rcp --out cli_rcp.txt") == 0);
    CHECK(run("query --rep cli_rcp.txt --itemset \"1\"") == 4);
    CHECK(run("regenerate --rep cli_rcp.txt --out cli_reduced.txt") == 4);

    std::string wide;
    for (int i = 0; i < 25; ++i) wide += std::to_string(i) + " ";
    write_file("cli_train.fimi", wide + "\n");
    CHECK(run("mine --input cli_train.fimi --minsupp 1 --minbond 1/5 "
              "--scenario rcpr --miner oracle --out cli_reduced.txt") == 4);
}
