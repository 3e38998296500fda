#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

const std::filesystem::path kData = DCASM_TEST_DATA;

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = dcasm::cli::main(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string golden(const std::string& name) { return slurp(kData / name); }

} // namespace

TEST(CliGolden, SolveDisjunctionProgram) {
    const Result r = run({"solve", data("disjunction.lp"), "--program"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("disjunction.solve.out"));
    EXPECT_EQ(r.err, "3 models\n");
}

TEST(CliGolden, EmitLegacyAndTranslate) {
    EXPECT_EQ(run({"emit-asp", data("disjunction.lp"), "--program"}).out, golden("disjunction.legacy.out"));
    EXPECT_EQ(run({"translate", data("disjunction.lp"), "--program"}).out, golden("disjunction.translate.out"));
    EXPECT_EQ(run({"emit-asp", data("disjunction.lp"), "--program", "--style", "modern"}).out,
              golden("disjunction.translate.out"));
}

TEST(CliGolden, SolveNullSupplier) {
    const Result r = run({"solve", data("db.lp")});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("db.solve.out"));
    // Listing the database constants gives the same axioms.
    EXPECT_EQ(run({"solve", data("db.lp"), "-una", "acme", "foo", "p1", "p2", "p3"}).out, golden("db.solve.out"));
}

TEST(CliGolden, OracleMatchesSolverDiagrams) {
    const Result r = run({"oracle", data("db.lp")});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("db.oracle.out"));
    const std::string solved = golden("db.solve.out");
    EXPECT_EQ(solved.substr(solved.find("Diagram: 1")), r.out);
}

TEST(CliGolden, SupplierAndEmpty) {
    EXPECT_EQ(run({"solve", data("supplier.lp")}).out, golden("supplier.solve.out"));
    EXPECT_EQ(run({"solve", data("empty.lp")}).out, "Answer: 1\neq(a,a)\nDiagram: 1\neq(a,a)\n");
}

TEST(CliCheck, BundledExamples) {
    for (const char* name : {"db.lp", "supplier.lp", "empty.lp"}) {
        const Result r = run({"check", data(name)});
        EXPECT_EQ(r.status, 0) << name << r.err;
    }
    for (const char* name : {"disjunction.lp", "twentythree.lp"}) {
        const Result r = run({"check", data(name), "--program"});
        EXPECT_EQ(r.status, 0) << name << r.err;
        EXPECT_EQ(run({"check", data(name), "--program", "--herbrand"}).status, 0) << name;
    }
    EXPECT_EQ(run({"check", data("db.lp")}).out, "agree: 3 diagrams\n");
    EXPECT_EQ(run({"check", data("twentythree.lp"), "--program"}).out, "agree: 23 diagrams\n");
}

TEST(CliCheck, RandomTheories) {
    const Result r = run({"check", "--random", "25", "--seed", "9"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "agree on 25 random theories (seed 9)\n");
}

TEST(CliOptions, ModelsLimitAndHerbrand) {
    const Result two = run({"solve", data("disjunction.lp"), "--program", "--models", "2"});
    EXPECT_EQ(two.err, "2 models\n");
    const Result h = run({"solve", data("disjunction.lp"), "--program", "--herbrand"});
    EXPECT_EQ(h.out, "Answer: 1\np(a)\nAnswer: 2\np(b)\n");
}

TEST(CliOptions, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "dcasm_cli_output.txt";
    std::filesystem::remove(path);
    const Result r = run({"solve", data("db.lp"), "-o", path.string()});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(path), golden("db.solve.out"));
    std::filesystem::remove(path);
}

TEST(CliOptions, ByteStable) {
    EXPECT_EQ(run({"solve", data("twentythree.lp"), "--program"}).out,
              run({"solve", data("twentythree.lp"), "--program"}).out);
}

TEST(CliErrors, ExitCodes) {
    EXPECT_EQ(run({"solve", data("missing.lp")}).status, 1);
    EXPECT_EQ(run({"frobnicate", data("db.lp")}).status, 1);
    EXPECT_EQ(run({"solve", data("db.lp"), "-una", "nobody"}).status, 1);
    EXPECT_EQ(run({"solve", data("db.lp"), "--herbrand"}).status, 1);
    EXPECT_EQ(run({"solve", data("db.lp"), "-una", "a", "-no-una", "b"}).status, 1);
    EXPECT_EQ(run({"solve", "--random", "2", "--seed", "1"}).status, 1);
    EXPECT_EQ(run({"check", "--random", "2"}).status, 1);
    EXPECT_EQ(run({"oracle", data("disjunction.lp"), "--program", "--models", "x"}).status, 1);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(CliErrors, ParseErrorHasPosition) {
    const auto path = std::filesystem::temp_directory_path() / "dcasm_cli_bad.lp";
    std::ofstream(path) << "part(p1";
    const Result r = run({"solve", path.string()});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find(":1:8: "), std::string::npos) << r.err;
    std::filesystem::remove(path);
}

TEST(CliErrors, GuardrailExitCode) {
    const auto path = std::filesystem::temp_directory_path() / "dcasm_cli_big.lp";
    std::ofstream(path) << "p(c0;c1;c2;c3;c4;c5;c6;c7;c8;c9;c10).\n";
    EXPECT_EQ(run({"oracle", path.string()}).status, 3);
    const auto wide = std::filesystem::temp_directory_path() / "dcasm_cli_wide.lp";
    std::ofstream(wide) << "{a;b;c;d;e;f;g;h;i;j;k;l;m;n;o;p;q;r;s;t;u;v;w;x;y}.\n";
    const Result r = run({"solve", wide.string(), "--program", "--herbrand"});
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.err.find("--force"), std::string::npos);
    std::filesystem::remove(path);
    std::filesystem::remove(wide);
}

TEST(CliErrors, OracleRejectsNegation) {
    const auto path = std::filesystem::temp_directory_path() / "dcasm_cli_neg.lp";
    std::ofstream(path) << "p(a) :- not p(b).\n";
    EXPECT_EQ(run({"oracle", path.string(), "--program"}).status, 1);
    EXPECT_EQ(run({"solve", path.string(), "--program"}).status, 0);
    std::filesystem::remove(path);
}
