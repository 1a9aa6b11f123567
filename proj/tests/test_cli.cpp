#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "schur_cli.hpp"

using namespace schur;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = schur::cli::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& f) { return oracle::data_path(f); }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("schur_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST(CliVerify, CorpusFiles) {
  auto r = run({"verify", data("table9.schur")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "ok: weakly-sumfree p=646 n=6\n");
  r = run({"verify", data("table5.schur")});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("constants=(33,6)"), std::string::npos);
  r = run({"verify", data("table6_printed.schur")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("duplicate integer 18 in subsets 1,2"), std::string::npos);
  EXPECT_NE(r.err.find("missing integer 49"), std::string::npos);
}

TEST(CliVerify, ViolationExitsOne) {
  const auto r = run({"verify", data("table9.schur"), "--kind", "sumfree"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.rfind("violation: sum-free violation:", 0), 0u);
}

TEST(CliVerify, ReinterpretAsTemplate) {
  EXPECT_EQ(run({"verify", data("table8_printed.schur"), "--kind", "ws-template", "--width", "30", "--tail", "12",
                 "--special", "4"})
                .status,
            1);
  EXPECT_EQ(run({"verify", data("table8_printed.schur"), "--kind", "s-template"}).status, 2);
  EXPECT_EQ(run({"verify", data("table8_printed.schur"), "--kind", "bogus"}).status, 2);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"verify"}).status, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/file"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST_F(CliFiles, ExpandTable5BySmallPartition) {
  const auto g = write("g.schur", "schur v1 kind=sumfree p=4 n=2\n1: 1 4\n2: 2 3\n");
  const auto r = run({"expand", data("table5.schur"), g, "-o", path("out.schur")});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto doc = parse_doc(read(path("out.schur")));
  EXPECT_EQ(doc.coloring.length(), 138);
  EXPECT_EQ(run({"verify", path("out.schur")}).status, 0);
  EXPECT_NE(read(path("out.schur")).find("# operation: schur expansion"), std::string::npos);
}

TEST_F(CliFiles, ExpandKindMismatchExitsTwo) {
  const auto r = run({"expand", data("table8.schur"), data("table9.schur")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("kind mismatch"), std::string::npos);
  EXPECT_EQ(run({"expand", data("table9.schur"), data("s3_13.schur")}).status, 2);
  EXPECT_EQ(run({"expand", data("table8.schur"), data("s3_13.schur"), "--tail", data("s3_13.schur")}).status, 2);
}

TEST_F(CliFiles, ExpandWeakWithTail) {
  const auto r = run({"expand", data("table8.schur"), data("s4_44.schur"), "--tail", data("table8_tail.schur"), "-o",
                      path("w.schur")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parse_doc(read(path("w.schur"))).coloring.length(), 1872);
  EXPECT_EQ(run({"verify", path("w.schur")}).status, 0);
}

TEST_F(CliFiles, ExpandRejectsFailingTail) {
  const auto bad = write("t.schur", "schur v1 kind=tail p=1 n=4 offset=23\n2: 24\n");
  EXPECT_EQ(run({"expand", data("table8.schur"), data("s4_44.schur"), "--tail", bad}).status, 1);
}

TEST_F(CliFiles, ComposeAndLift) {
  const auto f = write("f.schur", "schur v1 kind=weakly-sumfree p=2 n=1\n1: 1 2\n");
  ASSERT_EQ(run({"lift", f, "-o", path("lift.schur")}).status, 0);
  auto r = run({"compose", data("table5.schur"), path("lift.schur"), "-o", path("c.schur")});
  ASSERT_EQ(r.status, 0) << r.err;
  r = run({"verify", path("c.schur")});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("width=132 tail=2"), std::string::npos);
  EXPECT_NE(r.out.find("constants=(132,26)"), std::string::npos);
  const auto small = write("s.schur", "schur v1 kind=s-template p=3 n=2 special=1\n1: 1 3\n2: 2\n");
  r = run({"compose", small, small});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("kind=s-template p=9 n=3"), std::string::npos);
  EXPECT_EQ(run({"compose", data("table9.schur"), small}).status, 2);
}

TEST_F(CliFiles, CompleteReproducesTable8) {
  const auto r = run({"complete", data("table8_printed.schur"), "--tail", "23", "--special", "4", "--tail-file",
                      data("table8_tail.schur"), "-o", path("t8.schur")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parse_doc(read(path("t8.schur"))).coloring, parse_doc(read(data("table8.schur"))).coloring);
  EXPECT_NE(r.out.find("constants=(42,24)"), std::string::npos);
}

TEST(CliBounds, LedgerAndTables) {
  auto r = run({"bounds", "10"});
  EXPECT_EQ(r.status, 0);
  const std::string last = "S 10 60948 rule:380x+148 pred:5\n";
  ASSERT_GE(r.out.size(), last.size());
  EXPECT_EQ(r.out.substr(r.out.size() - last.size()), last);
  r = run({"bounds", "15", "--table3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("60948*"), std::string::npos);
  EXPECT_NE(r.out.find("mismatches against the printed table: 0"), std::string::npos);
  r = run({"bounds", "15", "--table4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("mismatches against the printed table: 0"), std::string::npos);
}

TEST_F(CliFiles, EncodeSolveDecode) {
  auto r = run({"encode", "--kind", "s-template", "--width", "9", "--colors", "3", "--special", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto cnf = write("i.cnf", r.out);
  const CnfInstance inst = parse_dimacs(r.out);
  // Any model will do: encode a known template.
  SearchSpec s = inst.spec;
  const auto f = find_first(s);
  ASSERT_TRUE(f);
  std::string model = "s SATISFIABLE\nv";
  const auto a = encode_assignment(inst, f->coloring);
  for (int v = 1; v <= inst.num_vars; ++v) model += " " + std::to_string(a[v] ? v : -v);
  model += " 0\n";
  const auto m = write("m.txt", model);
  r = run({"decode", cnf, m, "-o", path("d.schur")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parse_doc(read(path("d.schur"))).coloring, f->coloring);
  EXPECT_EQ(run({"verify", path("d.schur")}).status, 0);
}

TEST_F(CliFiles, MalformedModelExitsTwo) {
  auto r = run({"encode", "--kind", "sumfree", "--length", "5", "--colors", "2"});
  const auto cnf = write("i.cnf", r.out);
  EXPECT_EQ(run({"decode", cnf, write("m.txt", "v 1 banana 0\n")}).status, 2);
  EXPECT_EQ(run({"decode", cnf, write("u.txt", "s UNSATISFIABLE\n")}).status, 2);
  EXPECT_EQ(run({"decode", cnf, write("n.txt", "v -1 -2 -3 -4 -5 -6 -7 -8 -9 -10 0\n")}).status, 2);
  EXPECT_EQ(run({"encode", "--kind", "nope", "--colors", "2", "--length", "3"}).status, 2);
}

TEST(CliSearch, ExactValuesAndRefusals) {
  auto r = run({"search", "--kind", "sumfree", "--colors", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("S(3) = 13\n", 0), 0u);
  EXPECT_NE(r.out.find("schur v1 kind=sumfree p=13 n=3"), std::string::npos);
  r = run({"search", "--kind", "weak", "--colors", "2"});
  EXPECT_EQ(r.out.rfind("WS(2) = 8\n", 0), 0u);
  r = run({"search", "--kind", "sumfree", "--colors", "5"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("refused"), std::string::npos);
  r = run({"search", "--kind", "sumfree", "--colors", "5", "--length", "150", "--node-limit", "1000"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("estimated nodes"), std::string::npos);
  r = run({"search", "--kind", "sumfree", "--colors", "3", "--length", "14"});
  EXPECT_EQ(r.status, 1);
  r = run({"search", "--kind", "s-template", "--colors", "3"});
  EXPECT_EQ(r.out.rfind("max width 9\n", 0), 0u);
}

TEST(CliCorpus, AllEntriesAsExpected) {
  const auto r = run({"corpus", "--data", SCHUR_DATA_DIR});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("corpus: all as expected"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliFiles, CorpusDetectsTampering) {
  for (const auto& e : fs::directory_iterator(SCHUR_DATA_DIR)) fs::copy(e.path(), dir_ / e.path().filename());
  std::ofstream(path("table5.schur"), std::ios::app) << "# edited\n";
  const auto r = run({"corpus", "--data", dir_.string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL table5: checksum mismatch"), std::string::npos);
}

TEST(CliDeterminism, RepeatedRunsAreIdentical) {
  const auto a = run({"search", "--kind", "sumfree", "--colors", "4"});
  const auto b = run({"search", "--kind", "sumfree", "--colors", "4"});
  EXPECT_EQ(a.out, b.out);
}
