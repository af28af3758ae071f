#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "fixture.hpp"

using testing_support::fixture;
using testing_support::scratch_dir;
using testing_support::slurp;
using testing_support::write_file;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::string& args, const std::string& tag) {
  auto dir = scratch_dir("run_" + tag);
  auto out = dir / "stdout.txt";
  auto err = dir / "stderr.txt";
  std::string cmd = std::string("\"") + SEMREL_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string tax() { return "--taxonomy \"" + testing_support::fixture_dir().string() + "\" "; }
std::string path(const char* name) { return "\"" + fixture(name).string() + "\" "; }

std::string body(const std::string& text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (text[pos] != '#') out += text.substr(pos, end - pos) + "\n";
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST(Cli, SimPath) {
  CliRun r = run("sim " + tax() + "--measure path A1 A2", "sim_path");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 6), "0.3333");
}

TEST(Cli, SimTermsAndIdentity) {
  CliRun r = run("sim " + tax() + "--measure lin --freq " + path("freq.tsv") + "bronchus bronchus", "sim_lin");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, UnknownMeasureListsValidNames) {
  CliRun r = run("sim " + tax() + "--measure cosine A1 A2", "sim_bad");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("path, wup, zhong, pks, cmatch, batet, res, lin, jcn, faith"), std::string::npos);
}

TEST(Cli, IcMeasureWithoutIcIsUsageError) {
  CliRun r = run("sim " + tax() + "--measure res A1 A2", "sim_noic");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, IcFromFrequencies) {
  CliRun r = run("ic " + tax() + "--freq " + path("freq.tsv") + "--no-smoothing", "ic_corpus");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "#source=CORPUS log_base=e smoothing=off");
  EXPECT_NE(r.out.find("\nA\t0.4054651081\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nA1\t1.098612289\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nR\t0\n"), std::string::npos);
}

TEST(Cli, IcIntrinsic) {
  CliRun r = run("ic " + tax() + "--intrinsic", "ic_intrinsic");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\nA1\t1.386294361\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nA\t0.6931471806\n"), std::string::npos);
}

TEST(Cli, MissingFileExitsTwo) {
  CliRun r = run("ic " + tax() + "--freq /nonexistent/freq.tsv", "ic_missing");
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BadFlagExitsTwo) {
  EXPECT_EQ(run("sim --no-such-flag", "badflag").code, 2);
  EXPECT_EQ(run("", "nosub").code, 2);
}

TEST(Cli, HelpPerSubcommand) {
  for (const char* sub : {"ic", "sim", "matrix", "relate", "eval", "sweep"}) {
    CliRun r = run(std::string(sub) + " --help", std::string("help_") + sub);
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("Usage"), std::string::npos) << sub;
  }
}

TEST(Cli, MatrixDeterministicAcrossRunsAndWorkers) {
  auto dir = scratch_dir("cli_matrix");
  std::string common = "matrix " + tax() + "--corpus " + path("corpus.txt") + "--measure res --freq " + path("freq.tsv");
  EXPECT_EQ(run(common + "-o \"" + (dir / "a.txt").string() + "\" --workers 1", "m1").code, 0);
  EXPECT_EQ(run(common + "-o \"" + (dir / "b.txt").string() + "\" --workers 8", "m8").code, 0);
  EXPECT_EQ(slurp(dir / "a.txt"), slurp(dir / "b.txt"));
  EXPECT_NE(slurp(dir / "a.txt").find("\n#config "), std::string::npos);
}

TEST(Cli, MatrixThresholdIsStrict) {
  CliRun r = run("matrix " + tax() + "--corpus " + path("corpus.txt") + "--measure path --threshold 0.5", "m_strict");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("entries=12"), std::string::npos);
  EXPECT_EQ(r.out.find("\t0.5\n"), std::string::npos);
}

TEST(Cli, CountMatrixNeedsNoTaxonomy) {
  CliRun r = run("matrix --count --corpus " + path("corpus.txt"), "m_count");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mode=count measure=- threshold=0 vocab=31 entries=66"), std::string::npos);
}

TEST(Cli, RelateVectorMatchesExpected) {
  CliRun r = run("relate " + tax() + "--corpus " + path("corpus.txt") + "--measure res --freq " + path("freq.tsv") +
                  "--pairs " + path("gold.csv"),
              "relate");
  EXPECT_EQ(r.code, 0) << r.err;
  std::string b = body(r.out);
  EXPECT_EQ(b.substr(0, b.find('\n')), "term1,term2,score,status");
  EXPECT_NE(b.find("bronchus,trachea,0.69860886557196"), std::string::npos);
  EXPECT_NE(b.find("trachea,windpipe,1,ok"), std::string::npos);
}

TEST(Cli, RelateStatusColumn) {
  auto dir = scratch_dir("cli_pairs");
  write_file(dir / "pairs.csv", "bronchus,xyzzy\nbronchus,trachea\n");
  CliRun r = run("relate " + tax() + "--method lesk --pairs \"" + (dir / "pairs.csv").string() + "\"", "relate_lesk");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bronchus,xyzzy,,unmappable"), std::string::npos);
  EXPECT_NE(r.out.find("bronchus,trachea,"), std::string::npos);
}

TEST(Cli, EvalFromScoresFile) {
  auto dir = scratch_dir("cli_eval");
  // Perfect scorer: the human scores themselves.
  write_file(dir / "scores.csv", slurp(fixture("gold.csv")));
  CliRun r = run("eval --gold " + path("gold.csv") + "--scores \"" + (dir / "scores.csv").string() + "\"", "eval_perfect");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rho\t1\n"), std::string::npos);
  EXPECT_NE(r.out.find("n_skipped\t0\n"), std::string::npos);
}

TEST(Cli, EvalDegenerateExitsOne) {
  auto dir = scratch_dir("cli_eval_const");
  write_file(dir / "scores.csv",
             "bronchus,trachea,1\nbronchus,airway,1\ntrachea,windpipe,1\nartery,vessel,1\nbronchus,artery,1\n"
             "trachea,heart,1\n");
  CliRun r = run("eval --gold " + path("gold.csv") + "--scores \"" + (dir / "scores.csv").string() + "\"", "eval_const");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("degenerate ranking"), std::string::npos);
}

TEST(Cli, EvalLive) {
  CliRun r = run("eval " + tax() + "--gold " + path("gold.csv") + "--corpus " + path("corpus.txt") + "--measure path",
              "eval_live");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rho\t0.485714285714285"), std::string::npos);
}

TEST(Cli, SweepTable) {
  CliRun r = run("sweep " + tax() + "--corpus " + path("corpus.txt") + "--measure res --freq " + path("freq.tsv") +
                  "--thresholds 0,0.5,1,1.5,2 --gold " + path("gold.csv"),
              "sweep");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("threshold\tentries\tn_used\tn_skipped\trho\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n0\t22\t6\t0\t0.5428571428571428\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n1\t10\t6\t0\t0.2571428571428571\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n2\t0\t0\t6\tNA\n"), std::string::npos);
  EXPECT_NE(r.out.find("# bigrams"), std::string::npos);
}

TEST(Cli, ConfigRoundTrip) {
  auto dir = scratch_dir("cli_config");
  std::string args = "sweep " + tax() + "--corpus " + path("corpus.txt") + "--measure path --thresholds 0,0.4,0.9 --gold " +
                     path("gold.csv");
  CliRun first = run(args, "cfg1");
  ASSERT_EQ(first.code, 0) << first.err;
  std::string cfg;
  std::size_t pos = 0;
  while ((pos = first.out.find("#config ", pos)) != std::string::npos) {
    std::size_t end = first.out.find('\n', pos);
    cfg += first.out.substr(pos + 8, end - pos - 8) + "\n";
    pos = end;
  }
  ASSERT_FALSE(cfg.empty());
  write_file(dir / "run.ini", cfg);
  CliRun second = run("sweep --config \"" + (dir / "run.ini").string() + "\"", "cfg2");
  EXPECT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(second.out, first.out);
  // Flags override the file.
  CliRun third = run("sweep --config \"" + (dir / "run.ini").string() + "\" --measure wup", "cfg3");
  EXPECT_EQ(third.code, 0) << third.err;
  EXPECT_NE(third.out.find("sweep.measure=\"wup\""), std::string::npos);
}
