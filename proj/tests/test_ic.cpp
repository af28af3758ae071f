#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixture.hpp"
#include "oracles.hpp"
#include "random_dag.hpp"
#include "semrel/error.hpp"
#include "semrel/ic.hpp"

using namespace semrel;
using testing_support::fixture;
using testing_support::fixture_taxonomy;

namespace {

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::Io;
}

}  // namespace

TEST(FreqTable, LoadsAndTotals) {
  FreqTable f = load_freq_table(fixture("freq.tsv"));
  EXPECT_EQ(f.total_n, 6u);
  EXPECT_EQ(f.counts.at("A1"), 2u);
  EXPECT_EQ(f.counts.at("R"), 0u);
}

TEST(FreqTable, RejectsMalformedCount) {
  auto dir = testing_support::scratch_dir("freq");
  testing_support::write_file(dir / "f.tsv", "A\t3\nB\t-1\n");
  EXPECT_EQ(error_of([&] { load_freq_table(dir / "f.tsv"); }), Errc::Parse);
  testing_support::write_file(dir / "g.tsv", "A\tlots\n");
  EXPECT_EQ(error_of([&] { load_freq_table(dir / "g.tsv"); }), Errc::Parse);
}

TEST(CorpusIc, FixtureUnsmoothed) {
  Taxonomy t = fixture_taxonomy();
  IcTable ic = corpus_ic(t, load_freq_table(fixture("freq.tsv")), {.smoothing = false});
  EXPECT_NEAR(ic(t.node("A")), -std::log(4.0 / 6.0), 1e-15);
  EXPECT_NEAR(ic(t.node("A")), 0.4055, 1e-4);
  EXPECT_EQ(ic(t.node("R")), 0.0);
  EXPECT_NEAR(ic(t.node("A1")), -std::log(2.0 / 6.0), 1e-15);
  EXPECT_NEAR(ic(t.node("A1")), 1.0986, 1e-4);
  EXPECT_EQ(ic.source(), IcSource::Corpus);
  EXPECT_FALSE(ic.smoothing());
}

TEST(CorpusIc, FixtureSmoothed) {
  // Smoothed counts A1:3 A2:2 B1:2 A:2 B:2 R:1, N' = 12.
  Taxonomy t = fixture_taxonomy();
  IcTable ic = corpus_ic(t, load_freq_table(fixture("freq.tsv")));
  EXPECT_NEAR(ic(t.node("A")), -std::log(7.0 / 12.0), 1e-15);
  EXPECT_NEAR(ic(t.node("B1")), -std::log(2.0 / 12.0), 1e-15);
  EXPECT_EQ(ic(t.root()), 0.0);
}

TEST(CorpusIc, UnsmoothedZeroMassConceptThrows) {
  Taxonomy t = fixture_taxonomy();
  FreqTable f;
  f.counts = {{"A1", 5}};
  f.total_n = 5;
  EXPECT_EQ(error_of([&] { corpus_ic(t, f, {.smoothing = false}); }), Errc::ZeroMass);
  EXPECT_NO_THROW(corpus_ic(t, f));
}

TEST(CorpusIc, EmptyTableUnsmoothedThrows) {
  Taxonomy t = fixture_taxonomy();
  EXPECT_EQ(error_of([&] { corpus_ic(t, FreqTable{}, {.smoothing = false}); }), Errc::ZeroMass);
}

TEST(CorpusIc, UnknownConceptsSkippedOrRejected) {
  Taxonomy t = fixture_taxonomy();
  FreqTable f = load_freq_table(fixture("freq.tsv"));
  f.counts["ZZZ"] = 100;
  f.total_n += 100;
  IcTable ic = corpus_ic(t, f, {.smoothing = false});
  EXPECT_EQ(ic.unknown_concepts(), std::vector<std::string>{"ZZZ"});
  // The unknown mass is not counted.
  EXPECT_NEAR(ic(t.node("A")), -std::log(4.0 / 6.0), 1e-15);
  EXPECT_EQ(error_of([&] { corpus_ic(t, f, {.smoothing = false, .strict = true}); }), Errc::UnknownConcept);
}

TEST(IntrinsicIc, Fixture) {
  Taxonomy t = fixture_taxonomy();
  IcTable ic = intrinsic_ic(t);
  EXPECT_EQ(ic(t.root()), 0.0);
  EXPECT_NEAR(ic(t.node("A1")), std::log(4.0), 1e-15);
  EXPECT_NEAR(ic(t.node("A")), std::log(2.0), 1e-15);
  EXPECT_EQ(ic.source(), IcSource::Intrinsic);
}

TEST(IcFile, RoundTrip) {
  Taxonomy t = fixture_taxonomy();
  IcTable ic = corpus_ic(t, load_freq_table(fixture("freq.tsv")));
  std::ostringstream out;
  write_ic(out, t, ic, {"config x=1"});
  std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "#source=CORPUS log_base=e smoothing=on");
  EXPECT_NE(text.find("#config x=1\n"), std::string::npos);
  EXPECT_NE(text.find("A\t0.5389965007\n"), std::string::npos);

  auto dir = testing_support::scratch_dir("icfile");
  save_ic(dir / "ic.tsv", t, ic);
  IcTable back = load_ic(dir / "ic.tsv", t);
  EXPECT_EQ(back.source(), IcSource::Corpus);
  EXPECT_TRUE(back.smoothing());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(back(to_node(i)), ic(to_node(i)), 1e-9);
  }
}

TEST(IcFile, MissingConceptRejected) {
  Taxonomy t = fixture_taxonomy();
  auto dir = testing_support::scratch_dir("icmissing");
  testing_support::write_file(dir / "ic.tsv", "#source=INTRINSIC log_base=e smoothing=off\nR\t0\n");
  EXPECT_EQ(error_of([&] { load_ic(dir / "ic.tsv", t); }), Errc::Parse);
  testing_support::write_file(dir / "noheader.tsv", "R\t0\n");
  EXPECT_EQ(error_of([&] { load_ic(dir / "noheader.tsv", t); }), Errc::Parse);
}

TEST(CorpusIcRandom, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto rt = testing_support::random_taxonomy(rng, 50);
    Taxonomy t = Taxonomy::build(rt.source);
    FreqTable f = testing_support::random_freq(rng, rt.dag);
    auto want = oracle::corpus_ic(rt.dag, f, true);
    IcTable ic = corpus_ic(t, f);
    for (int c = 0; c < rt.dag.size(); ++c) {
      ASSERT_NEAR(ic(t.node(rt.dag.ids[c])), want[c], 1e-12 * std::max(1.0, want[c]));
    }
    auto iwant = oracle::intrinsic_ic(rt.dag);
    IcTable intr = intrinsic_ic(t);
    for (int c = 0; c < rt.dag.size(); ++c) {
      ASSERT_NEAR(intr(t.node(rt.dag.ids[c])), iwant[c], 1e-12 * std::max(1.0, iwant[c]));
    }
  }
}

TEST(IntrinsicIcRandom, LeavesWithEqualSubsumersShareIc) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto rt = testing_support::random_taxonomy(rng, 50);
    Taxonomy t = Taxonomy::build(rt.source);
    IcTable ic = intrinsic_ic(t);
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        NodeId na = to_node(a), nb = to_node(b);
        if (t.is_leaf(na) && t.is_leaf(nb) && t.ancestors(na).size() == t.ancestors(nb).size()) {
          ASSERT_EQ(ic(na), ic(nb));
        }
      }
    }
  }
}
