#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semrel/matrix.hpp"
#include "semrel/relatedness.hpp"

namespace semrel {

/// Fractional ranks (1-based); tied values share the mean of their ranks.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman's rho with tie correction: Pearson correlation of the average
/// ranks. Needs at least 4 points; throws Errc::TooFewPoints,
/// Errc::InvalidArgument on a length mismatch and Errc::DegenerateRanking
/// when either side has zero rank variance.
double spearman(std::span<const double> x, std::span<const double> y);

struct FisherResult {
  double z = 0.0;
  double p = 1.0;  // two-tailed
};

/// Independent-samples comparison of two correlations via Fisher's r-to-z.
FisherResult fisher_r_to_z(double r1, std::size_t n1, double r2, std::size_t n2);

struct GoldPair {
  std::string term1;
  std::string term2;
  double human = 0.0;
};

/// Human-rated term pairs (a reference standard).
struct RefStandard {
  std::string name;
  std::vector<GoldPair> pairs;
};

/// `term1,term2,score` with an optional header line. Rejects duplicate
/// unordered pairs.
RefStandard load_gold(const std::filesystem::path& path);

using PairScorer = std::function<PairScore(const std::string&, const std::string&)>;

struct EvalResult {
  double rho = 0.0;
  std::size_t n_used = 0;
  std::size_t n_skipped = 0;
  std::map<PairStatus, std::size_t> skipped_by_status;
  std::vector<PairScore> scores;  // one per gold pair, in gold order
};

/// Scores every gold pair and correlates the scoreable ones with the human
/// ratings. Pairs with a non-ok status are skipped and counted.
EvalResult evaluate(const RefStandard& gold, const PairScorer& scorer);

struct SweepRow {
  double threshold = 0.0;
  std::size_t entries = 0;
  std::size_t n_used = 0;
  std::size_t n_skipped = 0;
  std::optional<double> rho;  // empty when the evaluation failed
  std::string error;
};

/// One matrix per threshold (strictly increasing), each evaluated with the
/// second-order vector method. A failing evaluation is reported in its row
/// and the sweep continues.
std::vector<SweepRow> threshold_sweep(const BigramCounts& bigrams, const Taxonomy& t, const Tokenizer& tok,
                                      const Similarity& sim, std::span<const double> thresholds,
                                      const RefStandard& gold, unsigned workers = 1);

std::vector<SweepRow> threshold_sweep(const std::filesystem::path& corpus, const Tokenizer& tok, const Taxonomy& t,
                                      const IcTable* ic, Measure m, std::span<const double> thresholds,
                                      const RefStandard& gold, const CorpusOptions& options = {});

/// Scorer running the second-order vector method over one matrix.
PairScorer vector_scorer(const Taxonomy& t, const Tokenizer& tok, const SimMatrix& matrix);

}  // namespace semrel
