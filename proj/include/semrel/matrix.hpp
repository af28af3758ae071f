#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semrel/measures.hpp"
#include "semrel/tokenizer.hpp"

namespace semrel {

enum class MatrixMode { Measure, Count };

struct MatrixMeta {
  MatrixMode mode = MatrixMode::Count;
  std::optional<Measure> measure;  // set iff mode == Measure
  double threshold = 0.0;
  std::string corpus_fingerprint;  // CRC-32 (hex) of the corpus bytes
  std::uint64_t unmappable_bigrams = 0;
  std::vector<std::string> notes;  // free-form header lines, '#' stripped

  friend bool operator==(const MatrixMeta&, const MatrixMeta&) = default;
};

/// One stored cell; always word_a < word_b.
struct MatrixEntry {
  std::string a;
  std::string b;
  double score = 0.0;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

using SparseVector = std::map<std::string, double, std::less<>>;

/// A matrix row: the words linked to one word, with their scores.
struct FirstOrderVector {
  SparseVector weights;
};

/// Sparse symmetric word-by-word matrix, each unordered pair stored once in
/// lexicographic order. Immutable once built.
class SimMatrix {
 public:
  SimMatrix() = default;
  /// Canonicalizes pair order and sorts. Throws Errc::InvalidArgument on a
  /// self pair or a repeated pair.
  SimMatrix(MatrixMeta meta, std::vector<MatrixEntry> entries);

  const MatrixMeta& meta() const noexcept { return meta_; }
  const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::string>& vocab() const noexcept { return vocab_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  double total_mass() const;

  /// Every entry with w on either side. Unknown words give an empty row.
  FirstOrderVector row(std::string_view w) const;

  /// Returns a copy with replaced header notes (used to echo run config).
  SimMatrix with_notes(std::vector<std::string> notes) const;

  friend bool operator==(const SimMatrix& x, const SimMatrix& y) {
    return x.meta_ == y.meta_ && x.entries_ == y.entries_;
  }

 private:
  MatrixMeta meta_;
  std::vector<MatrixEntry> entries_;
  std::vector<std::string> vocab_;
  // Per vocab word: (index of the other word, score).
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows_;
};

struct CorpusOptions {
  /// Pairs (t_i, t_j) with 1 <= j - i <= window, inside one line.
  std::size_t window = 1;
  /// Fail on invalid UTF-8 instead of skipping the line.
  bool strict_utf8 = false;
  unsigned workers = 1;
};

struct BigramCounts {
  /// Ordered (left, right) pairs as they occur.
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t lines = 0;
  std::uint64_t skipped_lines = 0;
  std::vector<std::string> warnings;
  std::string fingerprint;
};

/// Adjacent token pairs within each line (one document per line), counted
/// over the whole corpus.
BigramCounts extract_bigrams(const std::filesystem::path& corpus, const Tokenizer& tok,
                             const CorpusOptions& options = {});

/// Raw co-occurrence counts, no taxonomy.
SimMatrix build_count_matrix(const std::filesystem::path& corpus, const Tokenizer& tok,
                             const CorpusOptions& options = {});
SimMatrix count_matrix(const BigramCounts& bigrams);

/// Every distinct unordered bigram whose words both map to a concept, with
/// its best-sense similarity, before thresholding.
struct ScoredBigrams {
  Measure measure = Measure::Path;
  std::vector<MatrixEntry> pairs;  // canonical and sorted
  std::uint64_t unmappable = 0;    // distinct pairs dropped for an unmapped word
  std::string fingerprint;
};

ScoredBigrams score_bigrams(const BigramCounts& bigrams, const Similarity& sim, unsigned workers = 1);

/// Keeps pairs scoring strictly greater than `threshold`. The threshold must
/// be >= 0, and <= 1 for bounded measures.
SimMatrix select_threshold(const ScoredBigrams& scored, double threshold);

SimMatrix build_sim_matrix(const std::filesystem::path& corpus, const Tokenizer& tok, const Taxonomy& t,
                           const IcTable* ic, Measure m, double threshold, const CorpusOptions& options = {},
                           MeasureOptions measure_options = {});

/// Line format:
///   #semrel-matrix v1 mode=<measure|count> measure=<name|-> threshold=<real> vocab=<n> entries=<n>
///   #meta corpus=<hex> unmappable=<n>
///   #<note>            (zero or more)
///   word_a<TAB>word_b<TAB>score   (sorted, word_a < word_b)
///   #checksum=<crc32 hex of the body bytes>
void write_matrix(std::ostream& out, const SimMatrix& m);
SimMatrix read_matrix(std::istream& in);
void save_matrix(const SimMatrix& m, const std::filesystem::path& path);
SimMatrix load_matrix(const std::filesystem::path& path);

}  // namespace semrel
