#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "semrel/taxonomy.hpp"

namespace semrel {

/// Concept frequency counts, e.g. from a UMLSonMedline-style table.
struct FreqTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total_n = 0;  // always the sum of `counts`
};

/// Reads `concept_id<TAB>count`. Repeated ids are summed.
FreqTable load_freq_table(const std::filesystem::path& path);

enum class IcSource { Corpus, Intrinsic };

struct CorpusIcOptions {
  /// Add one to every concept count (N' = N + |concepts|) so unseen
  /// concepts still get finite IC.
  bool smoothing = true;
  /// Reject frequency entries for concepts the taxonomy does not declare
  /// instead of skipping them.
  bool strict = false;
};

/// Information content per concept, natural log.
class IcTable {
 public:
  IcTable(IcSource source, bool smoothing, std::vector<double> values)
      : source_(source), smoothing_(smoothing), values_(std::move(values)) {}

  double operator()(NodeId n) const { return values_[to_index(n)]; }
  std::size_t size() const noexcept { return values_.size(); }
  IcSource source() const noexcept { return source_; }
  bool smoothing() const noexcept { return smoothing_; }
  const char* log_base() const noexcept { return "e"; }
  double max_value() const;

  /// Concepts in the frequency table unknown to the taxonomy (skipped).
  const std::vector<std::string>& unknown_concepts() const noexcept { return unknown_; }
  void set_unknown_concepts(std::vector<std::string> ids) { unknown_ = std::move(ids); }

 private:
  IcSource source_;
  bool smoothing_;
  std::vector<double> values_;
  std::vector<std::string> unknown_;
};

/// IC(c) = -ln P(c*), where P(c*) sums the counts of c and of every
/// concept in its descendant set (each descendant once, however many
/// paths lead to it).
IcTable corpus_ic(const Taxonomy& t, const FreqTable& freq, CorpusIcOptions options = {});

/// IC(c) = -ln((leaves(c)/subsumers(c) + 1) / (max_leaves + 1)).
IcTable intrinsic_ic(const Taxonomy& t);

/// ic.tsv: `#source=<CORPUS|INTRINSIC> log_base=e smoothing=<on|off>`, any
/// further '#' lines, then `concept_id<TAB>ic` with 10 significant digits.
void write_ic(std::ostream& out, const Taxonomy& t, const IcTable& ic,
              const std::vector<std::string>& extra_header = {});
void save_ic(const std::filesystem::path& path, const Taxonomy& t, const IcTable& ic,
             const std::vector<std::string>& extra_header = {});
IcTable load_ic(const std::filesystem::path& path, const Taxonomy& t);

}  // namespace semrel
