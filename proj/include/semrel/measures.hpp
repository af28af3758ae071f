#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "semrel/ic.hpp"
#include "semrel/taxonomy.hpp"

namespace semrel {

enum class Measure { Path, Wup, Zhong, Pks, Cmatch, Batet, Res, Lin, Jcn, Faith };

inline constexpr Measure kAllMeasures[] = {Measure::Path,   Measure::Wup,   Measure::Zhong, Measure::Pks,
                                           Measure::Cmatch, Measure::Batet, Measure::Res,   Measure::Lin,
                                           Measure::Jcn,    Measure::Faith};

/// Lowercase name: path, wup, zhong, pks, cmatch, batet, res, lin, jcn, faith.
std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
/// "path, wup, ..." for error messages.
std::string measure_names();

bool requires_ic(Measure m);
/// Measures whose values lie in [0, 1].
bool is_bounded(Measure m);

struct MeasureOptions {
  double zhong_k = 2.0;
  /// jcn returns 1/epsilon when the IC distance is zero.
  double jcn_epsilon = 1e-4;
};

struct SimScore {
  double value = 0.0;
  Measure measure = Measure::Path;
};

/// One measure bound to a taxonomy (and IC table for res/lin/jcn/faith).
/// Stateless apart from the references; safe to share across threads. The
/// referenced taxonomy and IC table must outlive it.
class Similarity {
 public:
  /// Throws Errc::MissingIc when an IC measure gets no table.
  Similarity(const Taxonomy& taxonomy, const IcTable* ic, Measure measure, MeasureOptions options = {});

  Measure measure() const noexcept { return measure_; }
  const Taxonomy& taxonomy() const noexcept { return taxonomy_; }

  SimScore operator()(NodeId a, NodeId b) const;

  /// Maximum over all sense pairs of the two surface terms. Throws
  /// Errc::UnmappableTerm naming the term when either has no sense.
  SimScore best_sense(std::string_view term1, std::string_view term2) const;
  double best_sense(std::span<const NodeId> senses1, std::span<const NodeId> senses2) const;

  /// Member of lcs_set with the greatest depth (ties: smallest ConceptId).
  NodeId deepest_lcs(NodeId a, NodeId b) const;
  /// Member of lcs_set with the greatest IC.
  NodeId max_ic_lcs(NodeId a, NodeId b) const;

 private:
  const Taxonomy& taxonomy_;
  const IcTable* ic_;
  Measure measure_;
  MeasureOptions options_;
};

SimScore similarity(const Taxonomy& t, const IcTable* ic, Measure m, NodeId a, NodeId b,
                    MeasureOptions options = {});
SimScore best_sense_similarity(const Taxonomy& t, const IcTable* ic, Measure m, std::string_view term1,
                               std::string_view term2, MeasureOptions options = {});

}  // namespace semrel
