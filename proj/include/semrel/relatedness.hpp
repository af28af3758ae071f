#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semrel/matrix.hpp"
#include "semrel/taxonomy.hpp"
#include "semrel/tokenizer.hpp"

namespace semrel {

struct GlossSource {
  NodeId node;
  std::optional<RelationKind> relation;  // empty for the concept's own definitions

  friend bool operator==(const GlossSource&, const GlossSource&) = default;
};

/// Definitions of a concept followed by those of every concept related to
/// it by PAR, CHD, RB, RN or TERM, tokenized.
struct SuperGloss {
  NodeId node;
  std::vector<std::string> tokens;
  std::vector<GlossSource> sources;
};

/// Own definitions first, then neighbors in ConceptId order, each neighbor
/// once however many relation kinds link it. Throws
/// Errc::EmptySuperGloss when no tokens result.
SuperGloss build_supergloss(const Taxonomy& t, const Tokenizer& tok, NodeId c);

struct SecondOrderVector {
  SparseVector weights;
  std::size_t contributing = 0;  // gloss tokens with a non-empty matrix row
};

/// Mean of the matrix rows of the gloss tokens, counting repeated tokens
/// each time. Tokens without a row are left out of the mean. Throws
/// Errc::NoContextualSignal when no token has a row.
SecondOrderVector second_order_vector(const SuperGloss& g, const SimMatrix& matrix);
SecondOrderVector second_order_vector(std::span<const std::string> tokens, const SimMatrix& matrix);

/// Cosine of two non-negative vectors, in [0, 1]. Throws
/// Errc::NoContextualSignal on a zero vector.
double cosine(const SparseVector& a, const SparseVector& b);
inline double cosine(const SecondOrderVector& a, const SecondOrderVector& b) { return cosine(a.weights, b.weights); }

/// Second-order vector relatedness of two surface terms: the best cosine
/// over their sense pairs.
double relate_pair(const Taxonomy& t, const Tokenizer& tok, const SimMatrix& matrix, std::string_view term1,
                   std::string_view term2);

/// Extended gloss overlap: maximal shared token runs are taken greedily,
/// longest first, each token used at most once per side; the score is the
/// sum of squared run lengths.
double lesk_score(std::span<const std::string> g1, std::span<const std::string> g2);
inline double lesk_score(const SuperGloss& g1, const SuperGloss& g2) { return lesk_score(g1.tokens, g2.tokens); }

/// Cosine of the token-frequency vectors of two glosses.
double o1_score(std::span<const std::string> g1, std::span<const std::string> g2);
inline double o1_score(const SuperGloss& g1, const SuperGloss& g2) { return o1_score(g1.tokens, g2.tokens); }

/// relate_pair over a raw co-occurrence (COUNT mode) matrix.
double o2_score(const Taxonomy& t, const Tokenizer& tok, const SimMatrix& count_matrix, std::string_view term1,
                std::string_view term2);

enum class RelateMethod { Vector, Lesk, O1, O2 };

std::string_view method_name(RelateMethod m);
std::optional<RelateMethod> parse_method(std::string_view name);

/// Term-level score for any method; every method takes the maximum over
/// sense pairs. `matrix` is required for Vector and O2 only.
double relate_terms(RelateMethod method, const Taxonomy& t, const Tokenizer& tok, const SimMatrix* matrix,
                    std::string_view term1, std::string_view term2);

enum class PairStatus { Ok, Unmappable, EmptyGloss, NoSignal };

std::string_view status_name(PairStatus s);

struct PairScore {
  PairStatus status = PairStatus::Ok;
  double value = 0.0;
};

/// Runs `score`, turning the three expected per-pair failures into a status.
/// Anything else propagates.
PairScore guarded(const std::function<double()>& score);

}  // namespace semrel
