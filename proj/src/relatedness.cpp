#include "semrel/relatedness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <set>

#include "semrel/error.hpp"

namespace semrel {

SuperGloss build_supergloss(const Taxonomy& t, const Tokenizer& tok, NodeId c) {
  SuperGloss g{c, {}, {}};
  auto add = [&](NodeId source, std::optional<RelationKind> kind) {
    auto defs = t.definitions(source);
    if (defs.empty()) return;
    for (const auto& d : defs) {
      auto toks = tok.tokenize(d);
      g.tokens.insert(g.tokens.end(), std::make_move_iterator(toks.begin()), std::make_move_iterator(toks.end()));
    }
    g.sources.push_back({source, kind});
  };
  add(c, std::nullopt);
  // Neighbors come sorted by ConceptId then kind, so the first entry of a
  // run carries the first kind in PAR, CHD, RB, RN, TERM order.
  std::optional<NodeId> last;
  for (const Neighbor& nb : t.neighbors(c)) {
    if (last && *last == nb.node) continue;
    last = nb.node;
    add(nb.node, nb.kind);
  }
  if (g.tokens.empty()) throw Error(Errc::EmptySuperGloss, "empty super-gloss for " + t.id(c));
  return g;
}

SecondOrderVector second_order_vector(std::span<const std::string> tokens, const SimMatrix& matrix) {
  SecondOrderVector v;
  for (const auto& token : tokens) {
    FirstOrderVector row = matrix.row(token);
    if (row.weights.empty()) continue;
    ++v.contributing;
    for (const auto& [word, w] : row.weights) v.weights[word] += w;
  }
  if (v.contributing == 0) throw Error(Errc::NoContextualSignal, "no contextual signal: no gloss token is in the matrix");
  const double n = static_cast<double>(v.contributing);
  for (auto& [word, w] : v.weights) w /= n;
  return v;
}

SecondOrderVector second_order_vector(const SuperGloss& g, const SimMatrix& matrix) {
  return second_order_vector(std::span<const std::string>(g.tokens), matrix);
}

double cosine(const SparseVector& a, const SparseVector& b) {
  double na = 0.0, nb = 0.0, dot = 0.0;
  for (const auto& [k, w] : a) na += w * w;
  for (const auto& [k, w] : b) nb += w * w;
  if (na == 0.0 || nb == 0.0) throw Error(Errc::NoContextualSignal, "no contextual signal: zero vector");
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia, ++ib;
    }
  }
  // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): identical vectors give
  // exactly 1.
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

namespace {

/// Max of score(prep(s1), prep(s2)) over the sense pairs of two terms.
/// Senses whose representation cannot be built are skipped; a side with no
/// usable sense rethrows the error of its first sense.
template <typename Prep, typename Score>
double max_over_senses(const Taxonomy& t, std::string_view term1, std::string_view term2, Prep prep, Score score) {
  using Rep = decltype(prep(NodeId{}));
  auto side = [&](std::string_view term) {
    auto senses = t.senses(term);
    if (senses.empty()) throw Error(Errc::UnmappableTerm, "unmappable term: " + std::string(term));
    std::vector<Rep> reps;
    std::exception_ptr first_error;
    for (NodeId s : senses) {
      try {
        reps.push_back(prep(s));
      } catch (const Error& e) {
        if (e.code() != Errc::EmptySuperGloss && e.code() != Errc::NoContextualSignal) throw;
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (reps.empty()) std::rethrow_exception(first_error);
    return reps;
  };
  auto r1 = side(term1);
  auto r2 = side(term2);
  double best = 0.0;
  bool first = true;
  for (const auto& a : r1) {
    for (const auto& b : r2) {
      double v = score(a, b);
      if (first || v > best) best = v;
      first = false;
    }
  }
  return best;
}

double vector_relatedness(const Taxonomy& t, const Tokenizer& tok, const SimMatrix& matrix, std::string_view term1,
                          std::string_view term2) {
  return max_over_senses(
      t, term1, term2, [&](NodeId s) { return second_order_vector(build_supergloss(t, tok, s), matrix); },
      [](const SecondOrderVector& a, const SecondOrderVector& b) { return cosine(a, b); });
}

}  // namespace

double relate_pair(const Taxonomy& t, const Tokenizer& tok, const SimMatrix& matrix, std::string_view term1,
                   std::string_view term2) {
  return vector_relatedness(t, tok, matrix, term1, term2);
}

double o2_score(const Taxonomy& t, const Tokenizer& tok, const SimMatrix& count_matrix, std::string_view term1,
                std::string_view term2) {
  if (count_matrix.meta().mode != MatrixMode::Count) {
    throw Error(Errc::InvalidArgument, "o2vector needs a co-occurrence count matrix");
  }
  return vector_relatedness(t, tok, count_matrix, term1, term2);
}

double lesk_score(std::span<const std::string> g1, std::span<const std::string> g2) {
  // Extraction runs on a canonical ordering of the pair so that tie-breaks
  // between equal-length overlaps cannot make the score asymmetric.
  if (std::lexicographical_compare(g2.begin(), g2.end(), g1.begin(), g1.end())) std::swap(g1, g2);
  const std::size_t n = g1.size(), m = g2.size();
  std::vector<char> used1(n, 0), used2(m, 0);
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  double score = 0.0;
  while (true) {
    std::size_t best = 0, end1 = 0, end2 = 0;
    std::fill(prev.begin(), prev.end(), 0);
    for (std::size_t i = 1; i <= n; ++i) {
      cur[0] = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        bool match = !used1[i - 1] && !used2[j - 1] && g1[i - 1] == g2[j - 1];
        cur[j] = match ? prev[j - 1] + 1 : 0;
        if (cur[j] > best) best = cur[j], end1 = i, end2 = j;
      }
      std::swap(prev, cur);
    }
    if (best == 0) break;
    for (std::size_t k = 0; k < best; ++k) {
      used1[end1 - 1 - k] = 1;
      used2[end2 - 1 - k] = 1;
    }
    score += static_cast<double>(best * best);
  }
  return score;
}

double o1_score(std::span<const std::string> g1, std::span<const std::string> g2) {
  SparseVector f1, f2;
  for (const auto& w : g1) f1[w] += 1.0;
  for (const auto& w : g2) f2[w] += 1.0;
  return cosine(f1, f2);
}

std::string_view method_name(RelateMethod m) {
  switch (m) {
    case RelateMethod::Vector: return "vector";
    case RelateMethod::Lesk: return "lesk";
    case RelateMethod::O1: return "o1";
    case RelateMethod::O2: return "o2";
  }
  return "?";
}

std::optional<RelateMethod> parse_method(std::string_view name) {
  for (RelateMethod m : {RelateMethod::Vector, RelateMethod::Lesk, RelateMethod::O1, RelateMethod::O2}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

double relate_terms(RelateMethod method, const Taxonomy& t, const Tokenizer& tok, const SimMatrix* matrix,
                    std::string_view term1, std::string_view term2) {
  auto gloss = [&](NodeId s) { return build_supergloss(t, tok, s); };
  switch (method) {
    case RelateMethod::Vector:
    case RelateMethod::O2:
      if (matrix == nullptr) {
        throw Error(Errc::InvalidArgument, std::string(method_name(method)) + " needs a matrix");
      }
      return method == RelateMethod::Vector ? relate_pair(t, tok, *matrix, term1, term2)
                                            : o2_score(t, tok, *matrix, term1, term2);
    case RelateMethod::Lesk:
      return max_over_senses(t, term1, term2, gloss,
                             [](const SuperGloss& a, const SuperGloss& b) { return lesk_score(a, b); });
    case RelateMethod::O1:
      return max_over_senses(t, term1, term2, gloss,
                             [](const SuperGloss& a, const SuperGloss& b) { return o1_score(a, b); });
  }
  return 0.0;
}

std::string_view status_name(PairStatus s) {
  switch (s) {
    case PairStatus::Ok: return "ok";
    case PairStatus::Unmappable: return "unmappable";
    case PairStatus::EmptyGloss: return "empty_gloss";
    case PairStatus::NoSignal: return "no_signal";
  }
  return "?";
}

PairScore guarded(const std::function<double()>& score) {
  try {
    return {PairStatus::Ok, score()};
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::UnmappableTerm: return {PairStatus::Unmappable, 0.0};
      case Errc::EmptySuperGloss: return {PairStatus::EmptyGloss, 0.0};
      case Errc::NoContextualSignal: return {PairStatus::NoSignal, 0.0};
      default: throw;
    }
  }
}

}  // namespace semrel
