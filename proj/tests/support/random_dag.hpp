#pragma once

// Random taxonomies for property and oracle tests.

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "semrel/ic.hpp"
#include "semrel/taxonomy.hpp"

namespace testing_support {

/// Plain adjacency view of a generated hierarchy. Node 0 is the root; every
/// other node's parents have smaller indices.
struct Dag {
  std::vector<std::string> ids;
  std::vector<std::vector<int>> parents;
  std::vector<std::vector<int>> children;
  int size() const { return static_cast<int>(ids.size()); }
};

struct RandomTaxonomy {
  Dag dag;
  semrel::TaxonomySource source;
  std::vector<std::string> vocab;
};

inline Dag random_dag(std::mt19937_64& rng, int n, int max_parents = 3) {
  Dag d;
  d.parents.resize(n);
  d.children.resize(n);
  // Unique ids, unrelated to index order.
  std::vector<int> codes(n);
  for (int i = 0; i < n; ++i) codes[i] = i * 7 + 3;
  std::shuffle(codes.begin(), codes.end(), rng);
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "C%05d", codes[i]);
    d.ids.emplace_back(buf);
  }
  for (int i = 1; i < n; ++i) {
    int k = std::uniform_int_distribution<int>(1, std::min(max_parents, i))(rng);
    std::vector<int> pool(i);
    for (int j = 0; j < i; ++j) pool[j] = j;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int j = 0; j < k; ++j) {
      d.parents[i].push_back(pool[j]);
      d.children[pool[j]].push_back(i);
    }
  }
  return d;
}

/// A random DAG plus definitions, an index over a small vocabulary, and a
/// few non-hierarchical relations.
inline RandomTaxonomy random_taxonomy(std::mt19937_64& rng, int n, int max_parents = 3, int vocab_size = 24) {
  RandomTaxonomy r;
  r.dag = random_dag(rng, n, max_parents);
  const Dag& d = r.dag;
  for (int i = 0; i < vocab_size; ++i) r.vocab.push_back("w" + std::to_string(i));

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i : order) r.source.concepts.push_back({d.ids[i], "term " + d.ids[i]});

  std::bernoulli_distribution coin(0.5);
  for (int c = 0; c < n; ++c) {
    for (int p : d.parents[c]) {
      if (coin(rng)) {
        r.source.relations.push_back({d.ids[c], semrel::RelationKind::Par, d.ids[p], ""});
      } else {
        r.source.relations.push_back({d.ids[p], semrel::RelationKind::Chd, d.ids[c], ""});
      }
    }
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int k = 0; k < n / 4; ++k) {
    int a = any(rng), b = any(rng);
    if (a == b) continue;
    auto kind = coin(rng) ? semrel::RelationKind::Rb : semrel::RelationKind::Term;
    r.source.relations.push_back({d.ids[a], kind, d.ids[b], ""});
  }

  std::uniform_int_distribution<int> ndefs(0, 2), nwords(1, 6), word(0, vocab_size - 1);
  for (int c = 0; c < n; ++c) {
    int k = ndefs(rng);
    for (int j = 0; j < k; ++j) {
      std::string text;
      int m = nwords(rng);
      for (int w = 0; w < m; ++w) text += (w ? " " : "") + r.vocab[word(rng)];
      r.source.definitions.push_back({d.ids[c], text, ""});
    }
  }
  for (const auto& w : r.vocab) {
    int senses = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int s = 0; s < senses; ++s) r.source.index.push_back({w, d.ids[any(rng)], ""});
  }
  return r;
}

/// Random counts for roughly three quarters of the concepts.
inline semrel::FreqTable random_freq(std::mt19937_64& rng, const Dag& d) {
  semrel::FreqTable f;
  std::uniform_int_distribution<int> count(0, 40);
  std::bernoulli_distribution present(0.75);
  for (int c = 0; c < d.size(); ++c) {
    if (!present(rng)) continue;
    int v = count(rng);
    f.counts[d.ids[c]] = static_cast<std::uint64_t>(v);
    f.total_n += static_cast<std::uint64_t>(v);
  }
  if (f.total_n == 0) {
    f.counts[d.ids.back()] = 1;
    f.total_n = 1;
  }
  return f;
}

}  // namespace testing_support
