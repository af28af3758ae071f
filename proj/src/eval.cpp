#include "semrel/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "semrel/error.hpp"
#include "text_util.hpp"

namespace semrel {

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share ranks i+1..j+1.
    double mean = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(Errc::InvalidArgument, "spearman: length mismatch (" + std::to_string(x.size()) + " vs " +
                                           std::to_string(y.size()) + ")");
  }
  if (x.size() < 4) {
    throw Error(Errc::TooFewPoints, "spearman: need at least 4 points, got " + std::to_string(x.size()));
  }
  auto rx = average_ranks(x);
  auto ry = average_ranks(y);
  const double n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    double dx = rx[i] - mx, dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(Errc::DegenerateRanking, "degenerate ranking: all values tied");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

FisherResult fisher_r_to_z(double r1, std::size_t n1, double r2, std::size_t n2) {
  if (!(std::abs(r1) < 1.0) || !(std::abs(r2) < 1.0)) {
    throw Error(Errc::InvalidArgument, "fisher_r_to_z: |r| must be < 1");
  }
  if (n1 <= 3 || n2 <= 3) throw Error(Errc::InvalidArgument, "fisher_r_to_z: sample sizes must exceed 3");
  const double se = std::sqrt(1.0 / static_cast<double>(n1 - 3) + 1.0 / static_cast<double>(n2 - 3));
  FisherResult out;
  out.z = (std::atanh(r1) - std::atanh(r2)) / se;
  out.p = std::erfc(std::abs(out.z) / std::sqrt(2.0));
  return out;
}

namespace {

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

RefStandard load_gold(const std::filesystem::path& path) {
  RefStandard gold;
  gold.name = path.stem().string();
  std::set<std::pair<std::string, std::string>> seen;
  bool first = true;
  detail::for_each_data_line(path, [&](std::size_t no, std::string_view line) {
    auto f = split_csv(line);
    std::optional<double> score;
    if (f.size() == 3) score = detail::parse_double(f[2]);
    bool header = first && f.size() == 3 && !score;
    first = false;
    if (header) return;
    std::string t1(detail::trim(f[0]));
    std::string t2(f.size() > 1 ? detail::trim(f[1]) : "");
    if (!score || t1.empty() || t2.empty()) {
      throw Error(Errc::Parse, "malformed line (" + detail::origin(path, no) + "): expected term1,term2,score");
    }
    std::pair<std::string, std::string> key = std::minmax(detail::to_lower(t1), detail::to_lower(t2));
    if (!seen.insert(key).second) {
      throw Error(Errc::Parse, "duplicate pair (" + t1 + ", " + t2 + ") at " + detail::origin(path, no));
    }
    gold.pairs.push_back({std::move(t1), std::move(t2), *score});
  });
  return gold;
}

namespace {

EvalResult score_all(const RefStandard& gold, const PairScorer& scorer) {
  EvalResult r;
  for (const auto& p : gold.pairs) {
    PairScore s = scorer(p.term1, p.term2);
    r.scores.push_back(s);
    if (s.status == PairStatus::Ok) {
      ++r.n_used;
    } else {
      ++r.n_skipped;
      ++r.skipped_by_status[s.status];
    }
  }
  return r;
}

void correlate(const RefStandard& gold, EvalResult& r) {
  if (r.n_used < 4) {
    throw Error(Errc::TooFewPoints, "fewer than 4 scoreable pairs (" + std::to_string(r.n_used) + " of " +
                                        std::to_string(gold.pairs.size()) + ")");
  }
  std::vector<double> human, system;
  for (std::size_t i = 0; i < gold.pairs.size(); ++i) {
    if (r.scores[i].status != PairStatus::Ok) continue;
    human.push_back(gold.pairs[i].human);
    system.push_back(r.scores[i].value);
  }
  r.rho = spearman(human, system);
}

}  // namespace

EvalResult evaluate(const RefStandard& gold, const PairScorer& scorer) {
  EvalResult r = score_all(gold, scorer);
  correlate(gold, r);
  return r;
}

PairScorer vector_scorer(const Taxonomy& t, const Tokenizer& tok, const SimMatrix& matrix) {
  return [&t, &tok, &matrix](const std::string& a, const std::string& b) {
    return guarded([&] { return relate_pair(t, tok, matrix, a, b); });
  };
}

std::vector<SweepRow> threshold_sweep(const BigramCounts& bigrams, const Taxonomy& t, const Tokenizer& tok,
                                      const Similarity& sim, std::span<const double> thresholds,
                                      const RefStandard& gold, unsigned workers) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > thresholds[i - 1])) {
      throw Error(Errc::InvalidArgument, "thresholds must be strictly increasing");
    }
  }
  ScoredBigrams scored = score_bigrams(bigrams, sim, workers);
  std::vector<SweepRow> rows;
  for (double threshold : thresholds) {
    SimMatrix matrix = select_threshold(scored, threshold);
    SweepRow row;
    row.threshold = threshold;
    row.entries = matrix.size();
    EvalResult r = score_all(gold, vector_scorer(t, tok, matrix));
    row.n_used = r.n_used;
    row.n_skipped = r.n_skipped;
    try {
      correlate(gold, r);
      row.rho = r.rho;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> threshold_sweep(const std::filesystem::path& corpus, const Tokenizer& tok, const Taxonomy& t,
                                      const IcTable* ic, Measure m, std::span<const double> thresholds,
                                      const RefStandard& gold, const CorpusOptions& options) {
  Similarity sim(t, ic, m);
  return threshold_sweep(extract_bigrams(corpus, tok, options), t, tok, sim, thresholds, gold, options.workers);
}

}  // namespace semrel
