#include "semrel/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iterator>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

#include <boost/crc.hpp>

#include "semrel/error.hpp"
#include "text_util.hpp"

namespace semrel {

namespace {

std::string crc_hex(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
  return buf;
}

unsigned clamp_workers(unsigned workers, std::size_t items) {
  if (workers == 0) workers = 1;
  if (items < workers) workers = static_cast<unsigned>(std::max<std::size_t>(items, 1));
  return workers;
}

/// Runs fn(chunk, begin, end) over `workers` contiguous chunks of
/// [0, items) and rethrows the first failure in chunk order.
template <typename Fn>
void parallel_chunks(std::size_t items, unsigned workers, Fn fn) {
  workers = clamp_workers(workers, items);
  if (workers == 1) {
    fn(0u, std::size_t{0}, items);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (items + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = std::min(items, w * chunk);
    std::size_t end = std::min(items, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_threshold(const ScoredBigrams& scored, double threshold) {
  if (!std::isfinite(threshold) || threshold < 0.0) {
    throw Error(Errc::InvalidArgument, "threshold must be a finite value >= 0");
  }
  if (is_bounded(scored.measure) && threshold > 1.0) {
    throw Error(Errc::InvalidArgument, "threshold for " + std::string(measure_name(scored.measure)) +
                                           " must lie in [0, 1]");
  }
}

}  // namespace

SimMatrix::SimMatrix(MatrixMeta meta, std::vector<MatrixEntry> entries) : meta_(std::move(meta)) {
  for (auto& e : entries) {
    if (e.a == e.b) throw Error(Errc::InvalidArgument, "self pair for word '" + e.a + "'");
    if (e.b < e.a) std::swap(e.a, e.b);
  }
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& x, const MatrixEntry& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].a == entries[i - 1].a && entries[i].b == entries[i - 1].b) {
      throw Error(Errc::InvalidArgument, "repeated pair (" + entries[i].a + ", " + entries[i].b + ")");
    }
  }
  entries_ = std::move(entries);

  for (const auto& e : entries_) {
    vocab_.push_back(e.a);
    vocab_.push_back(e.b);
  }
  std::sort(vocab_.begin(), vocab_.end());
  vocab_.erase(std::unique(vocab_.begin(), vocab_.end()), vocab_.end());
  auto index_of = [this](const std::string& w) {
    return static_cast<std::uint32_t>(std::lower_bound(vocab_.begin(), vocab_.end(), w) - vocab_.begin());
  };
  rows_.assign(vocab_.size(), {});
  for (const auto& e : entries_) {
    std::uint32_t ia = index_of(e.a), ib = index_of(e.b);
    rows_[ia].emplace_back(ib, e.score);
    rows_[ib].emplace_back(ia, e.score);
  }
}

double SimMatrix::total_mass() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.score;
  return sum;
}

FirstOrderVector SimMatrix::row(std::string_view w) const {
  FirstOrderVector v;
  auto it = std::lower_bound(vocab_.begin(), vocab_.end(), w);
  if (it == vocab_.end() || *it != w) return v;
  for (const auto& [other, score] : rows_[static_cast<std::size_t>(it - vocab_.begin())]) {
    v.weights.emplace(vocab_[other], score);
  }
  return v;
}

SimMatrix SimMatrix::with_notes(std::vector<std::string> notes) const {
  SimMatrix copy = *this;
  copy.meta_.notes = std::move(notes);
  return copy;
}

BigramCounts extract_bigrams(const std::filesystem::path& corpus, const Tokenizer& tok,
                             const CorpusOptions& options) {
  if (options.window == 0) throw Error(Errc::InvalidArgument, "co-occurrence window must be >= 1");
  auto in = detail::open_input(corpus);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "cannot read " + corpus.string());

  BigramCounts out;
  out.fingerprint = crc_hex(text);

  struct Line {
    std::string_view text;
    std::size_t offset;
  };
  std::vector<Line> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    lines.push_back({std::string_view(text).substr(pos, end - pos), pos});
    pos = end + 1;
  }
  out.lines = lines.size();

  // Validation first, sequentially, so warnings come out in file order.
  std::vector<char> skip(lines.size(), 0);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t bad = find_invalid_utf8(lines[i].text);
    if (bad == std::string_view::npos) continue;
    std::string msg = "invalid UTF-8 at byte offset " + std::to_string(lines[i].offset + bad) + " (" +
                      detail::origin(corpus, i + 1) + ")";
    if (options.strict_utf8) throw Error(Errc::Parse, msg);
    out.warnings.push_back(msg + ", line skipped");
    skip[i] = 1;
    ++out.skipped_lines;
  }

  const unsigned workers = clamp_workers(options.workers, lines.size());
  std::vector<std::unordered_map<std::string, std::uint64_t>> partial(workers);
  parallel_chunks(lines.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& counts = partial[w];
    for (std::size_t i = begin; i < end; ++i) {
      if (skip[i]) continue;
      auto toks = tok.tokenize(lines[i].text);
      for (std::size_t a = 0; a < toks.size(); ++a) {
        for (std::size_t b = a + 1; b < toks.size() && b - a <= options.window; ++b) {
          std::string key;
          key.reserve(toks[a].size() + toks[b].size() + 1);
          key.append(toks[a]).push_back('\t');
          key.append(toks[b]);
          ++counts[key];
        }
      }
    }
  });
  for (const auto& counts : partial) {
    for (const auto& [key, n] : counts) {
      auto tab = key.find('\t');
      out.counts[{key.substr(0, tab), key.substr(tab + 1)}] += n;
      out.total += n;
    }
  }
  return out;
}

SimMatrix count_matrix(const BigramCounts& bigrams) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> merged;
  for (const auto& [pair, n] : bigrams.counts) {
    if (pair.first == pair.second) continue;
    auto key = pair.first < pair.second ? pair : std::make_pair(pair.second, pair.first);
    merged[key] += n;
  }
  std::vector<MatrixEntry> entries;
  entries.reserve(merged.size());
  for (const auto& [pair, n] : merged) entries.push_back({pair.first, pair.second, static_cast<double>(n)});
  MatrixMeta meta;
  meta.mode = MatrixMode::Count;
  meta.corpus_fingerprint = bigrams.fingerprint;
  return SimMatrix(std::move(meta), std::move(entries));
}

SimMatrix build_count_matrix(const std::filesystem::path& corpus, const Tokenizer& tok,
                             const CorpusOptions& options) {
  return count_matrix(extract_bigrams(corpus, tok, options));
}

ScoredBigrams score_bigrams(const BigramCounts& bigrams, const Similarity& sim, unsigned workers) {
  const Taxonomy& t = sim.taxonomy();
  std::vector<std::pair<std::string, std::string>> distinct;
  for (const auto& [pair, n] : bigrams.counts) {
    if (pair.first == pair.second) continue;
    distinct.push_back(pair.first < pair.second ? pair : std::make_pair(pair.second, pair.first));
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  ScoredBigrams out;
  out.measure = sim.measure();
  out.fingerprint = bigrams.fingerprint;
  std::vector<std::pair<std::string, std::string>> mappable;
  for (auto& p : distinct) {
    if (t.senses(p.first).empty() || t.senses(p.second).empty()) {
      ++out.unmappable;
    } else {
      mappable.push_back(std::move(p));
    }
  }

  std::vector<double> scores(mappable.size(), 0.0);
  parallel_chunks(mappable.size(), workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      scores[i] = sim.best_sense(t.senses(mappable[i].first), t.senses(mappable[i].second));
    }
  });
  out.pairs.reserve(mappable.size());
  for (std::size_t i = 0; i < mappable.size(); ++i) {
    out.pairs.push_back({std::move(mappable[i].first), std::move(mappable[i].second), scores[i]});
  }
  return out;
}

SimMatrix select_threshold(const ScoredBigrams& scored, double threshold) {
  check_threshold(scored, threshold);
  std::vector<MatrixEntry> kept;
  std::copy_if(scored.pairs.begin(), scored.pairs.end(), std::back_inserter(kept),
               [threshold](const MatrixEntry& e) { return e.score > threshold; });
  MatrixMeta meta;
  meta.mode = MatrixMode::Measure;
  meta.measure = scored.measure;
  meta.threshold = threshold;
  meta.corpus_fingerprint = scored.fingerprint;
  meta.unmappable_bigrams = scored.unmappable;
  return SimMatrix(std::move(meta), std::move(kept));
}

SimMatrix build_sim_matrix(const std::filesystem::path& corpus, const Tokenizer& tok, const Taxonomy& t,
                           const IcTable* ic, Measure m, double threshold, const CorpusOptions& options,
                           MeasureOptions measure_options) {
  Similarity sim(t, ic, m, measure_options);
  ScoredBigrams probe;
  probe.measure = m;
  check_threshold(probe, threshold);  // fail before reading the corpus
  auto bigrams = extract_bigrams(corpus, tok, options);
  return select_threshold(score_bigrams(bigrams, sim, options.workers), threshold);
}

// ---------------------------------------------------------------------------
// Persistence

void write_matrix(std::ostream& out, const SimMatrix& m) {
  const MatrixMeta& meta = m.meta();
  out << "#semrel-matrix v1 mode=" << (meta.mode == MatrixMode::Measure ? "measure" : "count")
      << " measure=" << (meta.measure ? std::string(measure_name(*meta.measure)) : "-")
      << " threshold=" << detail::format_double(meta.threshold) << " vocab=" << m.vocab().size()
      << " entries=" << m.size() << '\n';
  out << "#meta corpus=" << (meta.corpus_fingerprint.empty() ? "-" : meta.corpus_fingerprint)
      << " unmappable=" << meta.unmappable_bigrams << '\n';
  for (const auto& note : meta.notes) out << '#' << note << '\n';
  std::string body;
  for (const auto& e : m.entries()) {
    body += e.a;
    body += '\t';
    body += e.b;
    body += '\t';
    body += detail::format_double(e.score);
    body += '\n';
  }
  out << body << "#checksum=" << crc_hex(body) << '\n';
}

SimMatrix read_matrix(std::istream& in) {
  auto malformed = [](std::size_t line, const std::string& why) {
    return Error(Errc::MalformedRecord, "malformed record at line " + std::to_string(line) + ": " + why);
  };

  std::string line;
  if (!std::getline(in, line)) throw malformed(1, "empty file");
  std::istringstream header(line);
  std::string magic, version;
  header >> magic >> version;
  if (magic != "#semrel-matrix") throw malformed(1, "not a matrix file");
  if (version != "v1") throw Error(Errc::VersionMismatch, "version mismatch: unsupported format '" + version + "'");

  MatrixMeta meta;
  std::optional<std::uint64_t> vocab_n, entries_n;
  bool have_mode = false, have_threshold = false;
  std::string kv;
  while (header >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw malformed(1, "bad header field '" + kv + "'");
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (key == "mode") {
      if (value == "measure") {
        meta.mode = MatrixMode::Measure;
      } else if (value == "count") {
        meta.mode = MatrixMode::Count;
      } else {
        throw Error(Errc::VersionMismatch, "version mismatch: unknown mode '" + value + "'");
      }
      have_mode = true;
    } else if (key == "measure") {
      if (value != "-") {
        meta.measure = parse_measure(value);
        if (!meta.measure) throw Error(Errc::VersionMismatch, "version mismatch: unknown measure '" + value + "'");
      }
    } else if (key == "threshold") {
      auto v = detail::parse_double(value);
      if (!v) throw malformed(1, "bad threshold");
      meta.threshold = *v;
      have_threshold = true;
    } else if (key == "vocab") {
      vocab_n = detail::parse_uint(value);
    } else if (key == "entries") {
      entries_n = detail::parse_uint(value);
    } else {
      throw Error(Errc::VersionMismatch, "version mismatch: unknown header field '" + key + "'");
    }
  }
  if (!have_mode || !have_threshold || !vocab_n || !entries_n) throw malformed(1, "incomplete header");
  if ((meta.mode == MatrixMode::Measure) != meta.measure.has_value()) {
    throw malformed(1, "mode and measure disagree");
  }

  std::vector<MatrixEntry> entries;
  std::string body;
  std::optional<std::string> checksum;
  std::size_t no = 1;
  while (std::getline(in, line)) {
    ++no;
    if (checksum) throw malformed(no, "content after checksum trailer");
    if (line.rfind("#checksum=", 0) == 0) {
      checksum = line.substr(10);
      continue;
    }
    if (line.rfind("#meta ", 0) == 0) {
      if (!entries.empty()) throw malformed(no, "header line inside body");
      std::istringstream ms(line.substr(6));
      while (ms >> kv) {
        auto eq = kv.find('=');
        std::string key = kv.substr(0, eq), value = eq == std::string::npos ? "" : kv.substr(eq + 1);
        if (key == "corpus") {
          meta.corpus_fingerprint = value == "-" ? "" : value;
        } else if (key == "unmappable") {
          auto v = detail::parse_uint(value);
          if (!v) throw malformed(no, "bad unmappable count");
          meta.unmappable_bigrams = *v;
        } else {
          throw malformed(no, "unknown meta field '" + key + "'");
        }
      }
      continue;
    }
    if (!line.empty() && line.front() == '#') {
      if (!entries.empty()) throw malformed(no, "header line inside body");
      meta.notes.push_back(line.substr(1));
      continue;
    }
    auto f = detail::split(line, '\t');
    std::optional<double> score;
    if (f.size() == 3) score = detail::parse_double(f[2]);
    if (!score || f[0].empty() || f[1].empty()) throw malformed(no, "expected word_a<TAB>word_b<TAB>score");
    MatrixEntry e{std::string(f[0]), std::string(f[1]), *score};
    if (!(e.a < e.b)) throw malformed(no, "pair not in canonical order");
    if (!entries.empty() && !(std::tie(entries.back().a, entries.back().b) < std::tie(e.a, e.b))) {
      throw malformed(no, "body not sorted");
    }
    body += line;
    body += '\n';
    entries.push_back(std::move(e));
  }
  if (!checksum) throw malformed(no, "missing checksum trailer (truncated file?)");
  if (entries.size() != *entries_n) {
    throw malformed(no, "header announces " + std::to_string(*entries_n) + " entries, found " +
                            std::to_string(entries.size()));
  }
  if (*checksum != crc_hex(body)) throw Error(Errc::ChecksumMismatch, "checksum mismatch");
  SimMatrix m(std::move(meta), std::move(entries));
  if (m.vocab().size() != *vocab_n) throw malformed(1, "vocab count does not match the body");
  return m;
}

void save_matrix(const SimMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  write_matrix(out, m);
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

SimMatrix load_matrix(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return read_matrix(in);
}

}  // namespace semrel
