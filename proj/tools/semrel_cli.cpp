// semrel: command-line front end.
//
//   semrel ic      --taxonomy DIR (--freq FILE | --intrinsic) [-o ic.tsv]
//   semrel sim     --taxonomy DIR --measure M [--ic FILE | --freq FILE | --intrinsic] A B
//   semrel matrix  --corpus FILE (--count | --taxonomy DIR --measure M ...) [--threshold T] -o FILE
//   semrel relate  --taxonomy DIR --pairs FILE [--method vector|lesk|o1|o2] [--matrix FILE | --corpus FILE ...]
//   semrel eval    --gold FILE (--scores FILE | live relate options)
//   semrel sweep   --taxonomy DIR --corpus FILE --measure M --thresholds T1,T2,... --gold FILE [--gold FILE ...]
//
// Exit status: 0 success, 1 degenerate evaluation, 2 usage or input error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semrel/error.hpp"
#include "semrel/eval.hpp"
#include "semrel/ic.hpp"
#include "semrel/matrix.hpp"
#include "semrel/measures.hpp"
#include "semrel/relatedness.hpp"
#include "semrel/taxonomy.hpp"
#include "semrel/tokenizer.hpp"

namespace fs = std::filesystem;
using namespace semrel;

namespace {

constexpr int kExitDegenerate = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  // taxonomy
  std::string taxonomy_dir;
  std::string concepts, relations, definitions, index;
  std::string edge_set = "par_chd";
  std::string depth_mode = "max";
  // tokenizer
  std::string stoplist;
  bool no_lowercase = false;
  // ic
  std::string ic_file;
  std::string freq_file;
  bool intrinsic = false;
  bool no_smoothing = false;
  bool strict_freq = false;
  // measures
  std::string measure;
  double zhong_k = 2.0;
  double jcn_epsilon = 1e-4;
  // corpus / matrix
  std::string corpus;
  std::size_t window = 1;
  bool strict_utf8 = false;
  double threshold = 0.0;
  std::string matrix_file;
  bool count = false;
  unsigned workers = 1;
  // relate / eval / sweep
  std::string method = "vector";
  std::string pairs;
  std::string scores;
  std::vector<std::string> gold;
  std::vector<double> thresholds;
  std::string output;
  std::vector<std::string> terms;
};

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path pick(const std::string& explicit_path, const std::string& dir, const char* name) {
  if (!explicit_path.empty()) return explicit_path;
  if (!dir.empty()) return fs::path(dir) / name;
  return {};
}

bool have_taxonomy(const RunConfig& c) { return !c.taxonomy_dir.empty() || !c.concepts.empty(); }

Taxonomy load_tax(const RunConfig& c) {
  if (!have_taxonomy(c)) throw Error(Errc::InvalidArgument, "a taxonomy is required (--taxonomy DIR or --concepts ...)");
  TaxonomyFiles files;
  files.concepts = pick(c.concepts, c.taxonomy_dir, "concepts.tsv");
  files.relations = pick(c.relations, c.taxonomy_dir, "relations.tsv");
  files.definitions = pick(c.definitions, c.taxonomy_dir, "definitions.tsv");
  files.index = pick(c.index, c.taxonomy_dir, "index.tsv");
  // Optional files may be absent from a taxonomy directory.
  if (c.definitions.empty() && !files.definitions.empty() && !fs::exists(files.definitions)) files.definitions.clear();
  if (c.index.empty() && !files.index.empty() && !fs::exists(files.index)) files.index.clear();
  HierarchyConfig hc;
  if (c.edge_set == "par_chd") hc.edge_set = EdgeSet::ParChd;
  else if (c.edge_set == "rb_rn") hc.edge_set = EdgeSet::RbRn;
  else if (c.edge_set == "both") hc.edge_set = EdgeSet::Both;
  else throw Error(Errc::InvalidArgument, "unknown edge set '" + c.edge_set + "' (par_chd, rb_rn, both)");
  if (c.depth_mode == "min") hc.depth_mode = DepthMode::Min;
  else if (c.depth_mode == "max") hc.depth_mode = DepthMode::Max;
  else throw Error(Errc::InvalidArgument, "unknown depth mode '" + c.depth_mode + "' (min, max)");
  return load_taxonomy(files, hc);
}

Tokenizer make_tokenizer(const RunConfig& c) {
  TokenizerOptions o;
  o.lowercase = !c.no_lowercase;
  if (!c.stoplist.empty()) {
    Tokenizer plain;
    for (auto& w : plain.tokenize(read_text(c.stoplist))) o.stoplist.insert(std::move(w));
  }
  return Tokenizer(std::move(o));
}

Measure require_measure(const RunConfig& c) {
  if (c.measure.empty()) throw Error(Errc::InvalidArgument, "--measure is required (one of: " + measure_names() + ")");
  auto m = parse_measure(c.measure);
  if (!m) throw Error(Errc::InvalidArgument, "unknown measure '" + c.measure + "'; valid: " + measure_names());
  return *m;
}

std::optional<IcTable> make_ic(const RunConfig& c, const Taxonomy& t, bool required) {
  if (!c.ic_file.empty()) return load_ic(c.ic_file, t);
  if (!c.freq_file.empty()) {
    CorpusIcOptions o;
    o.smoothing = !c.no_smoothing;
    o.strict = c.strict_freq;
    IcTable ic = corpus_ic(t, load_freq_table(c.freq_file), o);
    for (const auto& id : ic.unknown_concepts()) std::cerr << "warning: unknown concept in frequency table: " << id << "\n";
    return ic;
  }
  if (c.intrinsic) return intrinsic_ic(t);
  if (required) throw Error(Errc::MissingIc, "this measure needs IC: give --ic, --freq or --intrinsic");
  return std::nullopt;
}

MeasureOptions measure_options(const RunConfig& c) {
  MeasureOptions o;
  o.zhong_k = c.zhong_k;
  o.jcn_epsilon = c.jcn_epsilon;
  return o;
}

CorpusOptions corpus_options(const RunConfig& c) {
  CorpusOptions o;
  o.window = c.window;
  o.strict_utf8 = c.strict_utf8;
  o.workers = c.workers == 0 ? 1 : c.workers;
  return o;
}

std::string fmt(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

/// Resolved settings as `key=value` lines. Settings that cannot change the
/// result (worker count, output path, the config file itself) are left out
/// so outputs stay byte-identical across them.
std::vector<std::string> config_lines(const CLI::App& app) {
  std::vector<std::string> out;
  std::istringstream in(app.config_to_str(false, false));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto key = line.substr(0, line.find('='));
    auto dot = key.rfind('.');
    auto leaf = dot == std::string::npos ? key : key.substr(dot + 1);
    if (leaf == "workers" || leaf == "output" || leaf == "config") continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> prefixed(const std::vector<std::string>& lines, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& l : lines) out.push_back(prefix + l);
  return out;
}

/// Output stream for -o, stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(Errc::Io, "cannot write " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::pair<std::string, std::string>> read_pairs(const fs::path& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(Errc::Parse, "malformed line (" + path.string() + ":" + std::to_string(no) + "): expected term1,term2");
    }
    std::string a = line.substr(0, comma);
    std::string b = line.substr(comma + 1);
    if (auto c2 = b.find(','); c2 != std::string::npos) b.resize(c2);  // tolerate a gold file
    if (no == 1 && a == "term1") continue;
    out.emplace_back(a, b);
  }
  return out;
}

/// The matrix a relate/eval run should use: a saved file, or one built in
/// memory from the corpus.
std::optional<SimMatrix> matrix_for(const RunConfig& c, RelateMethod method, const Taxonomy& t,
                                    const Tokenizer& tok) {
  if (method != RelateMethod::Vector && method != RelateMethod::O2) return std::nullopt;
  if (!c.matrix_file.empty()) return load_matrix(c.matrix_file);
  if (c.corpus.empty()) {
    throw Error(Errc::InvalidArgument, std::string(method_name(method)) + " needs --matrix or --corpus");
  }
  if (method == RelateMethod::O2) return build_count_matrix(c.corpus, tok, corpus_options(c));
  Measure m = require_measure(c);
  auto ic = make_ic(c, t, requires_ic(m));
  return build_sim_matrix(c.corpus, tok, t, ic ? &*ic : nullptr, m, c.threshold, corpus_options(c),
                          measure_options(c));
}

RelateMethod require_method(const RunConfig& c) {
  auto m = parse_method(c.method);
  if (!m) throw Error(Errc::InvalidArgument, "unknown method '" + c.method + "'; valid: vector, lesk, o1, o2");
  return *m;
}

int cmd_ic(const RunConfig& c, const CLI::App& app) {
  Taxonomy t = load_tax(c);
  if (c.freq_file.empty() && !c.intrinsic) throw Error(Errc::InvalidArgument, "ic needs --freq FILE or --intrinsic");
  if (!c.freq_file.empty() && c.intrinsic) throw Error(Errc::InvalidArgument, "--freq and --intrinsic are exclusive");
  RunConfig cc = c;
  cc.ic_file.clear();
  auto ic = make_ic(cc, t, true);
  Output out(c.output);
  write_ic(out.get(), t, *ic, prefixed(config_lines(app), "config "));
  return 0;
}

int cmd_sim(const RunConfig& c) {
  Measure m = require_measure(c);
  Taxonomy t = load_tax(c);
  auto ic = make_ic(c, t, requires_ic(m));
  Similarity sim(t, ic ? &*ic : nullptr, m, measure_options(c));
  const std::string& a = c.terms.at(0);
  const std::string& b = c.terms.at(1);
  // Concept ids take precedence over surface terms.
  auto na = t.find(a);
  auto nb = t.find(b);
  double v = (na && nb) ? sim(*na, *nb).value : sim.best_sense(a, b).value;
  std::cout << fmt(v) << "\n";
  return 0;
}

int cmd_matrix(const RunConfig& c, const CLI::App& app) {
  if (c.corpus.empty()) throw Error(Errc::InvalidArgument, "matrix needs --corpus");
  Tokenizer tok = make_tokenizer(c);
  SimMatrix m;
  if (c.count) {
    m = build_count_matrix(c.corpus, tok, corpus_options(c));
  } else {
    Measure measure = require_measure(c);
    Taxonomy t = load_tax(c);
    auto ic = make_ic(c, t, requires_ic(measure));
    m = build_sim_matrix(c.corpus, tok, t, ic ? &*ic : nullptr, measure, c.threshold, corpus_options(c),
                         measure_options(c));
  }
  m = m.with_notes(prefixed(config_lines(app), "config "));
  if (c.output.empty()) {
    write_matrix(std::cout, m);
  } else {
    save_matrix(m, c.output);
  }
  std::cerr << "matrix: " << m.size() << " entries, " << m.vocab().size() << " words\n";
  return 0;
}

int cmd_relate(const RunConfig& c, const CLI::App& app) {
  if (c.pairs.empty()) throw Error(Errc::InvalidArgument, "relate needs --pairs FILE");
  RelateMethod method = require_method(c);
  Taxonomy t = load_tax(c);
  Tokenizer tok = make_tokenizer(c);
  auto matrix = matrix_for(c, method, t, tok);
  auto pairs = read_pairs(c.pairs);
  Output out(c.output);
  for (const auto& l : config_lines(app)) out.get() << "#config " << l << "\n";
  out.get() << "term1,term2,score,status\n";
  for (const auto& [a, b] : pairs) {
    PairScore s = guarded([&] { return relate_terms(method, t, tok, matrix ? &*matrix : nullptr, a, b); });
    out.get() << csv_field(a) << ',' << csv_field(b) << ','
              << (s.status == PairStatus::Ok ? fmt(s.value) : std::string()) << ',' << status_name(s.status) << "\n";
  }
  return 0;
}

/// Scores from a relate CSV, keyed by unordered lowercase pair.
PairScorer file_scorer(const fs::path& path) {
  auto table = std::make_shared<std::map<std::pair<std::string, std::string>, PairScore>>();
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    if (f.size() >= 3 && f[0] == "term1") continue;
    if (f.size() < 3) {
      throw Error(Errc::Parse, "malformed line (" + path.string() + ":" + std::to_string(no) + ")");
    }
    PairScore s;
    std::string status = f.size() > 3 ? f[3] : "ok";
    if (status == "ok") {
      char* end = nullptr;
      s.value = std::strtod(f[2].c_str(), &end);
      if (f[2].empty() || *end != '\0') {
        throw Error(Errc::Parse, "bad score (" + path.string() + ":" + std::to_string(no) + ")");
      }
    } else if (status == "unmappable") {
      s.status = PairStatus::Unmappable;
    } else if (status == "empty_gloss") {
      s.status = PairStatus::EmptyGloss;
    } else if (status == "no_signal") {
      s.status = PairStatus::NoSignal;
    } else {
      throw Error(Errc::Parse, "unknown status '" + status + "' (" + path.string() + ":" + std::to_string(no) + ")");
    }
    auto lower = [](std::string x) {
      for (auto& ch : x) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      return x;
    };
    (*table)[std::minmax(lower(f[0]), lower(f[1]))] = s;
  }
  return [table](const std::string& a, const std::string& b) {
    auto lower = [](std::string x) {
      for (auto& ch : x) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      return x;
    };
    auto it = table->find(std::minmax(lower(a), lower(b)));
    if (it == table->end()) return PairScore{PairStatus::Unmappable, 0.0};
    return it->second;
  };
}

void print_eval(std::ostream& out, const RefStandard& gold, const EvalResult& r) {
  out << "reference\t" << gold.name << "\n";
  out << "rho\t" << fmt(r.rho) << "\n";
  out << "n_used\t" << r.n_used << "\n";
  out << "n_skipped\t" << r.n_skipped << "\n";
  for (const auto& [status, n] : r.skipped_by_status) out << "skipped_" << status_name(status) << "\t" << n << "\n";
}

int cmd_eval(const RunConfig& c, const CLI::App& app) {
  if (c.gold.size() != 1) throw Error(Errc::InvalidArgument, "eval needs exactly one --gold FILE");
  RefStandard gold = load_gold(c.gold.front());
  PairScorer scorer;
  std::optional<Taxonomy> t;
  std::optional<Tokenizer> tok;
  std::optional<SimMatrix> matrix;
  if (!c.scores.empty()) {
    scorer = file_scorer(c.scores);
  } else {
    RelateMethod method = require_method(c);
    t = load_tax(c);
    tok = make_tokenizer(c);
    matrix = matrix_for(c, method, *t, *tok);
    scorer = [&, method](const std::string& a, const std::string& b) {
      return guarded([&] { return relate_terms(method, *t, *tok, matrix ? &*matrix : nullptr, a, b); });
    };
  }
  EvalResult r = evaluate(gold, scorer);
  Output out(c.output);
  for (const auto& l : config_lines(app)) out.get() << "#config " << l << "\n";
  print_eval(out.get(), gold, r);
  return 0;
}

int cmd_sweep(const RunConfig& c, const CLI::App& app) {
  if (c.corpus.empty()) throw Error(Errc::InvalidArgument, "sweep needs --corpus");
  if (c.gold.empty()) throw Error(Errc::InvalidArgument, "sweep needs at least one --gold FILE");
  if (c.thresholds.empty()) throw Error(Errc::InvalidArgument, "sweep needs --thresholds T1,T2,...");
  Measure m = require_measure(c);
  Taxonomy t = load_tax(c);
  Tokenizer tok = make_tokenizer(c);
  auto ic = make_ic(c, t, requires_ic(m));
  std::vector<RefStandard> golds;
  for (const auto& g : c.gold) golds.push_back(load_gold(g));

  CorpusOptions co = corpus_options(c);
  BigramCounts bigrams = extract_bigrams(c.corpus, tok, co);
  for (const auto& w : bigrams.warnings) std::cerr << "warning: " << w << "\n";
  Similarity sim(t, ic ? &*ic : nullptr, m, measure_options(c));

  std::vector<std::vector<SweepRow>> results;
  for (const auto& g : golds) results.push_back(threshold_sweep(bigrams, t, tok, sim, c.thresholds, g, co.workers));

  Output out(c.output);
  std::ostream& os = out.get();
  for (const auto& l : config_lines(app)) os << "#config " << l << "\n";
  for (std::size_t gi = 0; gi < golds.size(); ++gi) {
    os << "#reference " << golds[gi].name << "\n";
    os << "threshold\tentries\tn_used\tn_skipped\trho\n";
    for (const auto& row : results[gi]) {
      os << fmt(row.threshold) << '\t' << row.entries << '\t' << row.n_used << '\t' << row.n_skipped << '\t'
         << (row.rho ? fmt(*row.rho) : "NA") << "\n";
    }
  }

  // Summary: one column per reference standard.
  os << "\n# vector-" << measure_name(m) << " threshold sweep\n";
  os << "#   T        # bigrams";
  for (const auto& g : golds) os << "  " << g.name;
  os << "\n";
  for (std::size_t i = 0; i < c.thresholds.size(); ++i) {
    char head[64];
    std::snprintf(head, sizeof head, "#   %-8s %-10zu", fmt(c.thresholds[i]).c_str(), results[0][i].entries);
    os << head;
    for (std::size_t gi = 0; gi < golds.size(); ++gi) {
      const auto& row = results[gi][i];
      char cell[32];
      if (row.rho) {
        std::snprintf(cell, sizeof cell, "%.2f", *row.rho);
      } else {
        std::snprintf(cell, sizeof cell, "NA");
      }
      os << "  " << cell;
    }
    os << "\n";
  }
  for (std::size_t gi = 0; gi < golds.size(); ++gi) {
    for (const auto& row : results[gi]) {
      if (!row.error.empty()) {
        std::cerr << golds[gi].name << " T=" << fmt(row.threshold) << ": " << row.error << "\n";
      }
    }
  }
  return 0;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case Errc::TooFewPoints:
    case Errc::DegenerateRanking: return kExitDegenerate;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taxonomy similarity and second-order vector relatedness"};
  app.set_config("--config", "", "key=value settings file; command-line flags win");
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig c;

  app.add_option("--taxonomy", c.taxonomy_dir, "Directory with concepts.tsv, relations.tsv, definitions.tsv, index.tsv");
  app.add_option("--concepts", c.concepts, "concepts.tsv (overrides --taxonomy)");
  app.add_option("--relations", c.relations, "relations.tsv (overrides --taxonomy)");
  app.add_option("--definitions", c.definitions, "definitions.tsv (overrides --taxonomy)");
  app.add_option("--index", c.index, "index.tsv (overrides --taxonomy)");
  app.add_option("--edge-set", c.edge_set, "Hierarchy edges: par_chd, rb_rn or both");
  app.add_option("--depth-mode", c.depth_mode, "Depth over multiple parents: min or max");
  app.add_option("--stoplist", c.stoplist, "Whitespace-separated stop words removed by the tokenizer");
  app.add_flag("--no-lowercase", c.no_lowercase, "Keep token case");
  app.add_option("--ic", c.ic_file, "Precomputed ic.tsv");
  app.add_option("--freq", c.freq_file, "freq.tsv for corpus IC");
  app.add_flag("--intrinsic", c.intrinsic, "Use intrinsic IC");
  app.add_flag("--no-smoothing", c.no_smoothing, "Disable add-one smoothing of corpus IC");
  app.add_flag("--strict-freq", c.strict_freq, "Reject unknown concepts in the frequency table");
  app.add_option("--zhong-k", c.zhong_k, "zhong base k");
  app.add_option("--jcn-epsilon", c.jcn_epsilon, "jcn zero-distance guard");
  app.add_option("--window", c.window, "Co-occurrence window within a line")->check(CLI::PositiveNumber);
  app.add_flag("--strict-utf8", c.strict_utf8, "Fail on invalid UTF-8 instead of skipping the line");
  app.add_option("--workers", c.workers, "Worker threads for matrix building")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", c.output, "Output file (default stdout)");

  auto* ic = app.add_subcommand("ic", "Compute information content");
  auto* sim = app.add_subcommand("sim", "Similarity of two concepts or terms");
  sim->add_option("--measure", c.measure, "One of: " + measure_names());
  sim->add_option("terms", c.terms, "Concept ids or surface terms")->required()->expected(2);
  auto* matrix = app.add_subcommand("matrix", "Build a similarity or co-occurrence matrix");
  matrix->add_option("--corpus", c.corpus, "One document per line");
  matrix->add_option("--measure", c.measure, "One of: " + measure_names());
  matrix->add_option("--threshold", c.threshold, "Keep pairs scoring strictly above this");
  matrix->add_flag("--count", c.count, "Raw co-occurrence counts, no taxonomy");
  auto* relate = app.add_subcommand("relate", "Score term pairs");
  auto* eval = app.add_subcommand("eval", "Spearman correlation against a reference standard");
  auto* sweep = app.add_subcommand("sweep", "Evaluate vector relatedness over a range of thresholds");
  for (auto* sub : {relate, eval}) {
    sub->add_option("--method", c.method, "vector, lesk, o1 or o2");
    sub->add_option("--matrix", c.matrix_file, "Saved matrix (vector, o2)");
    sub->add_option("--corpus", c.corpus, "Build the matrix from this corpus instead");
    sub->add_option("--measure", c.measure, "Measure for an in-memory matrix");
    sub->add_option("--threshold", c.threshold, "Threshold for an in-memory matrix");
  }
  relate->add_option("--pairs", c.pairs, "CSV term1,term2");
  eval->add_option("--gold", c.gold, "CSV term1,term2,score");
  eval->add_option("--scores", c.scores, "CSV term1,term2,score[,status] from relate");
  sweep->add_option("--corpus", c.corpus, "One document per line");
  sweep->add_option("--measure", c.measure, "One of: " + measure_names());
  sweep->add_option("--thresholds", c.thresholds, "Strictly increasing, comma-separated")->delimiter(',');
  sweep->add_option("--gold", c.gold, "Reference standard CSV; repeat for several");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (ic->parsed()) return cmd_ic(c, app);
    if (sim->parsed()) return cmd_sim(c);
    if (matrix->parsed()) return cmd_matrix(c, app);
    if (relate->parsed()) return cmd_relate(c, app);
    if (eval->parsed()) return cmd_eval(c, app);
    if (sweep->parsed()) return cmd_sweep(c, app);
  } catch (const Error& e) {
    std::cerr << "semrel: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "semrel: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
