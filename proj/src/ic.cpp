#include "semrel/ic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "semrel/error.hpp"
#include "text_util.hpp"

namespace semrel {

FreqTable load_freq_table(const std::filesystem::path& path) {
  FreqTable f;
  detail::for_each_data_line(path, [&](std::size_t no, std::string_view line) {
    auto fields = detail::split(line, '\t');
    std::optional<std::uint64_t> count;
    if (fields.size() == 2) count = detail::parse_uint(fields[1]);
    if (!count || detail::trim(fields[0]).empty()) {
      throw Error(Errc::Parse, "malformed line (" + detail::origin(path, no) + "): expected concept_id<TAB>count");
    }
    f.counts[std::string(detail::trim(fields[0]))] += *count;
    f.total_n += *count;
  });
  return f;
}

double IcTable::max_value() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

IcTable corpus_ic(const Taxonomy& t, const FreqTable& freq, CorpusIcOptions options) {
  const std::size_t n = t.size();
  const std::uint64_t bump = options.smoothing ? 1 : 0;
  std::vector<std::uint64_t> own(n, bump);
  std::vector<std::string> unknown;
  for (const auto& [id, count] : freq.counts) {
    auto node = t.find(id);
    if (!node) {
      if (options.strict) throw Error(Errc::UnknownConcept, "frequency table names unknown ConceptId " + id);
      unknown.push_back(id);
      continue;
    }
    own[to_index(*node)] += count;
  }

  // Per-concept descendant walk; the stamp array marks nodes already summed
  // for the current concept so shared descendants count once.
  std::vector<std::uint64_t> mass(n, 0);
  std::vector<std::size_t> stamp(n, 0);
  std::vector<NodeId> stack;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t mark = i + 1;
    std::uint64_t total = own[i];
    stamp[i] = mark;
    stack.assign(t.children(to_node(i)).begin(), t.children(to_node(i)).end());
    while (!stack.empty()) {
      std::size_t u = to_index(stack.back());
      stack.pop_back();
      if (stamp[u] == mark) continue;
      stamp[u] = mark;
      total += own[u];
      for (NodeId c : t.children(to_node(u))) {
        if (stamp[to_index(c)] != mark) stack.push_back(c);
      }
    }
    mass[i] = total;
  }

  const double denom = static_cast<double>(mass[to_index(t.root())]);
  if (denom == 0.0) throw Error(Errc::ZeroMass, "frequency table has zero total mass");
  std::vector<double> ic(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (to_node(i) == t.root()) continue;  // P(root*) = 1
    if (mass[i] == 0) {
      throw Error(Errc::ZeroMass, "concept " + t.id(to_node(i)) +
                                      " has zero probability mass; enable smoothing");
    }
    ic[i] = -std::log(static_cast<double>(mass[i]) / denom);
  }

  IcTable table(IcSource::Corpus, options.smoothing, std::move(ic));
  table.set_unknown_concepts(std::move(unknown));
  return table;
}

IcTable intrinsic_ic(const Taxonomy& t) {
  std::vector<double> ic(t.size(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (to_node(i) == t.root()) continue;
    LeafStats s = t.leaf_stats(to_node(i));
    double ratio = static_cast<double>(s.leaves) / static_cast<double>(s.subsumers) + 1.0;
    ic[i] = -std::log(ratio / (static_cast<double>(s.max_leaves) + 1.0));
  }
  return IcTable(IcSource::Intrinsic, false, std::move(ic));
}

void write_ic(std::ostream& out, const Taxonomy& t, const IcTable& ic,
              const std::vector<std::string>& extra_header) {
  out << "#source=" << (ic.source() == IcSource::Corpus ? "CORPUS" : "INTRINSIC")
      << " log_base=e smoothing=" << (ic.smoothing() ? "on" : "off") << '\n';
  for (const auto& line : extra_header) out << '#' << line << '\n';
  char buf[64];
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.10g", ic(to_node(i)));
    out << t.id(to_node(i)) << '\t' << buf << '\n';
  }
}

void save_ic(const std::filesystem::path& path, const Taxonomy& t, const IcTable& ic,
             const std::vector<std::string>& extra_header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  write_ic(out, t, ic, extra_header);
}

IcTable load_ic(const std::filesystem::path& path, const Taxonomy& t) {
  auto in = detail::open_input(path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("#source=", 0) != 0) {
    throw Error(Errc::Parse, "malformed line (" + detail::origin(path, 1) + "): missing #source header");
  }
  IcSource source;
  if (header.find("#source=CORPUS") == 0) {
    source = IcSource::Corpus;
  } else if (header.find("#source=INTRINSIC") == 0) {
    source = IcSource::Intrinsic;
  } else {
    throw Error(Errc::Parse, "unknown IC source in " + path.string());
  }
  if (header.find("log_base=e") == std::string::npos) {
    throw Error(Errc::Parse, "unsupported log base in " + path.string());
  }
  bool smoothing = header.find("smoothing=on") != std::string::npos;

  std::vector<double> values(t.size(), 0.0);
  std::vector<char> seen(t.size(), 0);
  std::string line;
  std::size_t no = 1;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto f = detail::split(line, '\t');
    std::optional<double> v;
    if (f.size() == 2) v = detail::parse_double(f[1]);
    if (!v || !std::isfinite(*v) || *v < 0) {
      throw Error(Errc::Parse, "malformed line (" + detail::origin(path, no) + "): expected concept_id<TAB>ic");
    }
    NodeId node = t.node(detail::trim(f[0]));
    values[to_index(node)] = *v;
    seen[to_index(node)] = 1;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!seen[i]) throw Error(Errc::Parse, path.string() + " has no IC for " + t.id(to_node(i)));
  }
  return IcTable(source, smoothing, std::move(values));
}

}  // namespace semrel
