#include "semrel/measures.hpp"

#include <algorithm>
#include <cmath>

#include "semrel/error.hpp"

namespace semrel {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Path: return "path";
    case Measure::Wup: return "wup";
    case Measure::Zhong: return "zhong";
    case Measure::Pks: return "pks";
    case Measure::Cmatch: return "cmatch";
    case Measure::Batet: return "batet";
    case Measure::Res: return "res";
    case Measure::Lin: return "lin";
    case Measure::Jcn: return "jcn";
    case Measure::Faith: return "faith";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string measure_names() {
  std::string out;
  for (Measure m : kAllMeasures) {
    if (!out.empty()) out += ", ";
    out += measure_name(m);
  }
  return out;
}

bool requires_ic(Measure m) {
  return m == Measure::Res || m == Measure::Lin || m == Measure::Jcn || m == Measure::Faith;
}

bool is_bounded(Measure m) {
  return m == Measure::Path || m == Measure::Wup || m == Measure::Cmatch || m == Measure::Lin ||
         m == Measure::Faith;
}

Similarity::Similarity(const Taxonomy& taxonomy, const IcTable* ic, Measure measure, MeasureOptions options)
    : taxonomy_(taxonomy), ic_(ic), measure_(measure), options_(options) {
  if (requires_ic(measure) && ic == nullptr) {
    throw Error(Errc::MissingIc, "measure " + std::string(measure_name(measure)) + " requires an IC table");
  }
  if (ic != nullptr && ic->size() != taxonomy.size()) {
    throw Error(Errc::InvalidArgument, "IC table does not match the taxonomy");
  }
}

NodeId Similarity::deepest_lcs(NodeId a, NodeId b) const {
  auto lcs = taxonomy_.lcs_set(a, b);
  return *std::min_element(lcs.begin(), lcs.end(), [this](NodeId x, NodeId y) {
    int dx = taxonomy_.depth(x), dy = taxonomy_.depth(y);
    if (dx != dy) return dx > dy;
    return taxonomy_.id(x) < taxonomy_.id(y);
  });
}

NodeId Similarity::max_ic_lcs(NodeId a, NodeId b) const {
  auto lcs = taxonomy_.lcs_set(a, b);
  return *std::max_element(lcs.begin(), lcs.end(), [this](NodeId x, NodeId y) { return (*ic_)(x) < (*ic_)(y); });
}

SimScore Similarity::operator()(NodeId a, NodeId b) const {
  const Taxonomy& t = taxonomy_;
  double v = 0.0;
  switch (measure_) {
    case Measure::Path:
      v = 1.0 / t.spath(a, b);
      break;
    case Measure::Wup: {
      NodeId l = deepest_lcs(a, b);
      v = 2.0 * t.depth(l) / static_cast<double>(t.depth(a) + t.depth(b));
      break;
    }
    case Measure::Zhong: {
      NodeId l = deepest_lcs(a, b);
      auto m = [this, &t](NodeId c) { return std::pow(options_.zhong_k, -t.depth(c)); };
      v = 2.0 * m(l) / (m(a) + m(b));
      break;
    }
    case Measure::Pks: {
      // Node-counted spath is never 0, so the log argument stays in (0, 1).
      NodeId l = deepest_lcs(a, b);
      double to_root = t.spath(l, t.root());
      double sum = t.spath(l, a) + t.spath(l, b) + to_root;
      v = -std::log(to_root / sum);
      break;
    }
    case Measure::Cmatch:
    case Measure::Batet: {
      auto aa = t.ancestors(a);
      auto ab = t.ancestors(b);
      std::size_t shared = 0;
      for (std::size_t i = 0, j = 0; i < aa.size() && j < ab.size();) {
        if (aa[i] < ab[j]) {
          ++i;
        } else if (ab[j] < aa[i]) {
          ++j;
        } else {
          ++shared, ++i, ++j;
        }
      }
      const double uni = static_cast<double>(aa.size() + ab.size() - shared);
      if (measure_ == Measure::Cmatch) {
        v = shared / uni;
      } else if (uni == static_cast<double>(shared)) {
        v = -std::log2(1.0 / (uni + 1.0));
      } else {
        v = -std::log2((uni - shared) / uni);
      }
      break;
    }
    case Measure::Res:
      v = (*ic_)(max_ic_lcs(a, b));
      break;
    case Measure::Lin: {
      double denom = (*ic_)(a) + (*ic_)(b);
      v = denom > 0.0 ? 2.0 * (*ic_)(max_ic_lcs(a, b)) / denom : 0.0;
      break;
    }
    case Measure::Jcn: {
      double dist = (*ic_)(a) + (*ic_)(b) - 2.0 * (*ic_)(max_ic_lcs(a, b));
      v = dist > 0.0 ? 1.0 / dist : 1.0 / options_.jcn_epsilon;
      break;
    }
    case Measure::Faith: {
      double l = (*ic_)(max_ic_lcs(a, b));
      double denom = (*ic_)(a) + (*ic_)(b) - l;
      v = denom > 0.0 ? l / denom : 0.0;
      break;
    }
  }
  return {v, measure_};
}

double Similarity::best_sense(std::span<const NodeId> senses1, std::span<const NodeId> senses2) const {
  double best = 0.0;
  bool first = true;
  for (NodeId a : senses1) {
    for (NodeId b : senses2) {
      double v = (*this)(a, b).value;
      if (first || v > best) best = v;
      first = false;
    }
  }
  return best;
}

SimScore Similarity::best_sense(std::string_view term1, std::string_view term2) const {
  auto s1 = taxonomy_.senses(term1);
  if (s1.empty()) throw Error(Errc::UnmappableTerm, "unmappable term: " + std::string(term1));
  auto s2 = taxonomy_.senses(term2);
  if (s2.empty()) throw Error(Errc::UnmappableTerm, "unmappable term: " + std::string(term2));
  return {best_sense(s1, s2), measure_};
}

SimScore similarity(const Taxonomy& t, const IcTable* ic, Measure m, NodeId a, NodeId b, MeasureOptions options) {
  return Similarity(t, ic, m, options)(a, b);
}

SimScore best_sense_similarity(const Taxonomy& t, const IcTable* ic, Measure m, std::string_view term1,
                               std::string_view term2, MeasureOptions options) {
  return Similarity(t, ic, m, options).best_sense(term1, term2);
}

}  // namespace semrel
