#include <string>

#include "semrel/error.hpp"
#include "semrel/taxonomy.hpp"
#include "text_util.hpp"

namespace semrel {

namespace {

[[noreturn]] void malformed(const std::filesystem::path& file, std::size_t line, const std::string& why) {
  throw Error(Errc::Parse, "malformed line (" + detail::origin(file, line) + "): " + why);
}

}  // namespace

TaxonomySource read_taxonomy_source(const TaxonomyFiles& files) {
  TaxonomySource src;

  detail::for_each_data_line(files.concepts, [&](std::size_t no, std::string_view line) {
    auto f = detail::split(line, '\t');
    if (f.size() != 2) malformed(files.concepts, no, "expected concept_id<TAB>preferred_term");
    std::string_view id = detail::trim(f[0]);
    if (id.empty()) malformed(files.concepts, no, "empty concept_id");
    src.concepts.push_back({std::string(id), std::string(detail::trim(f[1]))});
  });

  detail::for_each_data_line(files.relations, [&](std::size_t no, std::string_view line) {
    auto f = detail::split(line, '\t');
    if (f.size() != 3) malformed(files.relations, no, "expected source<TAB>REL<TAB>target");
    auto kind = parse_relation(detail::trim(f[1]));
    if (!kind) malformed(files.relations, no, "unknown relation '" + std::string(f[1]) + "'");
    src.relations.push_back({std::string(detail::trim(f[0])), *kind, std::string(detail::trim(f[2])),
                             detail::origin(files.relations, no)});
  });

  // definitions and index are optional: an empty path skips them.
  if (!files.definitions.empty()) detail::for_each_data_line(files.definitions, [&](std::size_t no, std::string_view line) {
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) malformed(files.definitions, no, "expected concept_id<TAB>definition");
    src.definitions.push_back({std::string(detail::trim(line.substr(0, tab))),
                               std::string(detail::trim(line.substr(tab + 1))),
                               detail::origin(files.definitions, no)});
  });

  if (!files.index.empty()) detail::for_each_data_line(files.index, [&](std::size_t no, std::string_view line) {
    auto f = detail::split(line, '\t');
    if (f.size() != 2) malformed(files.index, no, "expected surface_term<TAB>concept_id");
    src.index.push_back({std::string(f[0]), std::string(detail::trim(f[1])), detail::origin(files.index, no)});
  });

  return src;
}

Taxonomy load_taxonomy(const TaxonomyFiles& files, HierarchyConfig config) {
  return Taxonomy::build(read_taxonomy_source(files), config);
}

}  // namespace semrel
