#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "semrel/taxonomy.hpp"

namespace testing_support {

inline std::filesystem::path fixture_dir() { return SEMREL_FIXTURE_DIR; }
inline std::filesystem::path fixture(const char* name) { return fixture_dir() / name; }

inline semrel::TaxonomyFiles fixture_files() {
  return {fixture("concepts.tsv"), fixture("relations.tsv"), fixture("definitions.tsv"), fixture("index.tsv")};
}

inline semrel::Taxonomy fixture_taxonomy(semrel::HierarchyConfig config = {}) {
  return semrel::load_taxonomy(fixture_files(), config);
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("semrel_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing_support
