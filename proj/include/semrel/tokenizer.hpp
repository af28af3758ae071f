#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace semrel {

struct TokenizerOptions {
  bool lowercase = true;
  std::set<std::string, std::less<>> stoplist;
};

/// Splits text into maximal runs of ASCII letters/digits. Bytes >= 0x80 are
/// treated as letters so UTF-8 words stay whole. No stemming.
class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(TokenizerOptions options) : options_(std::move(options)) {}

  std::vector<std::string> tokenize(std::string_view text) const;
  const TokenizerOptions& options() const noexcept { return options_; }

 private:
  TokenizerOptions options_;
};

/// Byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t find_invalid_utf8(std::string_view text);

}  // namespace semrel
