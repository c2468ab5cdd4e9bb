#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "lcscount/types.hpp"

namespace lcscount {

enum class Tokenization { Bytes, Codepoints, Lines };

std::string to_string(Tokenization t);

class InvalidUtf8 : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits raw input into symbols. Lines are interned, so one Tokenizer must
/// be shared by both sides of a comparison for line ids to agree.
class Tokenizer {
 public:
  explicit Tokenizer(Tokenization mode) : mode_(mode) {}

  Sequence operator()(std::string_view text);

  Tokenization mode() const noexcept { return mode_; }

 private:
  Tokenization mode_;
  std::unordered_map<std::string, Symbol> lines_;
};

/// Strict UTF-8 decoding: rejects overlongs, surrogates, and values past U+10FFFF.
Sequence decode_utf8(std::string_view text);

}  // namespace lcscount
