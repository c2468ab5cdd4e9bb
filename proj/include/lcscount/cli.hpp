#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lcscount/core.hpp"
#include "lcscount/tokenize.hpp"

namespace lcscount::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kOracleGuard = 3,
};

enum class Format { Plain, Json };

struct InputSource {
  enum class Kind { Literal, File, Stdin };
  Kind kind = Kind::Literal;
  std::string value;  // literal text or file path
};

struct ComparisonRequest {
  InputSource input_a;
  InputSource input_b;
  Tokenization tokenization = Tokenization::Bytes;
  bool want_length = true;
  bool want_distinct = true;
  bool want_embeddings = true;
  Algorithm algorithm = Algorithm::Linear;
  Format format = Format::Plain;
};

/// Runs `lcscount` with `args` (program name excluded). Results go to `out`,
/// diagnostics to `err`; `in` backs a `--file -` input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace lcscount::cli
