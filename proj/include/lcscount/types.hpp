#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcscount {

/// Opaque token. Only equality is ever consulted; the caller decides what a
/// symbol means (a byte, a code point, an interned line id, ...).
using Symbol = std::uint32_t;

using Sequence = std::vector<Symbol>;
using SequenceView = std::span<const Symbol>;

/// Exact integer of unbounded magnitude. Counts are nonnegative at rest; the
/// DP routines assert that in debug builds.
using Count = boost::multiprecision::cpp_int;

/// LCS length; always within [0, min(m, n)].
using LengthValue = std::size_t;

enum class CountKind { Distinct, Embeddings };

/// Length plus one count, as returned by the individual counting routines.
struct CountResult {
  LengthValue length = 0;
  Count count = 1;

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

struct LcsSummary {
  LengthValue lcs_length = 0;
  std::optional<Count> distinct_count;
  std::optional<Count> embedding_count;
};

std::string to_string(CountKind kind);

}  // namespace lcscount
