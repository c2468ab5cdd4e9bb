#pragma once

#include <stdexcept>

#include "lcscount/types.hpp"

// Exponential-time reference implementations, straight from the definitions.
// Only meant for test-scale inputs; both reject anything larger.
namespace lcscount::oracle {

inline constexpr std::size_t kMaxDistinctLength = 18;   // |a| for oracle_distinct
inline constexpr std::size_t kMaxEmbeddingTotal = 30;   // |a| + |b| for oracle_embeddings

class InputTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An LCS occurrence: strictly increasing positions in a and in b with
/// a[a_positions[r]] == b[b_positions[r]] for every rank r.
struct Embedding {
  std::vector<std::size_t> a_positions;
  std::vector<std::size_t> b_positions;
};

bool is_subsequence(SequenceView needle, SequenceView haystack);

/// Enumerates every subsequence of a, keeps the longest ones that also occur
/// in b, and counts them as strings.
CountResult oracle_distinct(SequenceView a, SequenceView b);

/// Every maximum-length Embedding of a and b (just the empty one when the
/// sequences share nothing).
std::vector<Embedding> enumerate_lcs_embeddings(SequenceView a, SequenceView b);

CountResult oracle_embeddings(SequenceView a, SequenceView b);

}  // namespace lcscount::oracle
