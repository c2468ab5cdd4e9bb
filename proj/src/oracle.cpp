#include "lcscount/oracle.hpp"

#include <set>
#include <string>

namespace lcscount::oracle {

bool is_subsequence(SequenceView needle, SequenceView haystack) {
  std::size_t k = 0;
  for (Symbol s : haystack) {
    if (k == needle.size()) break;
    if (needle[k] == s) ++k;
  }
  return k == needle.size();
}

CountResult oracle_distinct(SequenceView a, SequenceView b) {
  if (a.size() > kMaxDistinctLength) {
    throw InputTooLarge("oracle_distinct: first sequence has " + std::to_string(a.size()) +
                        " symbols, limit is " + std::to_string(kMaxDistinctLength));
  }
  std::size_t best = 0;
  std::set<Sequence> longest{Sequence{}};
  Sequence candidate;
  const std::uint32_t subsets = std::uint32_t{1} << a.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    candidate.clear();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) candidate.push_back(a[i]);
    }
    if (candidate.size() < best || !is_subsequence(candidate, b)) continue;
    if (candidate.size() > best) {
      best = candidate.size();
      longest.clear();
    }
    longest.insert(candidate);
  }
  return {best, Count(longest.size())};
}

namespace {

// Depth-first over index pairs: every extension of the current partial
// embedding by a later matching pair.
void extend(SequenceView a, SequenceView b, std::size_t from_a, std::size_t from_b,
            Embedding& current, std::vector<Embedding>& best) {
  if (best.empty() || current.a_positions.size() > best.front().a_positions.size()) {
    best.clear();
    best.push_back(current);
  } else if (current.a_positions.size() == best.front().a_positions.size()) {
    best.push_back(current);
  }
  for (std::size_t i = from_a; i < a.size(); ++i) {
    for (std::size_t j = from_b; j < b.size(); ++j) {
      if (a[i] != b[j]) continue;
      current.a_positions.push_back(i);
      current.b_positions.push_back(j);
      extend(a, b, i + 1, j + 1, current, best);
      current.a_positions.pop_back();
      current.b_positions.pop_back();
    }
  }
}

}  // namespace

std::vector<Embedding> enumerate_lcs_embeddings(SequenceView a, SequenceView b) {
  if (a.size() + b.size() > kMaxEmbeddingTotal) {
    throw InputTooLarge("oracle_embeddings: combined length " + std::to_string(a.size() + b.size()) +
                        " exceeds limit " + std::to_string(kMaxEmbeddingTotal));
  }
  std::vector<Embedding> best;
  Embedding current;
  extend(a, b, 0, 0, current, best);
  return best;
}

CountResult oracle_embeddings(SequenceView a, SequenceView b) {
  const auto all = enumerate_lcs_embeddings(a, b);
  return {all.front().a_positions.size(), Count(all.size())};
}

}  // namespace lcscount::oracle
