#include "lcscount/core.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace lcscount {

std::string to_string(CountKind kind) {
  return kind == CountKind::Distinct ? "distinct" : "embeddings";
}

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::Full ? "full" : "linear";
}

LengthValue lcs_length(SequenceView a, SequenceView b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<LengthValue> col(a.size() + 1, 0);
  for (Symbol bj : b) {
    LengthValue diag = 0;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      LengthValue next = a[i - 1] == bj ? diag + 1 : std::max(col[i - 1], col[i]);
      diag = col[i];
      col[i] = next;
    }
  }
  return col.back();
}

namespace {

class FullTable {
 public:
  FullTable(std::size_t rows, std::size_t cols)
      : stride_(cols + 1), lengths_((rows + 1) * stride_, 0), counts_((rows + 1) * stride_, 1) {}

  LengthValue& length(std::size_t i, std::size_t j) { return lengths_[i * stride_ + j]; }
  Count& count(std::size_t i, std::size_t j) { return counts_[i * stride_ + j]; }

 private:
  std::size_t stride_;
  std::vector<LengthValue> lengths_;
  std::vector<Count> counts_;
};

}  // namespace

CountResult count_full(SequenceView a, SequenceView b, CountKind kind,
                       const CellObserver& observer) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  // Row 0 and column 0 are already L = 0, D = 1.
  FullTable t(m, n);

  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= m; ++i) {
      const bool match = a[i - 1] == b[j - 1];
      LengthValue len = match ? t.length(i - 1, j - 1) + 1
                              : std::max(t.length(i - 1, j), t.length(i, j - 1));
      t.length(i, j) = len;

      Count& cell = t.count(i, j);
      cell = 0;
      bool subtracted = false;
      if (match) cell = t.count(i - 1, j - 1);
      if (!match || kind == CountKind::Embeddings) {
        if (t.length(i - 1, j) == len) cell += t.count(i - 1, j);
        if (t.length(i, j - 1) == len) cell += t.count(i, j - 1);
        if (t.length(i - 1, j - 1) == len) {
          cell -= t.count(i - 1, j - 1);
          subtracted = true;
        }
        assert(cell >= 0);
      }
      assert(!(match && subtracted));
      if (observer) observer(CellEvent{i, j, match, subtracted, len, &cell});
    }
  }
  return {t.length(m, n), t.count(m, n)};
}

CountResult count_distinct_full(SequenceView a, SequenceView b, const CellObserver& observer) {
  return count_full(a, b, CountKind::Distinct, observer);
}

CountResult count_embeddings_full(SequenceView a, SequenceView b, const CellObserver& observer) {
  return count_full(a, b, CountKind::Embeddings, observer);
}

RollingState RollingState::initial(std::size_t rows) {
  RollingState s;
  s.lengths.assign(rows + 1, 0);
  s.counts.assign(rows + 1, Count(1));
  return s;
}

void RollingState::begin_column() {
  lengths[0] = 0;
  counts[0] = 1;
  prev_diag_length = 0;
  prev_diag_count = 1;
}

bool step_cell(RollingState& s, std::size_t i, Symbol row_symbol, Symbol col_symbol,
               CountKind kind) {
  assert(i >= 1 && i < s.lengths.size());
  assert(s.counts.size() == s.lengths.size());

  const bool match = row_symbol == col_symbol;
  const LengthValue up = s.lengths[i - 1];
  const LengthValue left = s.lengths[i];
  const LengthValue diag = s.prev_diag_length;

  LengthValue next_len = std::max(up, left);
  Count& next = s.scratch;
  next = 0;
  bool subtracted = false;
  if (match) {
    next_len = diag + 1;
    next = s.prev_diag_count;
  }
  if (!match || kind == CountKind::Embeddings) {
    if (up == next_len) next += s.counts[i - 1];
    if (left == next_len) next += s.counts[i];
    if (diag == next_len) {
      next -= s.prev_diag_count;
      subtracted = true;
    }
    assert(next >= 0);
  }
  assert(!(match && subtracted));

  // prev_diag <- old entry i; entry i <- new value; scratch keeps a spare buffer.
  s.prev_diag_length = left;
  s.lengths[i] = next_len;
  swap(s.prev_diag_count, s.counts[i]);
  swap(s.counts[i], s.scratch);
  return subtracted;
}

RollingCounter::RollingCounter(SequenceView rows, CountKind kind)
    : rows_(rows), kind_(kind), state_(RollingState::initial(rows.size())) {}

void RollingCounter::push_column(Symbol col_symbol, const CellObserver& observer) {
  ++columns_;
  state_.begin_column();
  for (std::size_t i = 1; i <= rows_.size(); ++i) {
    const bool subtracted = step_cell(state_, i, rows_[i - 1], col_symbol, kind_);
    if (observer) {
      observer(CellEvent{i, columns_, rows_[i - 1] == col_symbol, subtracted,
                         state_.lengths[i], &state_.counts[i]});
    }
  }
}

CountResult RollingCounter::result() const {
  return {state_.lengths.back(), state_.counts.back()};
}

CountResult count_linear_space(SequenceView a, SequenceView b, CountKind kind,
                               const CellObserver& observer) {
  if (a.size() > b.size()) std::swap(a, b);
  RollingCounter counter(a, kind);
  for (Symbol bj : b) counter.push_column(bj, observer);
  return counter.result();
}

LcsSummary summarize(SequenceView a, SequenceView b, const SummaryRequest& request) {
  auto run = [&](CountKind kind) {
    return request.algorithm == Algorithm::Full ? count_full(a, b, kind)
                                                : count_linear_space(a, b, kind);
  };
  LcsSummary out;
  if (!request.distinct && !request.embeddings) {
    out.lcs_length = lcs_length(a, b);
    return out;
  }
  if (request.distinct) {
    auto r = run(CountKind::Distinct);
    out.lcs_length = r.length;
    out.distinct_count = std::move(r.count);
  }
  if (request.embeddings) {
    auto r = run(CountKind::Embeddings);
    out.lcs_length = r.length;
    out.embedding_count = std::move(r.count);
  }
  return out;
}

}  // namespace lcscount
