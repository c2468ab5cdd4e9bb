#pragma once

#include <functional>

#include "lcscount/types.hpp"

namespace lcscount {

/// One evaluated DP cell, reported in the orientation the algorithm actually
/// used (rows = first sequence for the full table, rows = shorter sequence
/// for the rolling-column routines).
struct CellEvent {
  std::size_t row = 0;
  std::size_t col = 0;
  bool match = false;
  /// The L[i-1,j-1] == L[i,j] test was evaluated and held, so the diagonal
  /// count was subtracted. Never true on a match cell.
  bool diagonal_subtracted = false;
  LengthValue length = 0;
  const Count* count = nullptr;
};

/// Optional per-cell hook for tracing and instrumentation. Cheap when empty.
using CellObserver = std::function<void(const CellEvent&)>;

/// Length of a longest common subsequence, using O(min(m, n)) space.
LengthValue lcs_length(SequenceView a, SequenceView b);

/// Full (m+1) x (n+1) table; counts distinct LCS strings.
CountResult count_distinct_full(SequenceView a, SequenceView b,
                                const CellObserver& observer = {});

/// Full (m+1) x (n+1) table; counts LCS embeddings (position pairs).
CountResult count_embeddings_full(SequenceView a, SequenceView b,
                                  const CellObserver& observer = {});

CountResult count_full(SequenceView a, SequenceView b, CountKind kind,
                       const CellObserver& observer = {});

/// Rolling column state for the linear-space counter.
///
/// While cell (i, j) is being processed, entries below i hold column j,
/// entries at i and above still hold column j-1, and prev_diag_* hold the
/// column j-1 value at i-1.
struct RollingState {
  std::vector<LengthValue> lengths;
  std::vector<Count> counts;
  LengthValue prev_diag_length = 0;
  Count prev_diag_count = 1;
  /// Reused buffer for newE so a steady-state update does not allocate.
  Count scratch = 0;

  /// State for column 0 with `rows` rows: every length 0, every count 1.
  static RollingState initial(std::size_t rows);

  std::size_t rows() const noexcept { return lengths.size() - 1; }

  /// Row 0 of a new column: resets the boundary cell and the diagonal carry.
  void begin_column();
};

/// Evaluates cell (i, column) in place; `row_symbol` is a_i and `col_symbol`
/// is b_j. Requires 1 <= i <= rows() and the rolling contract for (i, j).
/// Returns true when the diagonal-subtraction guard fired.
bool step_cell(RollingState& state, std::size_t i, Symbol row_symbol, Symbol col_symbol,
               CountKind kind);

/// Drives a RollingState one column at a time over a fixed row sequence.
class RollingCounter {
 public:
  RollingCounter(SequenceView rows, CountKind kind);

  void push_column(Symbol col_symbol, const CellObserver& observer = {});

  CountResult result() const;
  const RollingState& state() const noexcept { return state_; }
  std::size_t columns() const noexcept { return columns_; }

 private:
  SequenceView rows_;
  CountKind kind_;
  RollingState state_;
  std::size_t columns_ = 0;
};

/// Same result as count_full, in Theta(min(m, n)) working space. The shorter
/// sequence is assigned to the rows (the first one on ties).
CountResult count_linear_space(SequenceView a, SequenceView b, CountKind kind,
                               const CellObserver& observer = {});

enum class Algorithm { Full, Linear };

std::string to_string(Algorithm algorithm);

struct SummaryRequest {
  bool distinct = true;
  bool embeddings = true;
  Algorithm algorithm = Algorithm::Linear;
};

LcsSummary summarize(SequenceView a, SequenceView b, const SummaryRequest& request);

}  // namespace lcscount
