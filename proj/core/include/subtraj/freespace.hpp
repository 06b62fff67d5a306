#pragma once

#include "subtraj/geometry.hpp"
#include "subtraj/range_index.hpp"
#include "subtraj/trajectory.hpp"

#include <deque>
#include <limits>
#include <optional>
#include <vector>

namespace subtraj {

/// Sentinel for "no directed path lands in the anchor row". Tagged value,
/// never a valid column.
inline constexpr Index kUnreachable = std::numeric_limits<Index>::min();

/// Free-space matrix predicate: cell (i, j) is free iff the two store
/// vertices are within delta of each other.
inline bool is_free(const TrajectoryStore& store, Index i, Index j, double delta) {
    return dist_sq(store.point(i), store.point(j)) <= delta * delta;
}

/// Counters kept by the sweep states; the memory invariants of the
/// solvers are asserted against these.
struct SweepCounters {
    Index rows_stored = 0;
    Index peak_rows = 0;
    size_t cells_stored = 0;
    size_t peak_cells = 0;
    size_t row_steps = 0;

    void on_row_added(size_t cells) {
        ++rows_stored;
        ++row_steps;
        cells_stored += cells;
        peak_rows = std::max(peak_rows, rows_stored);
        peak_cells = std::max(peak_cells, cells_stored);
    }
    void on_row_dropped(size_t cells) {
        --rows_stored;
        cells_stored -= cells;
    }
};

/// Sparse sliding window over consecutive rows [top, bottom] of the
/// free-space matrix. Each stored cell carries the minimum row reachable
/// from it by a directed path; only free cells are stored, ascending by
/// column. Dropping the top row is O(1) and leaves the remaining labels
/// untouched: a label may then name a row above the window, which is
/// exactly what consumers test (reach <= current top).
class RowWindow {
public:
    struct Cell {
        Index col;
        Index reach;
    };
    struct Row {
        Index row = 0;
        std::vector<Cell> cells;
    };

    RowWindow(const TrajectoryStore& store, const RangeIndex& index, double delta,
              bool dense_row_generation = false)
        : store_(&store), index_(&index), delta_(delta), dense_(dense_row_generation) {}

    double delta() const { return delta_; }
    const TrajectoryStore& store() const { return *store_; }
    bool empty() const { return rows_.empty(); }
    Index top() const { return rows_.front().row; }
    Index bottom() const { return rows_.back().row; }
    Index rows_stored() const { return static_cast<Index>(rows_.size()); }

    void reset();

    /// Appends row b and computes its reach labels from the row above.
    /// Requires an empty window or b == bottom()+1 with no boundary edge
    /// between the two rows.
    void step_second(Index b);

    /// Drops the top row in O(1).
    void step_first();

    const Row& row(Index r) const { return rows_[static_cast<size_t>(r - top())]; }
    const Row& bottom_row() const { return rows_.back(); }

    /// Reach label of cell (r, col), or nullopt when the cell is not free.
    std::optional<Index> reach(Index r, Index col) const;

    const SweepCounters& counters() const { return counters_; }

private:
    const TrajectoryStore* store_;
    const RangeIndex* index_;
    double delta_;
    bool dense_;
    std::deque<Row> rows_;
    std::vector<Index> scratch_cols_;
    SweepCounters counters_;
};

/// Dense per-column landing labels for one anchored sweep: for the anchor
/// row a and current row c, cur[y] is the maximum column d <= y such that
/// a directed path runs from (c, y) to (a, d), or kUnreachable. Only two
/// rows are held at a time; entries outside the current free-column lists
/// are stale and masked on access.
class ColState {
public:
    ColState(const TrajectoryStore& store, const RangeIndex& index, double delta,
             bool dense_step = false);

    double delta() const { return delta_; }
    Index anchor() const { return anchor_; }
    Index current() const { return current_; }

    /// Anchors the sweep: current row becomes a with landing(y) = y on its
    /// free cells.
    void start(Index a);

    /// Advances to row current()+1; requires no boundary edge in between.
    void step();

    /// Landing column for cell (current, y), or kUnreachable.
    Index landing(Index y) const {
        const Index v = cur_[static_cast<size_t>(y)];
        return cur_stamp_[static_cast<size_t>(y)] == round_ ? v : kUnreachable;
    }

    /// Free columns of the current row, ascending.
    const std::vector<Index>& free_columns() const { return cur_free_; }

    const SweepCounters& counters() const { return counters_; }
    size_t state_bytes() const;

private:
    void fill_row(Index c, bool initial);

    const TrajectoryStore* store_;
    const RangeIndex* index_;
    double delta_;
    bool dense_;
    Index anchor_ = 0;
    Index current_ = 0;
    std::uint32_t round_ = 0, prev_round_ = 0;
    std::vector<Index> cur_, prev_;
    std::vector<std::uint32_t> cur_stamp_, prev_stamp_;
    std::vector<Index> cur_free_, prev_free_;
    SweepCounters counters_;

    Index prev_landing(Index y) const {
        const Index v = prev_[static_cast<size_t>(y)];
        return prev_stamp_[static_cast<size_t>(y)] == prev_round_ ? v : kUnreachable;
    }
};

} // namespace subtraj
