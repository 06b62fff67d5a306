#include "subtraj/freespace.hpp"

#include <algorithm>
#include <stdexcept>

namespace subtraj {

namespace {

void generate_free_columns(const TrajectoryStore& store, const RangeIndex& index, double delta,
                           Index row, bool dense, std::vector<Index>& out_ascending) {
    out_ascending.clear();
    const Point& q = store.point(row);
    if (dense) {
        const double d2 = delta * delta;
        for (Index j = 1; j <= store.size(); ++j) {
            if (dist_sq(q, store.point(j)) <= d2) out_ascending.push_back(j);
        }
        return;
    }
    index.enumerate_row_free(q, delta, out_ascending);
    std::reverse(out_ascending.begin(), out_ascending.end());
}

} // namespace

void RowWindow::reset() {
    while (!rows_.empty()) {
        counters_.on_row_dropped(rows_.front().cells.size());
        rows_.pop_front();
    }
}

void RowWindow::step_second(Index b) {
    if (!rows_.empty()) {
        if (b != bottom() + 1) {
            throw std::logic_error("RowWindow::step_second: rows must be contiguous");
        }
        if (store_->boundary_after(b - 1)) {
            throw std::logic_error("RowWindow::step_second: window may not cross a boundary");
        }
    }
    generate_free_columns(*store_, *index_, delta_, b, dense_, scratch_cols_);

    Row row;
    row.row = b;
    row.cells.reserve(scratch_cols_.size());
    const Row* above = rows_.empty() ? nullptr : &rows_.back();
    size_t p = 0; // merge pointer into the row above
    for (Index j : scratch_cols_) {
        Index reach = b;
        const bool col_step_ok = j > 1 && !store_->boundary_after(j - 1);
        if (col_step_ok && !row.cells.empty() && row.cells.back().col == j - 1) {
            reach = std::min(reach, row.cells.back().reach);
        }
        if (above) {
            while (p < above->cells.size() && above->cells[p].col < j - 1) ++p;
            if (col_step_ok && p < above->cells.size() && above->cells[p].col == j - 1) {
                reach = std::min(reach, above->cells[p].reach);
            }
            const size_t pv = (p < above->cells.size() && above->cells[p].col == j - 1) ? p + 1 : p;
            if (pv < above->cells.size() && above->cells[pv].col == j) {
                reach = std::min(reach, above->cells[pv].reach);
            }
        }
        row.cells.push_back(Cell{j, reach});
    }
    counters_.on_row_added(row.cells.size());
    rows_.push_back(std::move(row));
}

void RowWindow::step_first() {
    if (rows_.empty()) {
        throw std::logic_error("RowWindow::step_first: window is empty");
    }
    counters_.on_row_dropped(rows_.front().cells.size());
    rows_.pop_front();
}

std::optional<Index> RowWindow::reach(Index r, Index col) const {
    if (rows_.empty() || r < top() || r > bottom()) return std::nullopt;
    const auto& cells = row(r).cells;
    auto it = std::lower_bound(cells.begin(), cells.end(), col,
                               [](const Cell& c, Index v) { return c.col < v; });
    if (it == cells.end() || it->col != col) return std::nullopt;
    return it->reach;
}

ColState::ColState(const TrajectoryStore& store, const RangeIndex& index, double delta,
                   bool dense_step)
    : store_(&store), index_(&index), delta_(delta), dense_(dense_step) {
    const size_t n1 = static_cast<size_t>(store.size()) + 1;
    cur_.assign(n1, kUnreachable);
    prev_.assign(n1, kUnreachable);
    cur_stamp_.assign(n1, 0);
    prev_stamp_.assign(n1, 0);
}

void ColState::start(Index a) {
    if (a < 1 || a > store_->size()) {
        throw std::out_of_range("ColState::start: anchor out of range");
    }
    if (counters_.rows_stored == 2) counters_.on_row_dropped(prev_free_.size());
    if (counters_.rows_stored == 1) counters_.on_row_dropped(cur_free_.size());
    prev_free_.clear();
    anchor_ = a;
    current_ = a;
    fill_row(a, /*initial=*/true);
}

void ColState::step() {
    if (current_ < anchor_ || current_ >= store_->size()) {
        throw std::logic_error("ColState::step: no next row");
    }
    if (store_->boundary_after(current_)) {
        throw std::logic_error("ColState::step: sweep may not cross a boundary");
    }
    if (counters_.rows_stored == 2) counters_.on_row_dropped(prev_free_.size());
    ++current_;
    fill_row(current_, /*initial=*/false);
}

void ColState::fill_row(Index c, bool initial) {
    std::swap(cur_, prev_);
    std::swap(cur_stamp_, prev_stamp_);
    std::swap(cur_free_, prev_free_);
    prev_round_ = round_;
    ++round_;

    generate_free_columns(*store_, *index_, delta_, c, dense_, cur_free_);
    for (Index y : cur_free_) {
        Index v;
        if (initial) {
            v = y; // zero-length path lands where it starts
        } else {
            v = prev_landing(y);
            if (y > 1 && !store_->boundary_after(y - 1)) {
                v = std::max(v, landing(y - 1));
                v = std::max(v, prev_landing(y - 1));
            }
        }
        cur_[static_cast<size_t>(y)] = v;
        cur_stamp_[static_cast<size_t>(y)] = round_;
    }
    counters_.on_row_added(cur_free_.size());
}

size_t ColState::state_bytes() const {
    return (cur_.capacity() + prev_.capacity() + cur_free_.capacity() + prev_free_.capacity()) *
               sizeof(Index) +
           (cur_stamp_.capacity() + prev_stamp_.capacity()) * sizeof(std::uint32_t);
}

} // namespace subtraj
