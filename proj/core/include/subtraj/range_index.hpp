#pragma once

#include "subtraj/geometry.hpp"
#include "subtraj/trajectory.hpp"

#include <optional>
#include <vector>

namespace subtraj {

/// Balanced binary decomposition of the vertex index range [1, n]; each
/// node keeps the bounding box of its points. Disk queries descend the
/// tree and prune subtrees whose box is farther than delta from the query
/// point, which makes row generation output-sensitive.
///
/// Compared to a per-node spatial tree this trades the worst case (a
/// near-miss box may be opened without yielding output, so a single query
/// can degenerate to O(n)) for an O(n)-word structure and short queries on
/// clustered data; the unit suite checks all answers against linear scans.
class RangeIndex {
public:
    RangeIndex() = default;

    /// Builds the decomposition over all store vertices.
    /// Throws std::invalid_argument on an empty store.
    explicit RangeIndex(const TrajectoryStore& store);

    /// Greatest column j' <= j with d(store(j'), q) <= delta, if any.
    std::optional<Index> prev_free_column(const Point& q, double delta, Index j) const;

    /// All columns within delta of q, strictly descending.
    std::vector<Index> enumerate_row_free(const Point& q, double delta) const;
    /// Same stream appended to out (cleared first).
    void enumerate_row_free(const Point& q, double delta, std::vector<Index>& out) const;

    Index size() const { return n_; }
    size_t node_count() const { return nodes_.size(); }
    size_t memory_bytes() const { return nodes_.size() * sizeof(Node); }

private:
    struct Node {
        Index lo = 0, hi = 0;
        Box box;
    };

    void build(const TrajectoryStore& store, size_t k, Index lo, Index hi);
    std::optional<Index> descend_prev(size_t k, const Point& q, double d2, Index j) const;
    void descend_enumerate(size_t k, const Point& q, double d2, std::vector<Index>& out) const;

    std::vector<Node> nodes_;
    Index n_ = 0;
};

} // namespace subtraj
