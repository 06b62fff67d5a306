#pragma once

#include "subtraj/geometry.hpp"

#include <span>
#include <utility>
#include <vector>

namespace subtraj {

struct Trajectory {
    std::vector<Point> vertices;
};

/// Position of a store vertex in the original input: trajectory id
/// (0-based, input order) and local vertex index (1-based).
struct Origin {
    Index trajectory = 0;
    Index local = 0;
};

inline bool operator==(const Origin& a, const Origin& b) {
    return a.trajectory == b.trajectory && a.local == b.local;
}

/// Half-open-free inclusive vertex interval [a, b] of the concatenated
/// store. Valid refs never contain a boundary edge.
struct SubtrajectoryRef {
    Index a = 0;
    Index b = 0;

    Index vertex_count() const { return b - a + 1; }
    /// Length in edges; a single vertex has length 0.
    Index length_edges() const { return b - a; }
};

inline bool operator==(const SubtrajectoryRef& l, const SubtrajectoryRef& r) {
    return l.a == r.a && l.b == r.b;
}
inline bool operator<(const SubtrajectoryRef& l, const SubtrajectoryRef& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
}

/// All input trajectories concatenated into one vertex sequence.
/// Edges between consecutive inputs are marked as boundary edges;
/// subtrajectories may not cross them. Indices are 1-based. Immutable
/// after construction.
class TrajectoryStore {
public:
    TrajectoryStore() = default;
    TrajectoryStore(std::vector<Point> vertices, std::vector<Index> boundaries,
                    std::vector<Origin> origins);

    Index size() const { return static_cast<Index>(vertices_.size()); }
    bool empty() const { return vertices_.empty(); }

    const Point& point(Index i) const { return vertices_[static_cast<size_t>(i - 1)]; }
    const Origin& origin(Index i) const { return origins_[static_cast<size_t>(i - 1)]; }

    /// True when the edge (i, i+1) joins two different input trajectories.
    bool boundary_after(Index i) const {
        return i >= 1 && i < size() && boundary_flags_[static_cast<size_t>(i)] != 0;
    }

    const std::vector<Index>& boundaries() const { return boundary_list_; }

    /// Maximal boundary-free intervals, ascending.
    std::vector<std::pair<Index, Index>> segments() const;

    std::span<const Point> span(const SubtrajectoryRef& ref) const {
        return {vertices_.data() + (ref.a - 1), static_cast<size_t>(ref.vertex_count())};
    }
    std::span<const Point> points() const { return vertices_; }

    Box bounding_box() const;

private:
    std::vector<Point> vertices_;
    std::vector<Index> boundary_list_;        // ascending i with edge (i, i+1) a boundary
    std::vector<std::uint8_t> boundary_flags_; // size n+1, indexed by i
    std::vector<Origin> origins_;
};

/// Builds the store for a non-empty sequence of non-empty trajectories.
/// Throws std::invalid_argument otherwise.
TrajectoryStore concatenate(std::span<const Trajectory> trajectories);

/// Validates [a, b] and returns the ref. Throws std::out_of_range for bad
/// indices and std::invalid_argument when the interval crosses a boundary.
SubtrajectoryRef make_subtrajectory(const TrajectoryStore& store, Index a, Index b);

/// Deletes all vertices inside the given pairwise-disjoint intervals and
/// re-indexes the survivors densely. Every cut becomes a boundary edge;
/// origins are preserved. Throws std::invalid_argument on overlap.
TrajectoryStore remove_intervals(const TrajectoryStore& store,
                                 std::vector<SubtrajectoryRef> intervals);

} // namespace subtraj
