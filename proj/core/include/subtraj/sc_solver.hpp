#pragma once

#include "subtraj/cluster.hpp"
#include "subtraj/freespace.hpp"
#include "subtraj/range_index.hpp"
#include "subtraj/trajectory.hpp"

#include <optional>

namespace subtraj {

/// Centre length is measured in edges throughout: a centre [a, b] has
/// length b - a and b - a + 1 vertices.
inline constexpr bool kCentreLengthCountsEdges = true;

/// Maximum-cardinality greedy query against the window's bottom row.
///
/// Scans row b right to left from column n. Whenever a free cell can
/// reach the top row a, walks to the right-most landing column j1,
/// records the member [j1, j2] and restarts the scan at j1 - 1. With a
/// target the scan stops as soon as target members are found and yields
/// nullopt if the target is unmet; without one it returns the full
/// maximum-cardinality disjoint member set for centre [a, b].
std::optional<Cluster> query_centre(const RowWindow& window, Index a, Index b,
                                    std::optional<Index> target);

struct ScStats {
    SweepCounters window;
    size_t queries = 0;
    /// Longest centre (in edges) for which a window was materialised.
    Index max_window_edges = 0;
};

/// SC(m, ell, delta): first centre of exactly ell edges with at least m
/// disjoint members, scanning windows left to right per segment.
std::optional<Cluster> sc_fixed(Index m, Index ell, double delta, const TrajectoryStore& store,
                                const RangeIndex& index, ScStats* stats = nullptr);

/// SC(max, ell, delta): centre of exactly ell edges maximising the member
/// count; ties resolved towards the smallest start row.
std::optional<Cluster> sc_max_cardinality(Index ell, double delta, const TrajectoryStore& store,
                                          const RangeIndex& index, ScStats* stats = nullptr);

/// SC(m, max, delta): longest centre admitting at least m disjoint
/// members (two-pointer sweep); ties resolved towards the smallest start
/// row. The returned cluster carries the full member set of that centre,
/// so its cardinality may exceed m.
std::optional<Cluster> sc_max_length(Index m, double delta, const TrajectoryStore& store,
                                     const RangeIndex& index, ScStats* stats = nullptr);

} // namespace subtraj
