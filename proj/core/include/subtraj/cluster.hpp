#pragma once

#include "subtraj/frechet.hpp"
#include "subtraj/trajectory.hpp"

#include <vector>

namespace subtraj {

/// A centre subtrajectory together with pairwise-disjoint member
/// subtrajectories, each within Fréchet distance delta of the centre.
struct Cluster {
    SubtrajectoryRef centre;
    std::vector<SubtrajectoryRef> members; // ascending by start, disjoint
    double delta = 0.0;
    /// Cached discrete Fréchet distance from centre to each member;
    /// parallel to members, empty until computed.
    std::vector<double> member_distances;

    Index cardinality() const { return static_cast<Index>(members.size()); }
    Index coverage() const {
        Index c = 0;
        for (const auto& m : members) c += m.vertex_count();
        return c;
    }
    bool has_distances() const { return member_distances.size() == members.size(); }
};

/// Fills member_distances via the exact DP on (centre, member) pairs.
/// No-op when already cached.
void ensure_member_distances(Cluster& cluster, const TrajectoryStore& store);

} // namespace subtraj
