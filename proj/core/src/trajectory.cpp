#include "subtraj/trajectory.hpp"

#include <algorithm>
#include <stdexcept>

namespace subtraj {

TrajectoryStore::TrajectoryStore(std::vector<Point> vertices, std::vector<Index> boundaries,
                                 std::vector<Origin> origins)
    : vertices_(std::move(vertices)),
      boundary_list_(std::move(boundaries)),
      origins_(std::move(origins)) {
    boundary_flags_.assign(vertices_.size() + 1, 0);
    for (Index b : boundary_list_) {
        boundary_flags_[static_cast<size_t>(b)] = 1;
    }
}

std::vector<std::pair<Index, Index>> TrajectoryStore::segments() const {
    std::vector<std::pair<Index, Index>> out;
    const Index n = size();
    Index lo = 1;
    for (Index i = 1; i <= n; ++i) {
        if (i == n || boundary_after(i)) {
            out.emplace_back(lo, i);
            lo = i + 1;
        }
    }
    return out;
}

Box TrajectoryStore::bounding_box() const {
    Box box;
    for (const Point& p : vertices_) box.expand(p);
    return box;
}

TrajectoryStore concatenate(std::span<const Trajectory> trajectories) {
    if (trajectories.empty()) {
        throw std::invalid_argument("concatenate: empty trajectory sequence");
    }
    std::vector<Point> vertices;
    std::vector<Index> boundaries;
    std::vector<Origin> origins;
    for (size_t t = 0; t < trajectories.size(); ++t) {
        const auto& traj = trajectories[t];
        if (traj.vertices.empty()) {
            throw std::invalid_argument("concatenate: trajectory " + std::to_string(t) +
                                        " is empty");
        }
        if (t > 0) boundaries.push_back(static_cast<Index>(vertices.size()));
        for (size_t v = 0; v < traj.vertices.size(); ++v) {
            vertices.push_back(traj.vertices[v]);
            origins.push_back(Origin{static_cast<Index>(t), static_cast<Index>(v + 1)});
        }
    }
    return TrajectoryStore(std::move(vertices), std::move(boundaries), std::move(origins));
}

SubtrajectoryRef make_subtrajectory(const TrajectoryStore& store, Index a, Index b) {
    if (a < 1 || b > store.size() || a > b) {
        throw std::out_of_range("make_subtrajectory: invalid interval [" + std::to_string(a) +
                                ", " + std::to_string(b) + "] for store of size " +
                                std::to_string(store.size()));
    }
    for (Index i = a; i < b; ++i) {
        if (store.boundary_after(i)) {
            throw std::invalid_argument("make_subtrajectory: interval [" + std::to_string(a) +
                                        ", " + std::to_string(b) +
                                        "] crosses the boundary edge after vertex " +
                                        std::to_string(i));
        }
    }
    return SubtrajectoryRef{a, b};
}

TrajectoryStore remove_intervals(const TrajectoryStore& store,
                                 std::vector<SubtrajectoryRef> intervals) {
    std::sort(intervals.begin(), intervals.end());
    for (size_t k = 0; k < intervals.size(); ++k) {
        make_subtrajectory(store, intervals[k].a, intervals[k].b); // validates
        if (k > 0 && intervals[k].a <= intervals[k - 1].b) {
            throw std::invalid_argument("remove_intervals: intervals overlap");
        }
    }

    const Index n = store.size();
    std::vector<std::uint8_t> removed(static_cast<size_t>(n) + 1, 0);
    for (const auto& iv : intervals) {
        for (Index i = iv.a; i <= iv.b; ++i) removed[static_cast<size_t>(i)] = 1;
    }

    std::vector<Point> vertices;
    std::vector<Index> boundaries;
    std::vector<Origin> origins;
    Index prev_old = 0; // old index of the previous survivor
    for (Index i = 1; i <= n; ++i) {
        if (removed[static_cast<size_t>(i)]) continue;
        if (prev_old != 0) {
            // A cut or an old boundary between consecutive survivors splits.
            bool split = (i != prev_old + 1);
            for (Index e = prev_old; !split && e < i; ++e) {
                split = store.boundary_after(e);
            }
            if (split) boundaries.push_back(static_cast<Index>(vertices.size()));
        }
        vertices.push_back(store.point(i));
        origins.push_back(store.origin(i));
        prev_old = i;
    }
    return TrajectoryStore(std::move(vertices), std::move(boundaries), std::move(origins));
}

} // namespace subtraj
