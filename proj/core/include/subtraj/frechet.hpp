#pragma once

#include "subtraj/geometry.hpp"

#include <span>

namespace subtraj {

/// Exact discrete Fréchet distance between two non-empty point sequences:
/// the minimum over monotone discrete walks from (|P|, |Q|) to (1, 1) of
/// the maximum pairwise distance along the walk. O(|P|·|Q|) time.
double discrete_frechet(std::span<const Point> p, std::span<const Point> q);

/// Decision variant: true iff discrete_frechet(p, q) <= delta. Runs the
/// boolean reachability recurrence on squared distances; no square roots
/// and no epsilon are involved.
bool frechet_leq(std::span<const Point> p, std::span<const Point> q, double delta);

} // namespace subtraj
