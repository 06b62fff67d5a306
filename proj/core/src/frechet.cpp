#include "subtraj/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace subtraj {

namespace {

void check_inputs(std::span<const Point> p, std::span<const Point> q) {
    if (p.empty() || q.empty()) {
        throw std::invalid_argument("discrete Fréchet distance requires non-empty sequences");
    }
}

} // namespace

double discrete_frechet(std::span<const Point> p, std::span<const Point> q) {
    check_inputs(p, q);
    const size_t np = p.size();
    const size_t nq = q.size();
    // dp[j] = squared cost of the best walk ending at (i, j); rolling rows.
    std::vector<double> prev(nq), cur(nq);
    for (size_t i = 0; i < np; ++i) {
        for (size_t j = 0; j < nq; ++j) {
            const double d2 = dist_sq(p[i], q[j]);
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else if (i == 0) {
                best = cur[j - 1];
            } else if (j == 0) {
                best = prev[j];
            } else {
                best = std::min({prev[j], cur[j - 1], prev[j - 1]});
            }
            cur[j] = std::max(d2, best);
        }
        std::swap(prev, cur);
    }
    return std::sqrt(prev[nq - 1]);
}

bool frechet_leq(std::span<const Point> p, std::span<const Point> q, double delta) {
    check_inputs(p, q);
    if (delta < 0.0) {
        throw std::invalid_argument("frechet_leq: delta must be non-negative");
    }
    const double d2max = delta * delta;
    const size_t np = p.size();
    const size_t nq = q.size();
    std::vector<std::uint8_t> prev(nq, 0), cur(nq, 0);
    for (size_t i = 0; i < np; ++i) {
        for (size_t j = 0; j < nq; ++j) {
            if (dist_sq(p[i], q[j]) > d2max) {
                cur[j] = 0;
                continue;
            }
            if (i == 0 && j == 0) {
                cur[j] = 1;
            } else if (i == 0) {
                cur[j] = cur[j - 1];
            } else if (j == 0) {
                cur[j] = prev[j];
            } else {
                cur[j] = prev[j] | cur[j - 1] | prev[j - 1];
            }
        }
        std::swap(prev, cur);
    }
    return prev[nq - 1] != 0;
}

} // namespace subtraj
