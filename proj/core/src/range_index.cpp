#include "subtraj/range_index.hpp"

#include <stdexcept>

namespace subtraj {

RangeIndex::RangeIndex(const TrajectoryStore& store) : n_(store.size()) {
    if (store.empty()) {
        throw std::invalid_argument("RangeIndex: store is empty");
    }
    nodes_.assign(4 * static_cast<size_t>(n_), Node{});
    build(store, 1, 1, n_);
}

void RangeIndex::build(const TrajectoryStore& store, size_t k, Index lo, Index hi) {
    Node& node = nodes_[k];
    node.lo = lo;
    node.hi = hi;
    if (lo == hi) {
        node.box.expand(store.point(lo));
        return;
    }
    const Index mid = lo + (hi - lo) / 2;
    build(store, 2 * k, lo, mid);
    build(store, 2 * k + 1, mid + 1, hi);
    node.box = nodes_[2 * k].box;
    node.box.expand(nodes_[2 * k + 1].box);
}

std::optional<Index> RangeIndex::prev_free_column(const Point& q, double delta, Index j) const {
    if (j < 1) return std::nullopt;
    if (j > n_) j = n_;
    return descend_prev(1, q, delta * delta, j);
}

std::optional<Index> RangeIndex::descend_prev(size_t k, const Point& q, double d2,
                                              Index j) const {
    const Node& node = nodes_[k];
    if (node.lo > j) return std::nullopt;
    if (node.box.min_dist_sq(q) > d2) return std::nullopt;
    if (node.lo == node.hi) {
        return node.lo; // leaf box is the point itself, so the prune was exact
    }
    if (auto hit = descend_prev(2 * k + 1, q, d2, j)) return hit;
    return descend_prev(2 * k, q, d2, j);
}

std::vector<Index> RangeIndex::enumerate_row_free(const Point& q, double delta) const {
    std::vector<Index> out;
    enumerate_row_free(q, delta, out);
    return out;
}

void RangeIndex::enumerate_row_free(const Point& q, double delta,
                                    std::vector<Index>& out) const {
    out.clear();
    descend_enumerate(1, q, delta * delta, out);
}

void RangeIndex::descend_enumerate(size_t k, const Point& q, double d2,
                                   std::vector<Index>& out) const {
    const Node& node = nodes_[k];
    if (node.box.min_dist_sq(q) > d2) return;
    if (node.lo == node.hi) {
        out.push_back(node.lo); // leaf box is the point itself
        return;
    }
    if (node.box.max_dist_sq(q) <= d2) {
        for (Index i = node.hi; i >= node.lo; --i) out.push_back(i);
        return;
    }
    descend_enumerate(2 * k + 1, q, d2, out);
    descend_enumerate(2 * k, q, d2, out);
}

} // namespace subtraj
