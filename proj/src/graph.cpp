#include "graph.hpp"

#include <string>

namespace qst {

BipartiteSpec::BipartiteSpec(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1)
        fail(Status::InvalidArgument,
             "partition sizes must be positive, got m=" + std::to_string(m) +
                 " n=" + std::to_string(n));
}

void BipartiteSpec::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        fail(Status::OutOfRange, "vertex id " + std::to_string(v) + " outside 0.." +
                                     std::to_string(vertex_count() - 1));
}

bool BipartiteSpec::is_left(int v) const {
    check_vertex(v);
    return v < m_;
}

bool BipartiteSpec::same_partition(int a, int b) const { return is_left(a) == is_left(b); }

int BipartiteSpec::partition_size(int v) const { return is_left(v) ? m_ : n_; }

int BipartiteSpec::degree(int v) const { return is_left(v) ? n_ : m_; }

std::vector<int> BipartiteSpec::neighbors(int v) const {
    std::vector<int> out;
    if (is_left(v)) {
        out.reserve(n_);
        for (int w = m_; w < m_ + n_; ++w) out.push_back(w);
    } else {
        out.reserve(m_);
        for (int w = 0; w < m_; ++w) out.push_back(w);
    }
    return out;
}

int BipartiteSpec::block_offset(int v) const {
    return is_left(v) ? v * n_ : m_ * n_ + (v - m_) * m_;
}

int BipartiteSpec::arc_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (is_left(u) == is_left(v))
        fail(Status::NonAdjacent, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                      " lie in the same partition");
    return is_left(u) ? u * n_ + (v - m_) : m_ * n_ + (u - m_) * m_ + v;
}

std::pair<int, int> BipartiteSpec::arc_endpoints(int arc) const {
    if (arc < 0 || arc >= arc_count())
        fail(Status::OutOfRange, "arc index " + std::to_string(arc) + " outside 0.." +
                                     std::to_string(arc_count() - 1));
    if (arc < m_ * n_) return {arc / n_, m_ + arc % n_};
    const int rest = arc - m_ * n_;
    return {m_ + rest / m_, rest % m_};
}

}  // namespace qst
