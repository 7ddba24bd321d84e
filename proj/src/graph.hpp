#pragma once

#include <utility>
#include <vector>

#include "error.hpp"

namespace qst {

// Complete bipartite graph K_{m,n} with the canonical vertex labeling: left
// partition 0..m-1, right partition m..m+n-1. Directed arcs are grouped by
// source vertex (left sources first), each block ordered by ascending target
// id, so the coin operator acts on contiguous ranges.
class BipartiteSpec {
public:
    BipartiteSpec(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int vertex_count() const noexcept { return m_ + n_; }
    int arc_count() const noexcept { return 2 * m_ * n_; }

    bool is_left(int v) const;
    bool same_partition(int a, int b) const;
    int partition_size(int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Offset of the contiguous block of arcs leaving v; the block has
    // degree(v) entries.
    int block_offset(int v) const;

    int arc_index(int u, int v) const;
    std::pair<int, int> arc_endpoints(int arc) const;

    bool operator==(const BipartiteSpec&) const = default;

private:
    void check_vertex(int v) const;

    int m_;
    int n_;
};

}  // namespace qst
