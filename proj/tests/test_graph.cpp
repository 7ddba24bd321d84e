#include "doctest.h"
#include "graph.hpp"

#include <set>

using qst::BipartiteSpec;
using qst::Error;
using qst::Status;

TEST_CASE("partition layout and counts") {
    const BipartiteSpec spec(3, 2);
    CHECK(spec.m() == 3);
    CHECK(spec.n() == 2);
    CHECK(spec.vertex_count() == 5);
    CHECK(spec.arc_count() == 12);

    CHECK(spec.is_left(0));
    CHECK(spec.is_left(2));
    CHECK_FALSE(spec.is_left(3));
    CHECK(spec.same_partition(0, 2));
    CHECK(spec.same_partition(3, 4));
    CHECK_FALSE(spec.same_partition(2, 3));

    CHECK(spec.partition_size(1) == 3);
    CHECK(spec.partition_size(4) == 2);
    CHECK(spec.degree(0) == 2);
    CHECK(spec.degree(3) == 3);
}

TEST_CASE("neighbors enumerate the opposite side") {
    const BipartiteSpec spec(3, 2);
    CHECK(spec.neighbors(1) == std::vector<int>{3, 4});
    CHECK(spec.neighbors(4) == std::vector<int>{0, 1, 2});
}

TEST_CASE("arc indexing is a bijection onto 0..2mn-1") {
    const BipartiteSpec spec(3, 2);
    std::set<int> seen;
    for (int u = 0; u < spec.vertex_count(); ++u) {
        for (int v : spec.neighbors(u)) {
            const int arc = spec.arc_index(u, v);
            CHECK(arc >= 0);
            CHECK(arc < spec.arc_count());
            seen.insert(arc);
            const auto [src, dst] = spec.arc_endpoints(arc);
            CHECK(src == u);
            CHECK(dst == v);
        }
    }
    CHECK(int(seen.size()) == spec.arc_count());
}

TEST_CASE("left block precedes right block in arc order") {
    const BipartiteSpec spec(3, 2);
    CHECK(spec.arc_index(0, 3) == 0);
    CHECK(spec.arc_index(0, 4) == 1);
    CHECK(spec.arc_index(2, 4) == 5);
    CHECK(spec.arc_index(3, 0) == 6);
    CHECK(spec.arc_index(4, 2) == 11);
    CHECK(spec.block_offset(0) == 0);
    CHECK(spec.block_offset(1) == 2);
    CHECK(spec.block_offset(3) == 6);
    CHECK(spec.block_offset(4) == 9);
}

TEST_CASE("invalid construction and lookups are rejected") {
    CHECK_THROWS_AS(BipartiteSpec(0, 2), Error);
    CHECK_THROWS_AS(BipartiteSpec(3, -1), Error);

    const BipartiteSpec spec(3, 2);
    CHECK_THROWS_AS(spec.degree(5), Error);
    CHECK_THROWS_AS(spec.arc_index(-1, 3), Error);
    CHECK_THROWS_AS(spec.arc_endpoints(12), Error);
    try {
        (void)spec.arc_index(0, 1);
        FAIL("expected a non-adjacency error");
    } catch (const Error& e) {
        CHECK(e.status() == Status::NonAdjacent);
    }
    try {
        (void)spec.partition_size(9);
        FAIL("expected a range error");
    } catch (const Error& e) {
        CHECK(e.status() == Status::OutOfRange);
    }
}

TEST_CASE("specs compare by shape") {
    CHECK(BipartiteSpec(3, 2) == BipartiteSpec(3, 2));
    CHECK_FALSE(BipartiteSpec(3, 2) == BipartiteSpec(2, 3));
}
