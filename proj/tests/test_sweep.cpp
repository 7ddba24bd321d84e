#include "doctest.h"
#include "sweep.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "transfer.hpp"

using namespace qst;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "qst_sweep_test";
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("grids enumerate m-major with canonical endpoints") {
    SweepSpec spec;
    spec.m_lo = 3;
    spec.m_hi = 4;
    spec.n_lo = 1;
    spec.n_hi = 2;
    spec.eps1 = spec.eps2 = 0.04;

    const std::vector<SweepPoint> same = sweep_grid(spec, CaseKind::SamePartition);
    REQUIRE(same.size() == 4);
    CHECK(same[0].m == 3);
    CHECK(same[0].n == 1);
    CHECK(same[1].m == 3);
    CHECK(same[1].n == 2);
    CHECK(same[2].m == 4);
    CHECK(same[3].n == 2);

    // each point reproduces a directly configured run between vertices 0 and 1
    TransferConfig cfg;
    cfg.m = 3;
    cfg.n = 2;
    cfg.sender = 0;
    cfg.receiver = 1;
    cfg.eps1 = cfg.eps2 = 0.04;
    CHECK(same[1].fidelity == doctest::Approx(run_transfer(cfg).fidelity).epsilon(1e-12));

    spec.n_lo = 2;
    const std::vector<SweepPoint> diff = sweep_grid(spec, CaseKind::DiffPartition);
    REQUIRE(diff.size() == 2);
    cfg.receiver = 3;  // first right-side vertex
    CHECK(diff[0].fidelity == doctest::Approx(run_transfer(cfg).fidelity).epsilon(1e-12));
}

TEST_CASE("grid limits are validated") {
    SweepSpec spec;
    spec.m_lo = 5;
    spec.m_hi = 4;
    CHECK_THROWS_AS(sweep_grid(spec, CaseKind::SamePartition), Error);
    spec.m_lo = 1;
    spec.m_hi = 4;
    CHECK_THROWS_AS(sweep_grid(spec, CaseKind::SamePartition), Error);
    spec.m_lo = 2;
    spec.n_lo = 1;
    CHECK_THROWS_AS(sweep_grid(spec, CaseKind::DiffPartition), Error);
    spec.n_lo = 0;
    CHECK_THROWS_AS(sweep_grid(spec, CaseKind::SamePartition), Error);
}

TEST_CASE("sweep output is stable csv") {
    SweepSpec spec;
    spec.m_lo = 3;
    spec.m_hi = 4;
    spec.n_lo = 2;
    spec.n_hi = 3;
    spec.eps1 = spec.eps2 = 0.04;

    const std::string csv = sweep_csv(sweep_grid(spec, CaseKind::SamePartition));
    CHECK(csv.substr(0, 6) == "m,n,F\n");
    CHECK(csv == sweep_csv(sweep_grid(spec, CaseKind::SamePartition)));
    size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 5);  // header plus four points
}

TEST_CASE("run_sweep writes the requested files") {
    TempDir tmp;
    SweepSpec spec;
    spec.m_lo = 3;
    spec.m_hi = 4;
    spec.n_lo = 2;
    spec.n_hi = 2;
    spec.eps1 = spec.eps2 = 0.04;

    spec.cases = SweepCase::Same;
    const auto same_paths = run_sweep(spec, tmp.file("grid.csv"));
    REQUIRE(same_paths.size() == 1);
    CHECK(slurp(same_paths[0]).substr(0, 6) == "m,n,F\n");

    spec.cases = SweepCase::Both;
    const auto both_paths = run_sweep(spec, tmp.file("grid.csv"));
    REQUIRE(both_paths.size() == 2);
    CHECK(both_paths[0].find("grid_same.csv") != std::string::npos);
    CHECK(both_paths[1].find("grid_diff.csv") != std::string::npos);
    CHECK(slurp(both_paths[0]) != slurp(both_paths[1]));

    spec.cases = SweepCase::Diff;
    CHECK_THROWS_AS(run_sweep(spec, tmp.file("missing_dir/grid.csv")), Error);
}

TEST_CASE("thread count does not change the result") {
    SweepSpec spec;
    spec.m_lo = 3;
    spec.m_hi = 6;
    spec.n_lo = 1;
    spec.n_hi = 4;
    spec.eps1 = spec.eps2 = 0.04;

    spec.threads = 1;
    const std::string serial = sweep_csv(sweep_grid(spec, CaseKind::SamePartition));
    spec.threads = 4;
    const std::string parallel = sweep_csv(sweep_grid(spec, CaseKind::SamePartition));
    CHECK(serial == parallel);
}
