#pragma once

#include <string>
#include <vector>

#include "transfer.hpp"

namespace qst {

enum class SweepCase { Same, Diff, Both };

struct SweepSpec {
    int m_lo = 3;
    int m_hi = 40;
    int n_lo = 1;
    int n_hi = 40;
    double eps1 = 0.01;
    double eps2 = 0.01;
    SweepCase cases = SweepCase::Same;
    Backend backend = Backend::Subspace;
    Pairing pairing = Pairing::TheoremProof;
    double free_angle = 0.0;
    int threads = 0;  // 0 = hardware concurrency; QST_THREADS caps either way
};

struct SweepPoint {
    int m;
    int n;
    double fidelity;
};

// End-to-end fidelity over the (m, n) grid with canonical endpoints
// (same-partition: 0 and 1; different-partition: 0 and m). Grid points run in
// a work pool; results come back in m-major order regardless of thread count.
std::vector<SweepPoint> sweep_grid(const SweepSpec& spec, CaseKind kind);

// Header m,n,F plus one row per grid point, 17 significant digits.
std::string sweep_csv(const std::vector<SweepPoint>& points);

// Writes one CSV file per selected case and returns the written paths. For
// SweepCase::Both the output path sprouts _same/_diff before its extension;
// single-case sweeps write exactly out_path. A failed write removes the
// partial file.
std::vector<std::string> run_sweep(const SweepSpec& spec, const std::string& out_path);

}  // namespace qst
