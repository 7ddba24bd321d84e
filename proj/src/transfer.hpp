#pragma once

#include <optional>
#include <string>

#include "subspace.hpp"

namespace qst {

enum class Backend { FullSpace, Subspace, Both };
enum class CaseKind { SamePartition, DiffPartition };

struct TransferConfig {
    int m = 0;
    int n = 0;
    int sender = 0;
    int receiver = 1;
    double eps1 = 0.01;
    double eps2 = 0.01;
    Backend backend = Backend::Subspace;
    Pairing pairing = Pairing::TheoremProof;
    double free_angle = 0.0;
    std::optional<int> h1_override;
    std::optional<int> h2_override;
};

struct FidelityReport {
    CaseKind transfer_case = CaseKind::SamePartition;
    int m = 0;
    int n = 0;
    int sender = 0;
    int receiver = 0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    int h1 = 0;
    int h2 = 0;
    double f1 = 0.0;        // overlap^2 of the stage-1 exit with the intermediate target
    double f2 = 0.0;        // stage 2 started from the ideal intermediate state
    double fidelity = 0.0;  // end-to-end, state carried verbatim between stages
    double bound = 0.0;
    bool bound_satisfied = false;
    double t2_norm_sq = 0.0;
    double backend_disagreement = 0.0;
};

CaseKind classify_case(const BipartiteSpec& spec, int sender, int receiver);

// Case-specific closed-form lower bound on the end-to-end fidelity; may be
// negative for large epsilons.
double fidelity_lower_bound(CaseKind kind, double eps1, double eps2);

// Runs both stages per the config. With Backend::Both the report carries the
// full-space numbers and the largest full-vs-subspace discrepancy. A
// non-null final_state receives the post-stage-2 state (reconstructed from
// coordinates when only the subspace backend ran).
FidelityReport run_transfer(const TransferConfig& config, StateVector* final_state = nullptr);

struct OverlapDiagnostics {
    Complex t1;
    Complex t2;
    double residual;  // weight of the stage-1 exit state outside span{Psi, e2}
};

// Decomposes the simulated post-stage-1 state over the ideal intermediate
// state Psi and the sender's incoming-arc vector e2 by solving the 2x2 Gram
// system; |t2|^2 is the quantity bounded by 2*eps1.
OverlapDiagnostics stage1_overlap_diagnostics(const BipartiteSpec& spec, double eps1, int h1,
                                              int sender = 0, double free_angle = 0.0);

std::string report_csv_header();
std::string report_to_csv(const FidelityReport& report);

}  // namespace qst
