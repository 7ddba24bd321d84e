#include "transfer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace qst {

namespace {

void check_epsilon_pair(double eps1, double eps2) {
    if (!(eps1 > 0.0) || eps1 > 1.0 || !(eps2 > 0.0) || eps2 > 1.0)
        fail(Status::InvalidEpsilon, "epsilons must lie in (0, 1]");
}

struct Plan {
    BipartiteSpec spec;
    CaseKind kind;
    int h1;
    int h2;
    AngleSchedule stage1;
    AngleSchedule stage2;
};

Plan make_plan(const TransferConfig& cfg) {
    BipartiteSpec spec(cfg.m, cfg.n);
    const CaseKind kind = classify_case(spec, cfg.sender, cfg.receiver);
    check_epsilon_pair(cfg.eps1, cfg.eps2);
    const int p = spec.partition_size(cfg.sender);
    const int q = spec.partition_size(cfg.receiver);

    const int h1 = cfg.h1_override.value_or(min_steps(cfg.eps1, p, Parity::Odd));
    if (h1 % 2 == 0) fail(Status::BadParity, "h1 must be odd");
    if (h1 < 3) fail(Status::InvalidConfig, "h1 must be >= 3");

    int h2;
    if (kind == CaseKind::SamePartition) {
        h2 = cfg.h2_override.value_or(min_steps(cfg.eps2, p, Parity::Odd));
        if (h2 % 2 == 0) fail(Status::BadParity, "h2 must be odd for a same-partition transfer");
        if (h2 < 3) fail(Status::InvalidConfig, "h2 must be >= 3");
    } else {
        h2 = cfg.h2_override.value_or(min_steps(cfg.eps2, q, Parity::Even));
        if (h2 % 2 == 1)
            fail(Status::BadParity, "h2 must be even for a different-partition transfer");
        if (h2 < 2) fail(Status::InvalidConfig, "h2 must be >= 2");
    }

    Plan plan{std::move(spec), kind, h1, h2, {}, {}};
    plan.stage1 = stage1_schedule(h1, cfg.eps1, cfg.free_angle);
    plan.stage2 = kind == CaseKind::SamePartition
                      ? stage2_same_schedule(h2, cfg.eps2, cfg.free_angle)
                      : stage2_diff_schedule(h2, cfg.eps2, cfg.pairing, cfg.free_angle);
    return plan;
}

// Decomposes a stage-1 exit state over the ideal intermediate state Psi and
// the sender's incoming-arc vector e2 (Gram matrix [[1, g], [g, 1]] with
// g = 1/sqrt(p)).
OverlapDiagnostics decompose_stage1_exit(const StateVector& psi1, int sender) {
    const BipartiteSpec& spec = psi1.spec;
    const int p = spec.partition_size(sender);
    const StateVector mid = stage1_target_state(spec, sender);
    OverlapDiagnostics diag{{}, {}, 0.0};
    if (p < 2) {
        diag.t1 = inner_product(mid, psi1);
        diag.residual =
            std::sqrt(std::max(0.0, vec_norm_sq(psi1.amplitudes) - std::norm(diag.t1)));
        return diag;
    }
    StateVector e2{spec, std::vector<Complex>(spec.arc_count())};
    const double w = 1.0 / std::sqrt(static_cast<double>(spec.degree(sender)));
    for (int v : spec.neighbors(sender)) e2.amplitudes[spec.arc_index(v, sender)] = w;

    const Complex proj_mid = inner_product(mid, psi1);
    const Complex proj_e2 = inner_product(e2, psi1);
    const double g = 1.0 / std::sqrt(static_cast<double>(p));
    const double det = 1.0 - g * g;
    diag.t1 = (proj_mid - g * proj_e2) / det;
    diag.t2 = (proj_e2 - g * proj_mid) / det;

    double residual_sq = 0.0;
    for (size_t k = 0; k < psi1.amplitudes.size(); ++k) {
        const Complex rest =
            psi1.amplitudes[k] - diag.t1 * mid.amplitudes[k] - diag.t2 * e2.amplitudes[k];
        residual_sq += std::norm(rest);
    }
    diag.residual = std::sqrt(residual_sq);
    return diag;
}

struct BackendNumbers {
    double f1;
    double f2;
    double fid;
    double t2_norm_sq;
    StateVector final_state;
};

BackendNumbers run_full_backend(const Plan& plan, const TransferConfig& cfg) {
    const StateVector mid = stage1_target_state(plan.spec, cfg.sender);
    const StateVector goal = target_state(plan.spec, cfg.receiver);
    const StateVector psi1 = evolve(initial_state(plan.spec, cfg.sender), plan.stage1, cfg.sender);
    StateVector psi2 = evolve(psi1, plan.stage2, cfg.receiver);
    const double f1 = fidelity(psi1, mid);
    const double f2 = fidelity(evolve(mid, plan.stage2, cfg.receiver), goal);
    const double fid = fidelity(psi2, goal);
    const double t2sq = std::norm(decompose_stage1_exit(psi1, cfg.sender).t2);
    return {f1, f2, fid, t2sq, std::move(psi2)};
}

BackendNumbers run_subspace_backend(const Plan& plan, const TransferConfig& cfg) {
    const BipartiteSpec& spec = plan.spec;
    if (plan.kind == CaseKind::SamePartition && spec.partition_size(cfg.sender) < 3)
        return run_full_backend(plan, cfg);

    const ReducedBasis basis = plan.kind == CaseKind::SamePartition
                                   ? combined_same_basis(spec, cfg.sender, cfg.receiver)
                                   : combined_diff_basis(spec, cfg.sender, cfg.receiver);

    const Projection start = project(initial_state(spec, cfg.sender), basis);
    const Projection mid = project(stage1_target_state(spec, cfg.sender), basis);
    const Projection goal = project(target_state(spec, cfg.receiver), basis);
    for (const Projection* pr : {&start, &mid, &goal})
        if (pr->leakage > 1e-10)
            fail(Status::Internal, "anchor state leaks out of the invariant subspace");

    const auto c1 = reduced_evolve(start.coords, plan.stage1, basis, cfg.sender);
    const auto c2 = reduced_evolve(c1, plan.stage2, basis, cfg.receiver);
    const auto ideal2 = reduced_evolve(mid.coords, plan.stage2, basis, cfg.receiver);
    if (std::abs(1.0 - vec_norm_sq(c2)) > 1e-10)
        fail(Status::Internal, "reduced evolution lost norm beyond tolerance");

    const double f1 = std::norm(vdot(mid.coords, c1));
    const double f2 = std::norm(vdot(goal.coords, ideal2));
    const double fid = std::norm(vdot(goal.coords, c2));
    const double t2sq = std::norm(decompose_stage1_exit(lift(c1, basis), cfg.sender).t2);
    return {f1, f2, fid, t2sq, lift(c2, basis)};
}

}  // namespace

CaseKind classify_case(const BipartiteSpec& spec, int sender, int receiver) {
    if (sender < 0 || sender >= spec.vertex_count() || receiver < 0 ||
        receiver >= spec.vertex_count())
        fail(Status::OutOfRange, "endpoint vertex out of range");
    if (sender == receiver) fail(Status::InvalidConfig, "sender and receiver must differ");
    return spec.same_partition(sender, receiver) ? CaseKind::SamePartition
                                                 : CaseKind::DiffPartition;
}

double fidelity_lower_bound(CaseKind kind, double eps1, double eps2) {
    check_epsilon_pair(eps1, eps2);
    const double cross = std::sqrt(eps1 * eps2);
    if (kind == CaseKind::SamePartition)
        return 1.0 - 2.0 * eps1 - eps2 - 2.0 * std::sqrt(2.0) * cross;
    const double c = 2.0 + 2.0 * std::sqrt(2.0);
    return 1.0 - c * eps1 - eps2 - c * cross;
}

FidelityReport run_transfer(const TransferConfig& cfg, StateVector* final_state) {
    const Plan plan = make_plan(cfg);
    FidelityReport rep;
    rep.transfer_case = plan.kind;
    rep.m = cfg.m;
    rep.n = cfg.n;
    rep.sender = cfg.sender;
    rep.receiver = cfg.receiver;
    rep.eps1 = cfg.eps1;
    rep.eps2 = cfg.eps2;
    rep.h1 = plan.h1;
    rep.h2 = plan.h2;

    std::optional<BackendNumbers> full;
    std::optional<BackendNumbers> reduced;
    if (cfg.backend != Backend::Subspace) full = run_full_backend(plan, cfg);
    if (cfg.backend != Backend::FullSpace) reduced = run_subspace_backend(plan, cfg);

    const BackendNumbers& primary = full ? *full : *reduced;
    rep.f1 = primary.f1;
    rep.f2 = primary.f2;
    rep.fidelity = primary.fid;
    rep.t2_norm_sq = primary.t2_norm_sq;
    if (full && reduced)
        rep.backend_disagreement =
            std::max({std::abs(full->f1 - reduced->f1), std::abs(full->f2 - reduced->f2),
                      std::abs(full->fid - reduced->fid)});

    rep.bound = fidelity_lower_bound(plan.kind, cfg.eps1, cfg.eps2);
    rep.bound_satisfied = rep.fidelity > rep.bound - 1e-12;
    if (final_state) *final_state = primary.final_state;
    return rep;
}

OverlapDiagnostics stage1_overlap_diagnostics(const BipartiteSpec& spec, double eps1, int h1,
                                              int sender, double free_angle) {
    if (sender < 0 || sender >= spec.vertex_count())
        fail(Status::OutOfRange, "sender vertex out of range");
    if (spec.partition_size(sender) < 2)
        fail(Status::DegenerateSize, "diagnostics need the sender partition size >= 2");
    const AngleSchedule sched = stage1_schedule(h1, eps1, free_angle);
    const StateVector psi1 = evolve(initial_state(spec, sender), sched, sender);
    return decompose_stage1_exit(psi1, sender);
}

std::string report_csv_header() {
    return "case,m,n,sender,receiver,eps1,eps2,h1,h2,F1,F2,F,bound,pass,backend_disagreement\n";
}

std::string report_to_csv(const FidelityReport& r) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%s,%d,%d,%d,%d,%.17g,%.17g,%d,%d,%.17g,%.17g,%.17g,%.17g,%d,%.17g\n",
                  r.transfer_case == CaseKind::SamePartition ? "same" : "diff", r.m, r.n, r.sender,
                  r.receiver, r.eps1, r.eps2, r.h1, r.h2, r.f1, r.f2, r.fidelity, r.bound,
                  r.bound_satisfied ? 1 : 0, r.backend_disagreement);
    return buf;
}

}  // namespace qst
