#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "sweep.hpp"
#include "transfer.hpp"

namespace qst {

namespace {

constexpr uint64_t kSeed = 0x9e3779b97f4a7c15ULL;

StateVector random_state(const BipartiteSpec& spec, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    StateVector s{spec, std::vector<Complex>(spec.arc_count())};
    for (Complex& c : s.amplitudes) c = Complex(dist(rng), dist(rng));
    const double norm = state_norm(s);
    for (Complex& c : s.amplitudes) c /= norm;
    return s;
}

double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.amplitudes.size(); ++i)
        worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    return worst;
}

std::string format_detail(const char* fmt, double v) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

SuiteResult suite_unitarity() {
    SuiteResult r{"unitarity", 0.0, 1e-12, false, ""};
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const BipartiteSpec spec(5, 4);
    for (int i = 0; i < 100; ++i) {
        const StateVector psi = random_state(spec, rng);
        const double alpha = angle(rng);
        const double beta = angle(rng);
        const int marked = i % spec.vertex_count();
        r.max_residual = std::max(r.max_residual, max_amp_diff(apply_shift(apply_shift(psi)), psi));
        r.max_residual = std::max(
            r.max_residual, max_amp_diff(apply_oracle(apply_oracle(psi, beta, marked), -beta, marked), psi));
        r.max_residual =
            std::max(r.max_residual, max_amp_diff(apply_coin(apply_coin(psi, alpha), -alpha), psi));
        for (const StateVector& out :
             {apply_shift(psi), apply_coin(psi, alpha), apply_oracle(psi, beta, marked),
              step(psi, alpha, beta, marked)})
            r.max_residual = std::max(r.max_residual, std::abs(state_norm(out) - 1.0));
    }

    // alpha = pi is the plain Grover coin: on a degree-2 block it swaps the
    // two amplitudes; the uniform block vector is always an eigenvector with
    // eigenvalue -e^{-i alpha}.
    const BipartiteSpec k22(2, 2);
    StateVector basis_arc{k22, std::vector<Complex>(k22.arc_count())};
    basis_arc.amplitudes[k22.arc_index(0, 2)] = 1.0;
    const StateVector swapped = apply_coin(basis_arc, std::numbers::pi);
    r.max_residual =
        std::max(r.max_residual, std::abs(swapped.amplitudes[k22.arc_index(0, 3)] - 1.0));
    r.max_residual = std::max(r.max_residual, std::abs(swapped.amplitudes[k22.arc_index(0, 2)]));

    const double alpha = 0.83;
    const StateVector uniform = initial_state(spec, 2);
    const StateVector spun = apply_coin(uniform, alpha);
    const Complex eigen = -std::polar(1.0, -alpha);
    double eig_resid = 0.0;
    for (size_t i = 0; i < uniform.amplitudes.size(); ++i)
        eig_resid = std::max(eig_resid,
                             std::abs(spun.amplitudes[i] - eigen * uniform.amplitudes[i]));
    r.max_residual = std::max(r.max_residual, eig_resid);

    r.pass = r.max_residual < r.tolerance;
    r.detail = "S^2, C/Q inverses, norms, Grover coin specialization";
    return r;
}

SuiteResult suite_norm_drift(VerifyLevel level) {
    SuiteResult r{"norm-drift", 0.0, 1e-9, false, ""};
    std::mt19937_64 rng(kSeed ^ 0x77);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const BipartiteSpec spec(6, 5);
    StateVector psi = random_state(spec, rng);
    const int steps = level == VerifyLevel::Full ? 5000 : 1000;
    for (int t = 0; t < steps; ++t)
        psi = step(psi, angle(rng), angle(rng), t % spec.vertex_count());
    r.max_residual = std::abs(state_norm(psi) - 1.0);
    r.pass = r.max_residual < r.tolerance;
    r.detail = format_detail("norm drift after composed steps: %.3g", r.max_residual);
    return r;
}

double gram_residual(const ReducedBasis& basis) {
    double worst = 0.0;
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = 0; j < basis.dim(); ++j) {
            const Complex g = inner_product(basis.vectors[i], basis.vectors[j]);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

std::vector<std::pair<ReducedBasis, int>> sample_bases() {
    std::vector<std::pair<ReducedBasis, int>> out;
    const BipartiteSpec a(5, 4), b(2, 2), c(3, 1), d(3, 7);
    out.emplace_back(stage1_basis(a, 0), 0);
    out.emplace_back(stage1_basis(b, 1), 1);
    out.emplace_back(stage1_basis(d, 7), 7);  // sender on the right side
    out.emplace_back(stage2_same_basis(a, 1), 1);
    out.emplace_back(stage2_diff_basis(a, 5), 5);
    out.emplace_back(stage2_diff_basis(b, 2), 2);
    out.emplace_back(combined_same_basis(a, 0, 1), 0);
    out.emplace_back(combined_same_basis(c, 0, 1), 1);
    out.emplace_back(combined_diff_basis(a, 0, 5), 0);
    out.emplace_back(combined_diff_basis(b, 0, 2), 2);
    return out;
}

SuiteResult suite_basis_orthonormality() {
    SuiteResult r{"basis-orthonormality", 0.0, 1e-12, false, ""};
    for (const auto& [basis, marked] : sample_bases())
        r.max_residual = std::max(r.max_residual, gram_residual(basis));
    r.pass = r.max_residual < r.tolerance;
    r.detail = "Gram residual over stage and combined bases";
    return r;
}

SuiteResult suite_subspace_closure() {
    SuiteResult r{"subspace-closure", 0.0, 1e-10, false, ""};
    for (const auto& [basis, marked] : sample_bases()) {
        for (const StateVector& e : basis.vectors) {
            const StateVector stepped = step(e, 0.83, -0.41, marked);
            r.max_residual = std::max(r.max_residual, project(stepped, basis).leakage);
        }
    }
    r.pass = r.max_residual < r.tolerance;
    r.detail = "one-step leakage outside each invariant basis";
    return r;
}

SuiteResult suite_decompositions(VerifyLevel level) {
    SuiteResult r{"decompositions", 0.0, 1e-12, false, ""};
    const int draws = level == VerifyLevel::Full ? 300 : 100;
    std::mt19937_64 rng(kSeed ^ 0xabc);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int p : {2, 4, 9}) {
        const BipartiteSpec spec(p, 3);
        const double omega = mixing_angle(BasisKind::Stage1, spec);
        for (int i = 0; i < 4; ++i) {
            const double alpha = i == 0 ? std::numbers::pi : angle(rng);
            const double beta = i == 0 ? std::numbers::pi : angle(rng);
            const DecompositionReport rep =
                verify_decompositions(alpha, beta, omega, draws, kSeed + i);
            r.max_residual = std::max(r.max_residual, rep.max_residual());
        }
    }
    r.pass = r.max_residual < r.tolerance;
    r.detail = "coin/oracle factorizations and shift braiding";
    return r;
}

SuiteResult suite_schedule_values() {
    SuiteResult r{"schedule-values", 0.0, 1e-9, false, ""};
    auto track = [&r](double resid) { r.max_residual = std::max(r.max_residual, resid); };
    bool structure_ok = true;

    structure_ok &= min_steps(0.01, 100, Parity::Odd) == 31;
    structure_ok &= min_steps(1.0, 1, Parity::Odd) == 3;
    structure_ok &= min_steps(0.01, 100, Parity::Even) == 30;
    for (double eps : {1.0, 0.25, 0.04, 0.01})
        for (int d : {1, 2, 10, 100, 400}) {
            const double threshold = std::log(2.0 / std::sqrt(eps)) * std::sqrt(double(d));
            for (Parity parity : {Parity::Odd, Parity::Even}) {
                const int h = min_steps(eps, d, parity);
                structure_ok &= h % 2 == (parity == Parity::Odd ? 1 : 0);
                structure_ok &= h >= threshold || h <= 3;
                structure_ok &= h - 2 < threshold || h <= (parity == Parity::Odd ? 3 : 2);
            }
        }

    for (int h = 3; h <= 41; h += 2)
        for (double eps : {1.0, 0.25, 0.04, 0.01})
            track(std::abs(chebyshev(h, 1.0 / gamma_for(h, eps)) * std::sqrt(eps) - 1.0));

    // closed-form evaluation against the raw three-term recurrence
    for (double x = -2.0; x <= 2.0; x += 0.19) {
        double prev = 1.0, cur = x;
        track(std::abs(chebyshev(0, x) - prev));
        track(std::abs(chebyshev(1, x) - cur));
        for (int k = 2; k <= 30; ++k) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
            track(std::abs(chebyshev(k, x) - cur) / std::max(1.0, std::abs(cur)));
        }
    }

    // degenerate epsilon = 1 schedules pin the lone constrained angle at pi
    const AngleSchedule s1 = stage1_schedule(3, 1.0);
    track(std::abs(s1.betas[2] + std::numbers::pi));
    track(std::abs(s1.alphas[1] - std::numbers::pi));
    const AngleSchedule s2 = stage2_same_schedule(3, 1.0);
    track(std::abs(s2.alphas[2] - std::numbers::pi));
    track(std::abs(s2.betas[1] + std::numbers::pi));
    const AngleSchedule s3 = stage2_diff_schedule(2, 1.0, Pairing::TheoremProof);
    track(std::abs(s3.alphas[1] - std::numbers::pi));
    track(std::abs(s3.betas[0] + std::numbers::pi));
    const AngleSchedule s4 = stage2_diff_schedule(2, 1.0, Pairing::AlgorithmBox);
    track(std::abs(s4.alphas[1] - std::numbers::pi));
    track(std::abs(s4.betas[1] + std::numbers::pi));

    // index pairing: stage 1 ties beta_k to alpha_{h+2-k}, stage 2 mirrors it
    const AngleSchedule p1 = stage1_schedule(5, 0.25);
    track(std::abs(p1.betas[2] + p1.alphas[3]));
    track(std::abs(p1.betas[4] + p1.alphas[1]));
    const AngleSchedule p2 = stage2_same_schedule(5, 0.25);
    for (int k : {2, 4}) track(std::abs(p2.alphas[k] + p1.betas[k]));

    r.pass = structure_ok && r.max_residual < r.tolerance;
    r.detail = structure_ok ? "step counts, gamma identity, recurrence, pinned angles"
                            : "step-count structure violated";
    return r;
}

SuiteResult suite_phased_recurrence() {
    SuiteResult r{"phased-recurrence", 0.0, 1e-9, false, ""};
    for (int h : {3, 5, 7, 9}) {
        for (double eps : {1.0, 0.25, 0.04}) {
            const double gamma = gamma_for(h, eps);
            const std::vector<double> deltas = chebyshev_phase_deltas(h, gamma);
            for (int i = 0; i < 20; ++i) {
                const double x = static_cast<double>(i) / 19.0;
                const double lhs = std::abs(quasi_chebyshev(x, deltas));
                const double rhs =
                    std::abs(chebyshev(h, x / gamma) / chebyshev(h, 1.0 / gamma));
                r.max_residual = std::max(r.max_residual, std::abs(lhs - rhs));
            }
        }
    }
    r.pass = r.max_residual < r.tolerance;
    r.detail = "|a_h(x)| against the Chebyshev ratio";
    return r;
}

double simulate_stage1(int m, int n, double eps, int h1, double free_angle = 0.0) {
    const BipartiteSpec spec(m, n);
    const AngleSchedule sched = stage1_schedule(h1, eps, free_angle);
    const StateVector psi1 = evolve(initial_state(spec, 0), sched, 0);
    return fidelity(psi1, stage1_target_state(spec, 0));
}

SuiteResult suite_stage1_fidelity(VerifyLevel level) {
    SuiteResult r{"stage1-fidelity", 0.0, 1e-9, false, ""};
    bool bounds_ok = true;
    for (double eps : {0.25, 0.04, 0.01}) {
        for (int m : {3, 10, 100}) {
            const int h1 = min_steps(eps, m, Parity::Odd);
            const double f1 = simulate_stage1(m, 2, eps, h1);
            const double closed = predicted_stage_fidelity(h1, eps, m, Stage::Stage1);
            r.max_residual = std::max(r.max_residual, std::abs(f1 - closed));
            bounds_ok &= f1 >= 1.0 - eps - 1e-12;
            if (level == VerifyLevel::Full) {
                // raising h above the minimum (same parity) must not break the bound
                for (int extra : {2, 4}) {
                    const double more = simulate_stage1(m, 2, eps, h1 + 2 * extra / 2);
                    bounds_ok &= more >= 1.0 - eps - 1e-12;
                }
            }
        }
    }
    r.pass = bounds_ok && r.max_residual < r.tolerance;
    r.detail = bounds_ok ? "simulated F1 vs closed form and 1-eps floor"
                         : "F1 fell below 1-eps";
    return r;
}

SuiteResult suite_stage2_fidelity() {
    SuiteResult r{"stage2-fidelity", 0.0, 1e-9, false, ""};
    bool bounds_ok = true;
    for (double eps : {0.25, 0.04, 0.01}) {
        for (int p : {3, 10, 100}) {
            const BipartiteSpec spec(p, 2);
            const int h2 = min_steps(eps, p, Parity::Odd);
            const AngleSchedule sched = stage2_same_schedule(h2, eps);
            const StateVector out = evolve(stage1_target_state(spec, 0), sched, 1);
            const double f2 = fidelity(out, target_state(spec, 1));
            const double closed = predicted_stage_fidelity(h2, eps, p, Stage::Stage2Same);
            r.max_residual = std::max(r.max_residual, std::abs(f2 - closed));
            bounds_ok &= f2 >= 1.0 - eps - 1e-12;
        }
    }

    double box_worst = 0.0;
    for (double eps : {0.25, 0.04, 0.01}) {
        for (int q : {3, 10, 100}) {
            const BipartiteSpec spec(2, q);
            const int h2 = min_steps(eps, q, Parity::Even);
            const double closed = predicted_stage_fidelity(h2, eps, q, Stage::Stage2Diff);
            const StateVector start = stage1_target_state(spec, 0);
            const StateVector goal = target_state(spec, 2);
            const double f2_theorem = fidelity(
                evolve(start, stage2_diff_schedule(h2, eps, Pairing::TheoremProof), 2), goal);
            const double f2_box = fidelity(
                evolve(start, stage2_diff_schedule(h2, eps, Pairing::AlgorithmBox), 2), goal);
            r.max_residual = std::max(r.max_residual, std::abs(f2_theorem - closed));
            bounds_ok &= f2_theorem >= 1.0 - eps - 1e-12;
            box_worst = std::max(box_worst, std::abs(f2_box - closed));
        }
    }
    r.pass = bounds_ok && r.max_residual < r.tolerance;
    r.detail = format_detail(
        "theorem pairing matches the closed form; box pairing deviates up to %.3g", box_worst);
    return r;
}

SuiteResult suite_backend_agreement(VerifyLevel level) {
    SuiteResult r{"backend-agreement", 0.0, 1e-10, false, ""};
    auto check = [&r](int m, int n, CaseKind kind) {
        TransferConfig cfg;
        cfg.m = m;
        cfg.n = n;
        cfg.sender = 0;
        cfg.receiver = kind == CaseKind::SamePartition ? 1 : m;
        cfg.eps1 = cfg.eps2 = 0.04;
        cfg.backend = Backend::Both;
        r.max_residual = std::max(r.max_residual, run_transfer(cfg).backend_disagreement);
    };
    if (level == VerifyLevel::Full) {
        for (int m = 2; m <= 8; ++m)
            for (int n = 2; n <= 8; ++n) {
                check(m, n, CaseKind::SamePartition);
                check(m, n, CaseKind::DiffPartition);
            }
    } else {
        for (auto [m, n] : {std::pair{3, 2}, {5, 4}, {2, 2}, {8, 8}, {2, 7}}) {
            check(m, n, CaseKind::SamePartition);
            check(m, n, CaseKind::DiffPartition);
        }
    }
    r.pass = r.max_residual < r.tolerance;
    r.detail = level == VerifyLevel::Full ? "exhaustive 2..8 full-vs-subspace scan"
                                          : "sampled full-vs-subspace scan";
    return r;
}

SuiteResult suite_transfer_bounds(VerifyLevel level) {
    SuiteResult r{"transfer-bounds", 0.0, 1e-15, false, ""};
    double best_same = 0.0;
    double best_diff = 0.0;
    auto margin = [&r](const FidelityReport& rep) {
        r.max_residual = std::max(r.max_residual, std::max(0.0, rep.bound - 1e-12 - rep.fidelity));
    };

    SweepSpec spec;
    spec.eps1 = spec.eps2 = 0.01;
    if (level == VerifyLevel::Full) {
        spec.m_lo = 3;
        spec.m_hi = 40;
        spec.n_lo = 1;
        spec.n_hi = 40;
    } else {
        spec.m_lo = 3;
        spec.m_hi = 28;
        spec.n_lo = 1;
        spec.n_hi = 8;
    }
    const double same_bound = fidelity_lower_bound(CaseKind::SamePartition, 0.01, 0.01);
    for (const SweepPoint& p : sweep_grid(spec, CaseKind::SamePartition)) {
        r.max_residual = std::max(r.max_residual, std::max(0.0, same_bound - 1e-12 - p.fidelity));
        best_same = std::max(best_same, p.fidelity);
    }

    spec.m_lo = 2;
    spec.n_lo = 2;
    if (level != VerifyLevel::Full) {
        spec.m_hi = 28;
        spec.n_hi = 8;
    }
    const double diff_bound = fidelity_lower_bound(CaseKind::DiffPartition, 0.01, 0.01);
    for (const SweepPoint& p : sweep_grid(spec, CaseKind::DiffPartition)) {
        r.max_residual = std::max(r.max_residual, std::max(0.0, diff_bound - 1e-12 - p.fidelity));
        best_diff = std::max(best_diff, p.fidelity);
    }

    // epsilon grid beyond the headline 0.01 point
    const std::vector<double> eps_list = {0.25, 0.04, 0.01};
    for (double e1 : eps_list)
        for (double e2 : eps_list)
            for (int m : {3, 12, 40})
                for (int n : {2, 9, 40}) {
                    TransferConfig cfg;
                    cfg.m = m;
                    cfg.n = n;
                    cfg.eps1 = e1;
                    cfg.eps2 = e2;
                    cfg.sender = 0;
                    cfg.receiver = 1;
                    margin(run_transfer(cfg));
                    cfg.receiver = m;
                    margin(run_transfer(cfg));
                }

    const bool peak_ok = best_same >= 0.98 && best_diff >= 0.98;
    r.pass = r.max_residual == 0.0 && peak_ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "best same F = %.6f, best diff F = %.6f, worst margin %.3g",
                  best_same, best_diff, r.max_residual);
    r.detail = buf;
    return r;
}

SuiteResult suite_overlap_diagnostics(VerifyLevel level) {
    SuiteResult r{"overlap-diagnostics", 0.0, 1e-9, false, ""};
    bool bound_ok = true;
    const int m_step = level == VerifyLevel::Full ? 1 : 4;
    for (double eps : {0.25, 0.01}) {
        for (int m = 3; m <= 20; m += m_step) {
            const BipartiteSpec spec(m, 4);
            const int h1 = min_steps(eps, m, Parity::Odd);
            const OverlapDiagnostics diag = stage1_overlap_diagnostics(spec, eps, h1);
            bound_ok &= std::norm(diag.t2) <= 2.0 * eps + 1e-9;
            r.max_residual = std::max(r.max_residual, diag.residual);

            // recurrence route: |t2|^2 = (m/(m-1)) * b_h^2 with b_h the
            // terminal phased-recurrence value at x = sqrt(1-1/m)
            const double gamma = gamma_for(h1, eps);
            const double x = std::sqrt(1.0 - 1.0 / m);
            const double b =
                chebyshev(h1, x / gamma) / chebyshev(h1, 1.0 / gamma);
            const double predicted = m / (m - 1.0) * b * b;
            r.max_residual =
                std::max(r.max_residual, std::abs(std::norm(diag.t2) - predicted));
        }
    }
    r.pass = bound_ok && r.max_residual < r.tolerance;
    r.detail = bound_ok ? "|t2|^2 within 2*eps1; projection matches recurrence"
                        : "|t2|^2 exceeded 2*eps1";
    return r;
}

}  // namespace

std::vector<SuiteResult> run_verification(VerifyLevel level) {
    std::vector<SuiteResult> out;
    out.push_back(suite_unitarity());
    out.push_back(suite_norm_drift(level));
    out.push_back(suite_basis_orthonormality());
    out.push_back(suite_subspace_closure());
    out.push_back(suite_decompositions(level));
    out.push_back(suite_schedule_values());
    out.push_back(suite_phased_recurrence());
    out.push_back(suite_stage1_fidelity(level));
    out.push_back(suite_stage2_fidelity());
    out.push_back(suite_backend_agreement(level));
    out.push_back(suite_transfer_bounds(level));
    out.push_back(suite_overlap_diagnostics(level));
    return out;
}

size_t verification_suite_count() { return 12; }

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace qst
