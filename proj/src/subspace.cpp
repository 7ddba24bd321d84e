#include "subspace.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qst {

namespace {

StateVector zero_state(const BipartiteSpec& spec) {
    return {spec, std::vector<Complex>(spec.arc_count())};
}

void set_block(StateVector& s, int vertex, double amp) {
    const int off = s.spec.block_offset(vertex);
    const int deg = s.spec.degree(vertex);
    for (int k = 0; k < deg; ++k) s.amplitudes[off + k] = amp;
}

void set_incoming(StateVector& s, int vertex, double amp) {
    for (int w : s.spec.neighbors(vertex)) s.amplitudes[s.spec.arc_index(w, vertex)] = amp;
}

void check_vertex_in_range(const BipartiteSpec& spec, int v, const char* role) {
    if (v < 0 || v >= spec.vertex_count())
        fail(Status::OutOfRange, std::string(role) + " vertex out of range");
}

// e1: uniform over arcs leaving the focus, e2: entering it, e3: entering its
// partition peers, e4: leaving the peers.
std::vector<StateVector> stage_vectors(const BipartiteSpec& spec, int focus) {
    const int p = spec.partition_size(focus);
    const int d = spec.degree(focus);
    std::vector<StateVector> e(4, zero_state(spec));
    const double w1 = 1.0 / std::sqrt(static_cast<double>(d));
    set_block(e[0], focus, w1);
    set_incoming(e[1], focus, w1);
    const double w2 = 1.0 / std::sqrt(static_cast<double>(d) * (p - 1));
    const bool left = spec.is_left(focus);
    const int base = left ? 0 : spec.m();
    for (int i = 0; i < p; ++i) {
        const int u = base + i;
        if (u == focus) continue;
        set_incoming(e[2], u, w2);
        set_block(e[3], u, w2);
    }
    return e;
}

ReducedBasis make_stage_basis(BasisKind kind, const BipartiteSpec& spec, int focus,
                              const char* role) {
    check_vertex_in_range(spec, focus, role);
    if (spec.partition_size(focus) < 2)
        fail(Status::DegenerateSize,
             std::string("stage basis needs the ") + role + " partition size >= 2");
    ReducedBasis b{kind, spec, -1, -1, stage_vectors(spec, focus)};
    if (kind == BasisKind::Stage1)
        b.sender = focus;
    else
        b.receiver = focus;
    return b;
}

CMat reduced_shift_matrix() {
    CMat s(4, 4);
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    s(2, 3) = 1.0;
    s(3, 2) = 1.0;
    return s;
}

CMat reduced_oracle_matrix(double beta) {
    CMat q = CMat::identity(4);
    q(0, 0) = std::polar(1.0, beta);
    return q;
}

CMat reduced_coin_matrix(double alpha, double omega) {
    const Complex f = 1.0 - std::polar(1.0, -alpha);
    const double cw = std::cos(omega);
    const double sw = std::sin(omega);
    CMat c(4, 4);
    c(0, 0) = -std::polar(1.0, -alpha);
    c(3, 3) = c(0, 0);
    c(1, 1) = f * (1.0 - cw) / 2.0 - 1.0;
    c(1, 2) = f * sw / 2.0;
    c(2, 1) = c(1, 2);
    c(2, 2) = f * (1.0 + cw) / 2.0 - 1.0;
    return c;
}

bool is_stage_kind(BasisKind kind) {
    return kind == BasisKind::Stage1 || kind == BasisKind::Stage2Same ||
           kind == BasisKind::Stage2Diff;
}

}  // namespace

int ReducedBasis::focus() const {
    switch (kind) {
        case BasisKind::Stage1: return sender;
        case BasisKind::Stage2Same:
        case BasisKind::Stage2Diff: return receiver;
        default: break;
    }
    fail(Status::UnsupportedBasis, "combined bases have no single focus vertex");
}

ReducedBasis stage1_basis(const BipartiteSpec& spec, int sender) {
    return make_stage_basis(BasisKind::Stage1, spec, sender, "sender");
}

ReducedBasis stage2_same_basis(const BipartiteSpec& spec, int receiver) {
    return make_stage_basis(BasisKind::Stage2Same, spec, receiver, "receiver");
}

ReducedBasis stage2_diff_basis(const BipartiteSpec& spec, int receiver) {
    return make_stage_basis(BasisKind::Stage2Diff, spec, receiver, "receiver");
}

ReducedBasis combined_same_basis(const BipartiteSpec& spec, int sender, int receiver) {
    check_vertex_in_range(spec, sender, "sender");
    check_vertex_in_range(spec, receiver, "receiver");
    if (sender == receiver) fail(Status::InvalidConfig, "sender and receiver must differ");
    if (!spec.same_partition(sender, receiver))
        fail(Status::InvalidConfig, "combined same-partition basis needs both endpoints on one side");
    const int p = spec.partition_size(sender);
    if (p < 3)
        fail(Status::DegenerateSize,
             "combined same-partition basis needs partition size >= 3 (p=2 runs use the full-space backend)");
    const int d = spec.degree(sender);
    std::vector<StateVector> e(6, zero_state(spec));
    const double w1 = 1.0 / std::sqrt(static_cast<double>(d));
    set_block(e[0], sender, w1);
    set_incoming(e[1], sender, w1);
    set_block(e[2], receiver, w1);
    set_incoming(e[3], receiver, w1);
    const double w2 = 1.0 / std::sqrt(static_cast<double>(d) * (p - 2));
    const int base = spec.is_left(sender) ? 0 : spec.m();
    for (int i = 0; i < p; ++i) {
        const int u = base + i;
        if (u == sender || u == receiver) continue;
        set_block(e[4], u, w2);
        set_incoming(e[5], u, w2);
    }
    return {BasisKind::CombinedSame, spec, sender, receiver, std::move(e)};
}

ReducedBasis combined_diff_basis(const BipartiteSpec& spec, int sender, int receiver) {
    check_vertex_in_range(spec, sender, "sender");
    check_vertex_in_range(spec, receiver, "receiver");
    if (spec.same_partition(sender, receiver))
        fail(Status::InvalidConfig,
             "combined different-partition basis needs endpoints on opposite sides");
    const int p = spec.partition_size(sender);
    const int q = spec.partition_size(receiver);
    if (p < 2 || q < 2)
        fail(Status::DegenerateSize,
             "combined different-partition basis needs both partition sizes >= 2");
    std::vector<StateVector> e(8, zero_state(spec));
    e[0].amplitudes[spec.arc_index(sender, receiver)] = 1.0;
    e[1].amplitudes[spec.arc_index(receiver, sender)] = 1.0;
    const double wq = 1.0 / std::sqrt(static_cast<double>(q - 1));
    const double wp = 1.0 / std::sqrt(static_cast<double>(p - 1));
    const double wpq = wp * wq;
    for (int v : spec.neighbors(sender)) {
        if (v == receiver) continue;
        e[2].amplitudes[spec.arc_index(sender, v)] = wq;
        e[3].amplitudes[spec.arc_index(v, sender)] = wq;
    }
    for (int u : spec.neighbors(receiver)) {
        if (u == sender) continue;
        e[4].amplitudes[spec.arc_index(u, receiver)] = wp;
        e[5].amplitudes[spec.arc_index(receiver, u)] = wp;
        for (int v : spec.neighbors(sender)) {
            if (v == receiver) continue;
            e[6].amplitudes[spec.arc_index(u, v)] = wpq;
            e[7].amplitudes[spec.arc_index(v, u)] = wpq;
        }
    }
    return {BasisKind::CombinedDiff, spec, sender, receiver, std::move(e)};
}

double mixing_angle(BasisKind kind, const BipartiteSpec& spec) {
    if (!is_stage_kind(kind))
        fail(Status::UnsupportedBasis, "mixing angle is defined for the 4-dim stage bases");
    const int p = kind == BasisKind::Stage2Diff ? spec.n() : spec.m();
    if (p < 2) fail(Status::DegenerateSize, "mixing angle needs partition size >= 2");
    return std::acos(1.0 - 2.0 / p);
}

CMat reduced_operator(ReducedOp op, double angle, BasisKind kind, const BipartiteSpec& spec) {
    if (!is_stage_kind(kind))
        fail(Status::UnsupportedBasis,
             "analytic reduced operators exist only for the 4-dim stage bases");
    switch (op) {
        case ReducedOp::Shift: return reduced_shift_matrix();
        case ReducedOp::Oracle: return reduced_oracle_matrix(angle);
        case ReducedOp::Coin: return reduced_coin_matrix(angle, mixing_angle(kind, spec));
    }
    fail(Status::InvalidArgument, "unknown reduced operator");
}

CMat rotation_R(double theta) {
    CMat r(4, 4);
    r(0, 0) = -std::polar(1.0, -theta / 2.0);
    r(1, 1) = -std::polar(1.0, theta / 2.0);
    r(2, 2) = r(0, 0);
    r(3, 3) = r(0, 0);
    return r;
}

CMat mixer_A(double theta, double omega) {
    const double c = std::cos(omega / 2.0);
    const double s = std::sin(omega / 2.0);
    CMat a = CMat::identity(4);
    a(1, 1) = c;
    a(2, 2) = c;
    a(1, 2) = Complex(0.0, -1.0) * std::polar(1.0, theta) * s;
    a(2, 1) = Complex(0.0, -1.0) * std::polar(1.0, -theta) * s;
    return a;
}

DecompositionReport verify_decompositions(double alpha, double beta, double omega,
                                          int braiding_samples, uint64_t seed) {
    DecompositionReport report;

    const Complex half_alpha = std::polar(1.0, -alpha / 2.0);
    const CMat coin_product =
        (mixer_A(std::numbers::pi / 2.0, omega) * rotation_R(alpha) *
         mixer_A(-std::numbers::pi / 2.0, omega))
            .scaled(half_alpha);
    report.coin_residual = coin_product.max_abs_diff(reduced_coin_matrix(alpha, omega));

    const CMat s = reduced_shift_matrix();
    const CMat oracle_product =
        (s * rotation_R(beta) * s).scaled(-std::polar(1.0, beta / 2.0));
    report.oracle_residual = oracle_product.max_abs_diff(reduced_oracle_matrix(beta));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle_dist(-std::numbers::pi, std::numbers::pi);
    std::uniform_int_distribution<int> len_dist(1, 3);
    std::uniform_int_distribution<int> pick(0, 1);
    auto word = [&]() {
        CMat w = CMat::identity(4);
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i) {
            const double theta = angle_dist(rng);
            w = w * (pick(rng) ? mixer_A(theta, omega) : rotation_R(theta));
        }
        return w;
    };
    double worst = 0.0;
    for (int i = 0; i < braiding_samples; ++i) {
        const CMat b1 = word();
        const CMat b2 = word();
        worst = std::max(worst, (s * b1 * s * b2 * s).max_abs_diff(b2 * s * b1));
    }
    report.braiding_residual = worst;
    return report;
}

Projection project(const StateVector& state, const ReducedBasis& basis) {
    if (!(state.spec == basis.spec))
        fail(Status::SpecMismatch, "state and basis live on different graphs");
    Projection out;
    out.coords.reserve(basis.dim());
    for (const StateVector& e : basis.vectors)
        out.coords.push_back(vdot(e.amplitudes, state.amplitudes));
    out.leakage = std::max(0.0, vec_norm_sq(state.amplitudes) - vec_norm_sq(out.coords));
    return out;
}

StateVector lift(const std::vector<Complex>& coords, const ReducedBasis& basis) {
    if (static_cast<int>(coords.size()) != basis.dim())
        fail(Status::DimensionMismatch, "coordinate count does not match basis dimension");
    StateVector out = zero_state(basis.spec);
    for (int i = 0; i < basis.dim(); ++i) {
        const StateVector& e = basis.vectors[i];
        for (size_t k = 0; k < out.amplitudes.size(); ++k)
            out.amplitudes[k] += coords[i] * e.amplitudes[k];
    }
    return out;
}

CompressedOps compress_step_operators(const ReducedBasis& basis, int marked) {
    check_vertex_in_range(basis.spec, marked, "marked");
    const int d = basis.dim();
    const BipartiteSpec& spec = basis.spec;
    CompressedOps ops{CMat(d, d), CMat(d, d), CMat(d, d)};
    for (int j = 0; j < d; ++j) {
        std::vector<Complex> shifted = basis.vectors[j].amplitudes;
        detail::shift_in_place(spec, shifted);

        // Block-uniform projector: mean of each source block spread back
        // over the block.
        std::vector<Complex> projected(spec.arc_count());
        for (int v = 0; v < spec.vertex_count(); ++v) {
            const int off = spec.block_offset(v);
            const int deg = spec.degree(v);
            Complex sum = 0.0;
            for (int k = 0; k < deg; ++k) sum += basis.vectors[j].amplitudes[off + k];
            const Complex mean = sum / static_cast<double>(deg);
            for (int k = 0; k < deg; ++k) projected[off + k] = mean;
        }

        std::vector<Complex> masked(spec.arc_count());
        const int moff = spec.block_offset(marked);
        const int mdeg = spec.degree(marked);
        for (int k = 0; k < mdeg; ++k) masked[moff + k] = basis.vectors[j].amplitudes[moff + k];

        for (int i = 0; i < d; ++i) {
            const std::vector<Complex>& ei = basis.vectors[i].amplitudes;
            ops.shift(i, j) = vdot(ei, shifted);
            ops.coin_projector(i, j) = vdot(ei, projected);
            ops.marked_projector(i, j) = vdot(ei, masked);
        }
    }
    return ops;
}

std::vector<Complex> reduced_evolve(std::vector<Complex> coords, const AngleSchedule& schedule,
                                    const ReducedBasis& basis, int marked) {
    if (static_cast<int>(coords.size()) != basis.dim())
        fail(Status::DimensionMismatch, "coordinate count does not match basis dimension");
    if (schedule.h < 1 || schedule.alphas.size() != static_cast<size_t>(schedule.h) ||
        schedule.betas.size() != static_cast<size_t>(schedule.h))
        fail(Status::InvalidArgument, "schedule must carry h >= 1 angle pairs");

    if (is_stage_kind(basis.kind)) {
        if (marked != basis.focus())
            fail(Status::InvalidConfig, "stage bases evolve with their focus vertex marked");
        const int p = basis.spec.partition_size(basis.focus());
        const double omega = std::acos(1.0 - 2.0 / p);
        const CMat s = reduced_shift_matrix();
        for (int t = 0; t < schedule.h; ++t) {
            coords = reduced_oracle_matrix(schedule.betas[t]).apply(coords);
            coords = reduced_coin_matrix(schedule.alphas[t], omega).apply(coords);
            coords = s.apply(coords);
        }
        return coords;
    }

    if (marked != basis.sender && marked != basis.receiver)
        fail(Status::InvalidConfig, "combined bases evolve with the sender or receiver marked");
    const CompressedOps ops = compress_step_operators(basis, marked);
    const int d = basis.dim();
    for (int t = 0; t < schedule.h; ++t) {
        const Complex oracle_gain = std::polar(1.0, schedule.betas[t]) - 1.0;
        const Complex coin_gain = 1.0 - std::polar(1.0, -schedule.alphas[t]);
        std::vector<Complex> tmp = ops.marked_projector.apply(coords);
        for (int i = 0; i < d; ++i) coords[i] += oracle_gain * tmp[i];
        tmp = ops.coin_projector.apply(coords);
        for (int i = 0; i < d; ++i) coords[i] = coin_gain * tmp[i] - coords[i];
        coords = ops.shift.apply(coords);
    }
    return coords;
}

}  // namespace qst
