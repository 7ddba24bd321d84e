#include "walk.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>

namespace qst {

namespace detail {

void shift_in_place(const BipartiteSpec& spec, std::vector<Complex>& amp) {
    const int m = spec.m();
    const int n = spec.n();
    for (int u = 0; u < m; ++u)
        for (int j = 0; j < n; ++j) std::swap(amp[u * n + j], amp[m * n + j * m + u]);
}

void coin_in_place(const BipartiteSpec& spec, std::vector<Complex>& amp, double alpha) {
    const Complex factor = 1.0 - std::polar(1.0, -alpha);
    for (int v = 0; v < spec.vertex_count(); ++v) {
        const int off = spec.block_offset(v);
        const int deg = spec.degree(v);
        Complex sum = 0.0;
        for (int k = 0; k < deg; ++k) sum += amp[off + k];
        const Complex scaled_mean = factor * (sum / static_cast<double>(deg));
        for (int k = 0; k < deg; ++k) amp[off + k] = scaled_mean - amp[off + k];
    }
}

void oracle_in_place(const BipartiteSpec& spec, std::vector<Complex>& amp, double beta,
                     int marked) {
    const int off = spec.block_offset(marked);
    const int deg = spec.degree(marked);
    const Complex phase = std::polar(1.0, beta);
    for (int k = 0; k < deg; ++k) amp[off + k] *= phase;
}

}  // namespace detail

namespace {

StateVector block_uniform(const BipartiteSpec& spec, int vertex) {
    StateVector s{spec, std::vector<Complex>(spec.arc_count())};
    const int off = spec.block_offset(vertex);
    const int deg = spec.degree(vertex);
    const double amp = 1.0 / std::sqrt(static_cast<double>(deg));
    for (int k = 0; k < deg; ++k) s.amplitudes[off + k] = amp;
    return s;
}

void check_same_spec(const StateVector& a, const StateVector& b) {
    if (!(a.spec == b.spec))
        fail(Status::SpecMismatch, "states live on different graphs");
}

void check_marked(const BipartiteSpec& spec, int marked) {
    if (marked < 0 || marked >= spec.vertex_count())
        fail(Status::OutOfRange, "marked vertex " + std::to_string(marked) + " out of range");
}

}  // namespace

StateVector initial_state(const BipartiteSpec& spec, int sender) {
    check_marked(spec, sender);
    return block_uniform(spec, sender);
}

StateVector target_state(const BipartiteSpec& spec, int receiver) {
    check_marked(spec, receiver);
    return block_uniform(spec, receiver);
}

StateVector stage1_target_state(const BipartiteSpec& spec, int sender) {
    check_marked(spec, sender);
    StateVector s{spec, std::vector<Complex>(spec.arc_count())};
    const double amp = 1.0 / std::sqrt(static_cast<double>(spec.m() * spec.n()));
    const bool sender_left = spec.is_left(sender);
    for (int v = 0; v < spec.vertex_count(); ++v) {
        if (spec.is_left(v) == sender_left) continue;
        const int off = spec.block_offset(v);
        const int deg = spec.degree(v);
        for (int k = 0; k < deg; ++k) s.amplitudes[off + k] = amp;
    }
    return s;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    check_same_spec(a, b);
    Complex sum = 0.0;
    for (size_t i = 0; i < a.amplitudes.size(); ++i)
        sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

double state_norm(const StateVector& s) {
    double sum = 0.0;
    for (const Complex& c : s.amplitudes) sum += std::norm(c);
    return std::sqrt(sum);
}

StateVector apply_shift(const StateVector& s) {
    StateVector out = s;
    detail::shift_in_place(out.spec, out.amplitudes);
    return out;
}

StateVector apply_coin(const StateVector& s, double alpha) {
    StateVector out = s;
    detail::coin_in_place(out.spec, out.amplitudes, alpha);
    return out;
}

StateVector apply_oracle(const StateVector& s, double beta, int marked) {
    check_marked(s.spec, marked);
    StateVector out = s;
    detail::oracle_in_place(out.spec, out.amplitudes, beta, marked);
    return out;
}

StateVector step(const StateVector& s, double alpha, double beta, int marked) {
    check_marked(s.spec, marked);
    StateVector out = s;
    detail::oracle_in_place(out.spec, out.amplitudes, beta, marked);
    detail::coin_in_place(out.spec, out.amplitudes, alpha);
    detail::shift_in_place(out.spec, out.amplitudes);
    return out;
}

StateVector evolve(const StateVector& s, const AngleSchedule& schedule, int marked) {
    check_marked(s.spec, marked);
    if (schedule.h < 1 || schedule.alphas.size() != static_cast<size_t>(schedule.h) ||
        schedule.betas.size() != static_cast<size_t>(schedule.h))
        fail(Status::InvalidArgument, "schedule must carry h >= 1 angle pairs");
    StateVector out = s;
    for (int t = 0; t < schedule.h; ++t) {
        detail::oracle_in_place(out.spec, out.amplitudes, schedule.betas[t], marked);
        detail::coin_in_place(out.spec, out.amplitudes, schedule.alphas[t]);
        detail::shift_in_place(out.spec, out.amplitudes);
    }
    return out;
}

void write_state_csv(const StateVector& s, std::ostream& out) {
    char line[128];
    for (int arc = 0; arc < s.spec.arc_count(); ++arc) {
        const auto [u, v] = s.spec.arc_endpoints(arc);
        std::snprintf(line, sizeof(line), "%d,%d,%.17g,%.17g\n", u, v, s.amplitudes[arc].real(),
                      s.amplitudes[arc].imag());
        out << line;
    }
}

}  // namespace qst
