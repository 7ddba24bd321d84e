#include "schedule.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qst {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        fail(Status::InvalidEpsilon, "epsilon must lie in (0, 1], got " + std::to_string(epsilon));
}

bool parity_ok(Stage stage, int h) {
    return stage == Stage::Stage2Diff ? h % 2 == 0 : h % 2 == 1;
}

// 2 * arccot(tan(num*pi/den) * root). root = 0 (the epsilon = 1 degenerate
// case) pins the argument to exactly 0, and a tan pole is pushed to the
// arccot(+/-inf) limit, keeping the (0, pi) branch continuous.
double pinned_angle(int num, int den, double root) {
    const double t = std::tan(num * std::numbers::pi / den);
    double arg;
    if (root == 0.0)
        arg = 0.0;
    else if (!std::isfinite(t))
        arg = std::copysign(std::numeric_limits<double>::infinity(), t);
    else
        arg = t * root;
    return 2.0 * arccot(arg);
}

double complement_root(double gamma) { return std::sqrt(std::max(0.0, 1.0 - gamma * gamma)); }

}  // namespace

AngleSchedule make_schedule(Stage stage, std::vector<double> alphas, std::vector<double> betas) {
    if (alphas.empty() || alphas.size() != betas.size())
        fail(Status::InvalidArgument, "schedule needs matching non-empty angle lists");
    const int h = static_cast<int>(alphas.size());
    if (!parity_ok(stage, h))
        fail(Status::BadParity, "step count " + std::to_string(h) + " has the wrong parity");
    AngleSchedule s;
    s.stage = stage;
    s.h = h;
    s.alphas = std::move(alphas);
    s.betas = std::move(betas);
    return s;
}

double chebyshev(int order, double x) {
    if (order < 0) fail(Status::InvalidArgument, "chebyshev order must be non-negative");
    if (std::abs(x) <= 1.0) return std::cos(order * std::acos(x));
    if (x > 1.0) return std::cosh(order * std::acosh(x));
    const double mag = std::cosh(order * std::acosh(-x));
    return order % 2 == 0 ? mag : -mag;
}

double gamma_for(int h, double epsilon) {
    check_epsilon(epsilon);
    if (h < 1) fail(Status::InvalidArgument, "step count must be positive");
    return 1.0 / std::cosh(std::acosh(1.0 / std::sqrt(epsilon)) / h);
}

ChebyParams cheby_params(int h, double epsilon) { return {h, epsilon, gamma_for(h, epsilon)}; }

int min_steps(double epsilon, int d, Parity parity) {
    check_epsilon(epsilon);
    if (d < 1) fail(Status::InvalidArgument, "dimension parameter must be positive");
    const double threshold = std::log(2.0 / std::sqrt(epsilon)) * std::sqrt(static_cast<double>(d));
    int h = static_cast<int>(std::ceil(threshold));
    if (h < 1) h = 1;
    const int want = parity == Parity::Odd ? 1 : 0;
    if (h % 2 != want) ++h;
    return std::max(h, parity == Parity::Odd ? 3 : 2);
}

double arccot(double y) { return std::atan2(1.0, y); }

AngleSchedule stage1_schedule(int h1, double eps1, double free_angle) {
    if (h1 % 2 == 0) fail(Status::BadParity, "stage-1 step count must be odd");
    if (h1 < 3) fail(Status::InvalidArgument, "stage-1 step count must be >= 3");
    AngleSchedule s;
    s.stage = Stage::Stage1;
    s.h = h1;
    s.epsilon = eps1;
    s.free_angle_default = free_angle;
    s.alphas.assign(h1, free_angle);
    s.betas.assign(h1, free_angle);
    const double root = complement_root(gamma_for(h1, eps1));
    for (int k = 3; k <= h1; k += 2) {
        const double beta_k = -pinned_angle(k - 1, h1, root);
        s.betas[k - 1] = beta_k;
        s.alphas[h1 + 1 - k] = -beta_k;
    }
    return s;
}

AngleSchedule stage2_same_schedule(int h2, double eps2, double free_angle) {
    if (h2 % 2 == 0) fail(Status::BadParity, "stage-2 same-partition step count must be odd");
    if (h2 < 3) fail(Status::InvalidArgument, "stage-2 same-partition step count must be >= 3");
    AngleSchedule s;
    s.stage = Stage::Stage2Same;
    s.h = h2;
    s.epsilon = eps2;
    s.free_angle_default = free_angle;
    s.alphas.assign(h2, free_angle);
    s.betas.assign(h2, free_angle);
    const double root = complement_root(gamma_for(h2, eps2));
    for (int k = 3; k <= h2; k += 2) {
        const double alpha_k = pinned_angle(k - 1, h2, root);
        s.alphas[k - 1] = alpha_k;
        s.betas[h2 + 1 - k] = -alpha_k;
    }
    return s;
}

AngleSchedule stage2_diff_schedule(int h2, double eps2, Pairing pairing, double free_angle) {
    if (h2 % 2 == 1) fail(Status::BadParity, "stage-2 different-partition step count must be even");
    if (h2 < 2) fail(Status::InvalidArgument, "stage-2 different-partition step count must be >= 2");
    AngleSchedule s;
    s.stage = Stage::Stage2Diff;
    s.h = h2;
    s.epsilon = eps2;
    s.free_angle_default = free_angle;
    s.pairing = pairing;
    s.alphas.assign(h2, free_angle);
    s.betas.assign(h2, free_angle);
    const double root = complement_root(gamma_for(h2 + 1, eps2));
    for (int k = 2; k <= h2; k += 2) {
        const double alpha_k = pinned_angle(k, h2 + 1, root);
        s.alphas[k - 1] = alpha_k;
        if (pairing == Pairing::AlgorithmBox)
            s.betas[h2 + 1 - k] = -alpha_k;
        else
            s.betas[h2 - k] = -alpha_k;
    }
    return s;
}

std::complex<double> quasi_chebyshev(double x, const std::vector<double>& phase_deltas) {
    std::complex<double> prev(1.0, 0.0);
    std::complex<double> cur(x, 0.0);
    for (double d : phase_deltas) {
        const std::complex<double> phase = std::polar(1.0, -d);
        const std::complex<double> next = x * (1.0 + phase) * cur - phase * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> chebyshev_phase_deltas(int h, double gamma) {
    if (h < 1) fail(Status::InvalidArgument, "step count must be positive");
    if (!(gamma > 0.0) || gamma > 1.0)
        fail(Status::InvalidArgument, "gamma must lie in (0, 1]");
    const double root = complement_root(gamma);
    std::vector<double> deltas;
    deltas.reserve(h - 1);
    for (int k = 1; k < h; ++k) {
        const double sign = k % 2 == 0 ? std::numbers::pi : -std::numbers::pi;
        deltas.push_back(sign - pinned_angle(k, h, root));
    }
    return deltas;
}

double predicted_stage_fidelity(int h, double epsilon, int d, Stage stage) {
    check_epsilon(epsilon);
    if (h < 1 || d < 1) fail(Status::InvalidArgument, "step count and dimension must be positive");
    const int order = stage == Stage::Stage2Diff ? h + 1 : h;
    const double gamma = gamma_for(order, epsilon);
    const double x = std::sqrt(1.0 - 1.0 / d);
    const double t = chebyshev(order, x / gamma);
    return 1.0 - epsilon * t * t;
}

}  // namespace qst
