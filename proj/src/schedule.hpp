#pragma once

#include <complex>
#include <vector>

#include "error.hpp"

namespace qst {

enum class Stage { Stage1, Stage2Same, Stage2Diff };
enum class Parity { Odd, Even };

// The published step sequence and the worked bound pair the stage-2
// different-partition oracle angles to the coin angles with offsets that
// differ by one; both layouts are selectable.
enum class Pairing { AlgorithmBox, TheoremProof };

// Per-step angles for one stage: alphas[t]/betas[t] drive step t+1. Entries
// not pinned by the Chebyshev construction carry free_angle_default.
struct AngleSchedule {
    Stage stage = Stage::Stage1;
    int h = 0;
    std::vector<double> alphas;
    std::vector<double> betas;
    double epsilon = 1.0;
    double free_angle_default = 0.0;
    Pairing pairing = Pairing::TheoremProof;
};

// Validates sizes and the per-stage parity rule (Stage1/Stage2Same odd h,
// Stage2Diff even h) for hand-assembled schedules.
AngleSchedule make_schedule(Stage stage, std::vector<double> alphas, std::vector<double> betas);

struct ChebyParams {
    int h = 0;
    double epsilon = 1.0;
    double gamma = 1.0;
};

// Chebyshev polynomial of the first kind, evaluated through the cos/cosh
// closed forms so |x| > 1 cannot overflow the three-term recurrence.
double chebyshev(int order, double x);

// gamma in (0,1] with T_h(1/gamma) = 1/sqrt(epsilon).
double gamma_for(int h, double epsilon);
ChebyParams cheby_params(int h, double epsilon);

// Smallest integer of the requested parity >= ln(2/sqrt(eps)) * sqrt(d),
// floored at 3 (Odd) / 2 (Even).
int min_steps(double epsilon, int d, Parity parity);

// arccot with range (0, pi): arccot(0) = pi/2 and the value is continuous
// across sign changes of the argument.
double arccot(double y);

AngleSchedule stage1_schedule(int h1, double eps1, double free_angle = 0.0);
AngleSchedule stage2_same_schedule(int h2, double eps2, double free_angle = 0.0);
AngleSchedule stage2_diff_schedule(int h2, double eps2, Pairing pairing = Pairing::TheoremProof,
                                   double free_angle = 0.0);

// Three-term recurrence a_0 = 1, a_1 = x,
//   a_k = x (1 + e^{-i d}) a_{k-1} - e^{-i d} a_{k-2},  d = phase_deltas[k-2],
// returning a_h for h = phase_deltas.size() + 1.
std::complex<double> quasi_chebyshev(double x, const std::vector<double>& phase_deltas);

// The phase-difference sequence that collapses quasi_chebyshev to
// T_h(x/gamma) / T_h(1/gamma) in modulus.
std::vector<double> chebyshev_phase_deltas(int h, double gamma);

// Closed-form stage fidelity 1 - eps * T^2_order(sqrt(1 - 1/d) / gamma). The
// polynomial order is h for Stage1/Stage2Same and h+1 for Stage2Diff; d is
// the partition size of the stage's focus vertex.
double predicted_stage_fidelity(int h, double epsilon, int d, Stage stage);

}  // namespace qst
