#pragma once

#include <cstdint>
#include <vector>

#include "linalg.hpp"
#include "walk.hpp"

namespace qst {

enum class BasisKind { Stage1, Stage2Same, Stage2Diff, CombinedSame, CombinedDiff };
enum class ReducedOp { Shift, Coin, Oracle };

// Orthonormal full-space vectors spanning a subspace closed under the walk
// steps they serve. Stage bases are built around a single focus vertex (that
// stage's marked vertex); combined bases span both stages of a transfer.
struct ReducedBasis {
    BasisKind kind;
    BipartiteSpec spec;
    int sender = -1;
    int receiver = -1;
    std::vector<StateVector> vectors;

    int dim() const { return static_cast<int>(vectors.size()); }
    // Marked vertex of the stage a 4-dim basis serves.
    int focus() const;
};

ReducedBasis stage1_basis(const BipartiteSpec& spec, int sender);
ReducedBasis stage2_same_basis(const BipartiteSpec& spec, int receiver);
ReducedBasis stage2_diff_basis(const BipartiteSpec& spec, int receiver);
ReducedBasis combined_same_basis(const BipartiteSpec& spec, int sender, int receiver);
ReducedBasis combined_diff_basis(const BipartiteSpec& spec, int sender, int receiver);

// Mixing angle of the reduced coin, cos(omega) = 1 - 2/p with p the focus
// partition size (m for Stage1/Stage2Same, n for Stage2Diff).
double mixing_angle(BasisKind kind, const BipartiteSpec& spec);

// Analytic 4x4 operator in a stage basis; angle is alpha for Coin, beta for
// Oracle, ignored for Shift. The 6/8-dim kinds have no closed-form matrices
// and evolve through numerically compressed operators instead.
CMat reduced_operator(ReducedOp op, double angle, BasisKind kind, const BipartiteSpec& spec);

// Diagonal phase rotation and the 2x2-block mixer whose products reproduce
// the reduced coin and oracle; omega as in mixing_angle.
CMat rotation_R(double theta);
CMat mixer_A(double theta, double omega);

struct DecompositionReport {
    double coin_residual = 0.0;
    double oracle_residual = 0.0;
    double braiding_residual = 0.0;

    double max_residual() const {
        return std::max(coin_residual, std::max(oracle_residual, braiding_residual));
    }
    bool pass(double tol = 1e-12) const { return max_residual() < tol; }
};

// Checks the coin/oracle factorizations through rotation_R / mixer_A and the
// shift braiding relation S B1 S B2 S = B2 S B1 on random words drawn from
// {R(theta), A(theta)}.
DecompositionReport verify_decompositions(double alpha, double beta, double omega,
                                          int braiding_samples = 100,
                                          uint64_t seed = 0x5eed5eedULL);

struct Projection {
    std::vector<Complex> coords;
    double leakage;  // weight of the component outside the basis span
};

Projection project(const StateVector& state, const ReducedBasis& basis);
StateVector lift(const std::vector<Complex>& coords, const ReducedBasis& basis);

// Step operators compressed to basis coordinates (B^dagger Op B): the shift,
// the block-uniform coin projector, and the marked-block projector. Exact
// whenever the basis is closed under the step.
struct CompressedOps {
    CMat shift;
    CMat coin_projector;
    CMat marked_projector;
};

CompressedOps compress_step_operators(const ReducedBasis& basis, int marked);

// Drives coordinates through the schedule: analytic 4x4 matrices for stage
// bases (marked must be the basis focus), compressed operators for the
// combined kinds.
std::vector<Complex> reduced_evolve(std::vector<Complex> coords, const AngleSchedule& schedule,
                                    const ReducedBasis& basis, int marked);

}  // namespace qst
