#include "doctest.h"
#include "schedule.hpp"

#include <cmath>
#include <numbers>

using namespace qst;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("minimum step counts match hand-computed values") {
    CHECK(min_steps(0.01, 100, Parity::Odd) == 31);
    CHECK(min_steps(1.0, 1, Parity::Odd) == 3);
    CHECK(min_steps(0.01, 100, Parity::Even) == 30);
    CHECK(min_steps(1.0, 1, Parity::Even) == 2);
}

TEST_CASE("step counts respect parity and the log threshold") {
    for (double eps : {1.0, 0.5, 0.25, 0.04, 0.01}) {
        for (int d : {1, 2, 7, 50, 400}) {
            const double threshold = std::log(2.0 / std::sqrt(eps)) * std::sqrt(double(d));
            const int odd = min_steps(eps, d, Parity::Odd);
            const int even = min_steps(eps, d, Parity::Even);
            CHECK(odd % 2 == 1);
            CHECK(even % 2 == 0);
            CHECK(odd >= 3);
            CHECK(even >= 2);
            if (odd > 3) {
                CHECK(double(odd) >= threshold);
                CHECK(double(odd - 2) < threshold);
            }
            if (even > 2) {
                CHECK(double(even) >= threshold);
                CHECK(double(even - 2) < threshold);
            }
        }
    }
    CHECK_THROWS_AS(min_steps(0.0, 4, Parity::Odd), Error);
    CHECK_THROWS_AS(min_steps(1.5, 4, Parity::Odd), Error);
    CHECK_THROWS_AS(min_steps(0.01, 0, Parity::Odd), Error);
}

TEST_CASE("chebyshev closed form agrees with the recurrence") {
    CHECK(chebyshev(0, 0.3) == doctest::Approx(1.0));
    CHECK(chebyshev(3, 1.0) == doctest::Approx(1.0));
    CHECK(chebyshev(2, 0.5) == doctest::Approx(-0.5));
    CHECK(chebyshev(2, 2.0) == doctest::Approx(7.0));

    for (double x = -1.9; x <= 1.9; x += 0.37) {
        double prev = 1.0, cur = x;
        for (int k = 2; k <= 25; ++k) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
            CHECK(chebyshev(k, x) ==
                  doctest::Approx(cur).epsilon(1e-12).scale(std::max(1.0, std::abs(cur))));
        }
    }
}

TEST_CASE("contraction factor inverts the target amplification") {
    CHECK(chebyshev(3, 1.0 / gamma_for(3, 0.25)) == doctest::Approx(2.0));
    CHECK(chebyshev(31, 1.0 / gamma_for(31, 0.01)) == doctest::Approx(10.0));
    CHECK(gamma_for(5, 1.0) == doctest::Approx(1.0));
    for (int h : {3, 5, 9, 21}) {
        for (double eps : {0.25, 0.04, 0.01}) {
            const double g = gamma_for(h, eps);
            CHECK(g > 0.0);
            CHECK(g < 1.0);
            CHECK(chebyshev(h, 1.0 / g) * std::sqrt(eps) == doctest::Approx(1.0));
        }
    }
    CHECK_THROWS_AS(gamma_for(3, 0.0), Error);
    CHECK_THROWS_AS(gamma_for(3, 1.2), Error);
}

TEST_CASE("degenerate schedules pin a single angle at pi") {
    const AngleSchedule s1 = stage1_schedule(3, 1.0);
    CHECK(s1.h == 3);
    CHECK(s1.betas[2] == doctest::Approx(-kPi));
    CHECK(s1.alphas[1] == doctest::Approx(kPi));
    CHECK(s1.alphas[0] == 0.0);
    CHECK(s1.alphas[2] == 0.0);
    CHECK(s1.betas[0] == 0.0);
    CHECK(s1.betas[1] == 0.0);

    const AngleSchedule s2 = stage2_same_schedule(3, 1.0);
    CHECK(s2.alphas[2] == doctest::Approx(kPi));
    CHECK(s2.betas[1] == doctest::Approx(-kPi));

    const AngleSchedule theorem = stage2_diff_schedule(2, 1.0, Pairing::TheoremProof);
    CHECK(theorem.alphas[1] == doctest::Approx(kPi));
    CHECK(theorem.betas[0] == doctest::Approx(-kPi));
    CHECK(theorem.betas[1] == 0.0);

    const AngleSchedule box = stage2_diff_schedule(2, 1.0, Pairing::AlgorithmBox);
    CHECK(box.alphas[1] == doctest::Approx(kPi));
    CHECK(box.betas[1] == doctest::Approx(-kPi));
    CHECK(box.betas[0] == 0.0);
}

TEST_CASE("constrained entries mirror between the two stages") {
    const AngleSchedule s1 = stage1_schedule(7, 0.04);
    const AngleSchedule s2 = stage2_same_schedule(7, 0.04);
    // beta at slot k pairs with the alpha at the reflected slot 7 - k
    for (int k : {2, 4, 6}) {
        CHECK(s1.betas[k] != 0.0);
        CHECK(s2.alphas[k] == doctest::Approx(-s1.betas[k]));
        CHECK(s1.alphas[7 - k] == doctest::Approx(-s1.betas[k]));
        CHECK(s2.betas[7 - k] == doctest::Approx(-s2.alphas[k]));
    }
    CHECK(s1.alphas[0] == 0.0);
    CHECK(s1.alphas[6] == 0.0);
    CHECK(s1.betas[0] == 0.0);
    CHECK(s1.betas[1] == 0.0);
}

TEST_CASE("pairing variants place the oracle angles one slot apart") {
    const AngleSchedule theorem = stage2_diff_schedule(6, 0.04, Pairing::TheoremProof);
    const AngleSchedule box = stage2_diff_schedule(6, 0.04, Pairing::AlgorithmBox);
    for (int k : {2, 4, 6}) {
        CHECK(theorem.alphas[k - 1] == doctest::Approx(box.alphas[k - 1]));
        CHECK(theorem.betas[6 - k] == doctest::Approx(-theorem.alphas[k - 1]));
        CHECK(box.betas[6 + 1 - k] == doctest::Approx(-box.alphas[k - 1]));
    }
    CHECK(theorem.alphas[0] == 0.0);
    CHECK(theorem.betas[5] == 0.0);
    CHECK(box.betas[0] == 0.0);
}

TEST_CASE("unconstrained entries take the requested filler value") {
    const double filler = 0.37;
    const AngleSchedule s1 = stage1_schedule(5, 0.25, filler);
    CHECK(s1.alphas[0] == filler);
    CHECK(s1.alphas[4] == filler);
    CHECK(s1.betas[0] == filler);
    CHECK(s1.betas[1] == filler);
    CHECK(s1.alphas[1] != filler);
    CHECK(s1.alphas[3] != filler);

    const AngleSchedule diff = stage2_diff_schedule(4, 0.25, Pairing::TheoremProof, filler);
    CHECK(diff.alphas[0] == filler);
    CHECK(diff.betas[3] == filler);
}

TEST_CASE("stage parities are enforced") {
    CHECK_THROWS_AS(stage1_schedule(4, 0.25), Error);
    CHECK_THROWS_AS(stage1_schedule(1, 0.25), Error);
    CHECK_THROWS_AS(stage2_same_schedule(6, 0.25), Error);
    CHECK_THROWS_AS(stage2_diff_schedule(3, 0.25, Pairing::TheoremProof), Error);
    CHECK_THROWS_AS(stage2_diff_schedule(0, 0.25, Pairing::TheoremProof), Error);
    try {
        (void)stage1_schedule(4, 0.25);
    } catch (const Error& e) {
        CHECK(e.status() == Status::BadParity);
    }
}

TEST_CASE("phased recurrence reduces to known cases") {
    using C = std::complex<double>;
    CHECK(std::abs(quasi_chebyshev(0.7, {}) - C(0.7, 0.0)) < 1e-15);
    // with zero phase shifts it is the plain recurrence: a_2 = 2x^2 - 1
    const double x = 0.43;
    CHECK(std::abs(quasi_chebyshev(x, {0.0}) - C(2 * x * x - 1, 0.0)) < 1e-15);
}

TEST_CASE("phase deltas reproduce the damped amplitude profile") {
    for (int h : {3, 5, 9}) {
        for (double eps : {0.25, 0.01}) {
            const double g = gamma_for(h, eps);
            const auto deltas = chebyshev_phase_deltas(h, g);
            CHECK(int(deltas.size()) == h - 1);
            for (double x : {0.0, 0.31, 0.77, 1.0}) {
                const double want = std::abs(chebyshev(h, x / g) / chebyshev(h, 1.0 / g));
                CHECK(std::abs(quasi_chebyshev(x, deltas)) == doctest::Approx(want).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("closed-form stage fidelity matches its definition") {
    for (double eps : {0.25, 0.04}) {
        for (int d : {3, 10, 100}) {
            const int h = min_steps(eps, d, Parity::Odd);
            const double g = gamma_for(h, eps);
            const double tail = chebyshev(h, std::sqrt(1.0 - 1.0 / d) / g);
            CHECK(predicted_stage_fidelity(h, eps, d, Stage::Stage1) ==
                  doctest::Approx(1.0 - eps * tail * tail).epsilon(1e-14));
            CHECK(predicted_stage_fidelity(h, eps, d, Stage::Stage1) >= 1.0 - eps);

            const int h_even = min_steps(eps, d, Parity::Even);
            const double g2 = gamma_for(h_even + 1, eps);
            const double tail2 = chebyshev(h_even + 1, std::sqrt(1.0 - 1.0 / d) / g2);
            CHECK(predicted_stage_fidelity(h_even, eps, d, Stage::Stage2Diff) ==
                  doctest::Approx(1.0 - eps * tail2 * tail2).epsilon(1e-14));
        }
    }
}
