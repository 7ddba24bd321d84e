#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "graph.hpp"
#include "schedule.hpp"

namespace qst {

using Complex = std::complex<double>;

// Unit-norm amplitude vector over the 2mn directed arcs of K_{m,n}, laid out
// in arc-index order.
struct StateVector {
    BipartiteSpec spec;
    std::vector<Complex> amplitudes;
};

// Uniform superposition over the arcs leaving the given vertex.
StateVector initial_state(const BipartiteSpec& spec, int sender);
StateVector target_state(const BipartiteSpec& spec, int receiver);

// Uniform superposition over every arc entering the sender's partition: the
// intermediate state stage 1 steers toward before stage 2 focuses it onto
// the receiver.
StateVector stage1_target_state(const BipartiteSpec& spec, int sender);

Complex inner_product(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);
double state_norm(const StateVector& s);

StateVector apply_shift(const StateVector& s);
StateVector apply_coin(const StateVector& s, double alpha);
StateVector apply_oracle(const StateVector& s, double beta, int marked);

// One walk step: oracle, then coin, then shift.
StateVector step(const StateVector& s, double alpha, double beta, int marked);

// Applies step for t = 1..h with the schedule's (alpha_t, beta_t).
StateVector evolve(const StateVector& s, const AngleSchedule& schedule, int marked);

// One line per arc in index order: u,v,re,im with 17 significant digits.
void write_state_csv(const StateVector& s, std::ostream& out);

namespace detail {
void shift_in_place(const BipartiteSpec& spec, std::vector<Complex>& amp);
void coin_in_place(const BipartiteSpec& spec, std::vector<Complex>& amp, double alpha);
void oracle_in_place(const BipartiteSpec& spec, std::vector<Complex>& amp, double beta, int marked);
}  // namespace detail

}  // namespace qst
