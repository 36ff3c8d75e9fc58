// Copyright 2026 the dsqcsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSQC_QSIM_HPP
#define DSQC_QSIM_HPP

#include <array>
#include <complex>

#include "dsqc/random.hpp"

namespace dsqc {

using Complex = std::complex<double>;

/// Pure state of two qubits. amps[2*q1 + q2] is the amplitude of |q1 q2>,
/// with q1 the left-written qubit of a ket. Every gate keeps the norm at 1
/// to within 1e-9.
struct TwoQubitState {
    std::array<Complex, 4> amps{};
};

enum class Pauli { X, Y, Z };

/// |q1 q2> computational basis state. Bits must be 0 or 1.
TwoQubitState prepare(int q1, int q2);

/// Hadamard on the named qubit (1 = left, 2 = right).
TwoQubitState apply_hadamard(const TwoQubitState& s, int qubit);

/// Controlled-Z: negates the |11> amplitude.
TwoQubitState apply_cz(const TwoQubitState& s);

/// Single-qubit Pauli on the named qubit (1 or 2).
TwoQubitState apply_pauli(const TwoQubitState& s, int qubit, Pauli p);

struct JointOutcome {
    int first;   // measured value of qubit 1
    int second;  // measured value of qubit 2
};

/// Computational-basis measurement of both qubits, sampled by the Born rule
/// P(o1,o2) = |amps[2*o1+o2]|^2.
JointOutcome measure_both(const TwoQubitState& s, RandomSource& rng);

struct DiagonalOutcome {
    int sign;                // +1 for |+>, -1 for |->
    TwoQubitState collapsed; // renormalized post-measurement state
};

/// Projective measurement of qubit 1 in the {|+>,|->} basis. Returns the
/// sign outcome and the collapsed two-qubit state.
DiagonalOutcome measure_first_diagonal(const TwoQubitState& s, RandomSource& rng);

/// Probability of each joint outcome, indexed as amps.
std::array<double, 4> outcome_probabilities(const TwoQubitState& s);

/// 2*|det A| with A[q1][q2] = amps[2*q1+q2]. Zero for product states, one
/// for maximally entangled states; the pure-state equivalent of the
/// Peres-Horodecki test.
double concurrence(const TwoQubitState& s);

Complex inner_product(const TwoQubitState& a, const TwoQubitState& b);

double norm(const TwoQubitState& s);

/// True iff |<a|b>| >= 1 - tol, i.e. equal up to a global phase.
bool states_equal_up_to_phase(const TwoQubitState& a, const TwoQubitState& b, double tol);

}  // namespace dsqc

#endif
