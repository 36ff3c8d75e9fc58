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

#include "dsqc/qsim.hpp"

#include <cmath>
#include <stdexcept>

namespace dsqc {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

void require_qubit_index(int qubit) {
    if (qubit != 1 && qubit != 2) {
        throw std::invalid_argument("qubit index must be 1 or 2");
    }
}

}  // namespace

TwoQubitState prepare(int q1, int q2) {
    if ((q1 & ~1) != 0 || (q2 & ~1) != 0) {
        throw std::invalid_argument("prepare: bits must be 0 or 1");
    }
    TwoQubitState s;
    s.amps[static_cast<std::size_t>(2 * q1 + q2)] = 1.0;
    return s;
}

TwoQubitState apply_hadamard(const TwoQubitState& s, int qubit) {
    require_qubit_index(qubit);
    TwoQubitState out;
    if (qubit == 1) {
        for (int y = 0; y < 2; ++y) {
            const Complex a0 = s.amps[static_cast<std::size_t>(y)];
            const Complex a1 = s.amps[static_cast<std::size_t>(2 + y)];
            out.amps[static_cast<std::size_t>(y)] = (a0 + a1) * kInvSqrt2;
            out.amps[static_cast<std::size_t>(2 + y)] = (a0 - a1) * kInvSqrt2;
        }
    } else {
        for (int x = 0; x < 2; ++x) {
            const Complex a0 = s.amps[static_cast<std::size_t>(2 * x)];
            const Complex a1 = s.amps[static_cast<std::size_t>(2 * x + 1)];
            out.amps[static_cast<std::size_t>(2 * x)] = (a0 + a1) * kInvSqrt2;
            out.amps[static_cast<std::size_t>(2 * x + 1)] = (a0 - a1) * kInvSqrt2;
        }
    }
    return out;
}

TwoQubitState apply_cz(const TwoQubitState& s) {
    TwoQubitState out = s;
    out.amps[3] = -out.amps[3];
    return out;
}

TwoQubitState apply_pauli(const TwoQubitState& s, int qubit, Pauli p) {
    require_qubit_index(qubit);
    TwoQubitState out = s;
    const Complex i(0.0, 1.0);
    // Index pairs (|0>, |1>) of the target qubit for each value of the other.
    const int stride = (qubit == 1) ? 2 : 1;
    const int other = (qubit == 1) ? 1 : 2;
    for (int k = 0; k < 2; ++k) {
        const std::size_t lo = static_cast<std::size_t>(k * other);
        const std::size_t hi = lo + static_cast<std::size_t>(stride);
        switch (p) {
            case Pauli::X:
                std::swap(out.amps[lo], out.amps[hi]);
                break;
            case Pauli::Y: {
                const Complex a0 = out.amps[lo];
                out.amps[lo] = -i * out.amps[hi];
                out.amps[hi] = i * a0;
                break;
            }
            case Pauli::Z:
                out.amps[hi] = -out.amps[hi];
                break;
        }
    }
    return out;
}

std::array<double, 4> outcome_probabilities(const TwoQubitState& s) {
    std::array<double, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) {
        p[k] = std::norm(s.amps[k]);
    }
    return p;
}

JointOutcome measure_both(const TwoQubitState& s, RandomSource& rng) {
    const std::array<double, 4> p = outcome_probabilities(s);
    const double u = rng.next_real() * (p[0] + p[1] + p[2] + p[3]);
    double acc = 0.0;
    std::size_t idx = 3;
    for (std::size_t k = 0; k < 4; ++k) {
        acc += p[k];
        if (u < acc) {
            idx = k;
            break;
        }
    }
    return JointOutcome{static_cast<int>(idx >> 1), static_cast<int>(idx & 1)};
}

DiagonalOutcome measure_first_diagonal(const TwoQubitState& s, RandomSource& rng) {
    // Components of qubit 1 along |+> and |-> for each value of qubit 2.
    std::array<Complex, 2> plus{}, minus{};
    for (int y = 0; y < 2; ++y) {
        const Complex a0 = s.amps[static_cast<std::size_t>(y)];
        const Complex a1 = s.amps[static_cast<std::size_t>(2 + y)];
        plus[static_cast<std::size_t>(y)] = (a0 + a1) * kInvSqrt2;
        minus[static_cast<std::size_t>(y)] = (a0 - a1) * kInvSqrt2;
    }
    const double p_plus = std::norm(plus[0]) + std::norm(plus[1]);
    const double p_minus = std::norm(minus[0]) + std::norm(minus[1]);
    const bool got_plus = rng.next_real() * (p_plus + p_minus) < p_plus;

    const std::array<Complex, 2>& kept = got_plus ? plus : minus;
    const double inv = 1.0 / std::sqrt(got_plus ? p_plus : p_minus);
    TwoQubitState collapsed;
    for (int y = 0; y < 2; ++y) {
        const Complex c = kept[static_cast<std::size_t>(y)] * inv * kInvSqrt2;
        collapsed.amps[static_cast<std::size_t>(y)] = c;
        collapsed.amps[static_cast<std::size_t>(2 + y)] = got_plus ? c : -c;
    }
    return DiagonalOutcome{got_plus ? +1 : -1, collapsed};
}

double concurrence(const TwoQubitState& s) {
    return 2.0 * std::abs(s.amps[0] * s.amps[3] - s.amps[1] * s.amps[2]);
}

Complex inner_product(const TwoQubitState& a, const TwoQubitState& b) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        acc += std::conj(a.amps[k]) * b.amps[k];
    }
    return acc;
}

double norm(const TwoQubitState& s) {
    double acc = 0.0;
    for (const Complex& a : s.amps) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

bool states_equal_up_to_phase(const TwoQubitState& a, const TwoQubitState& b, double tol) {
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace dsqc
