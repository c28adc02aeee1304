// Copyright 2026 The acausal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "acausal/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "acausal/error.hpp"
#include "acausal/rng.hpp"

namespace acausal {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_qubits(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw InputError("qubit count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxQubits));
    }
}

}  // namespace

StateVector::StateVector(std::size_t n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {
    check_qubits(n_);
    if (amps_.size() != (std::size_t{1} << n_)) {
        throw InputError("state vector for n=" + std::to_string(n_) + " needs " +
                         std::to_string(std::size_t{1} << n_) + " amplitudes, got " + std::to_string(amps_.size()));
    }
}

StateVector StateVector::from_amplitudes(std::size_t n, std::vector<Amplitude> amps, double tol) {
    StateVector psi(n, std::move(amps));
    const double norm2 = psi.norm_squared();
    if (std::abs(norm2 - 1.0) > tol) {
        throw InputError("state vector norm^2 " + std::to_string(norm2) + " is not 1");
    }
    return psi;
}

StateVector StateVector::normalized(std::size_t n, std::vector<Amplitude> amps) {
    StateVector psi(n, std::move(amps));
    const double norm = std::sqrt(psi.norm_squared());
    if (norm == 0.0) {
        throw InputError("cannot normalize the zero vector");
    }
    for (Amplitude &a : psi.amps_) {
        a /= norm;
    }
    return psi;
}

StateVector StateVector::basis_state(std::size_t n, Word x) {
    check_qubits(n);
    if (x > full_mask(n)) {
        throw InputError("basis index " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[x] = 1.0;
    return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

StateVector from_label(const StateLabel &label) {
    const std::size_t n = label.parties();
    check_qubits(n);
    const Word basis = label.basisbits();
    const Word x = label.xbits();
    const double magnitude = std::pow(kInvSqrt2, std::popcount(basis));

    // Computational positions must match x; Hadamard positions take either
    // value, with a minus sign for each '-' qubit sitting at 1.
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (Word k = 0; k < amps.size(); ++k) {
        if (((k ^ x) & ~basis & full_mask(n)) != 0) {
            continue;
        }
        const bool negative = std::popcount(k & x & basis) % 2 == 1;
        amps[k] = negative ? -magnitude : magnitude;
    }
    return StateVector(n, std::move(amps));
}

StateVector apply_hadamards(const StateVector &psi, Word mask) {
    const std::size_t n = psi.qubits();
    if (mask > full_mask(n)) {
        throw InputError("hadamard mask " + std::to_string(mask) + " out of range for n=" + std::to_string(n));
    }
    std::vector<Amplitude> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t q = 0; q < n; ++q) {
        const Word stride = party_mask(n, q);
        if ((mask & stride) == 0) {
            continue;
        }
        for (Word j = 0; j < amps.size(); ++j) {
            if ((j & stride) != 0) {
                continue;
            }
            const Amplitude lo = amps[j];
            const Amplitude hi = amps[j | stride];
            amps[j] = (lo + hi) * kInvSqrt2;
            amps[j | stride] = (lo - hi) * kInvSqrt2;
        }
    }
    return StateVector(n, std::move(amps));
}

Amplitude overlap(const StateVector &phi, const StateVector &psi) {
    if (phi.qubits() != psi.qubits()) {
        throw InputError("overlap of " + std::to_string(phi.qubits()) + "- and " + std::to_string(psi.qubits()) +
                         "-qubit states");
    }
    Amplitude total = 0.0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        total += std::conj(phi[k]) * psi[k];
    }
    return total;
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs, double tol) : probs_(std::move(probs)) {
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw InputError("negative or NaN probability " + std::to_string(p));
        }
        total += p;
    }
    if (std::abs(total - 1.0) > tol) {
        throw InputError("probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

OutcomeDistribution computational_distribution(const StateVector &psi) {
    if (std::abs(psi.norm_squared() - 1.0) > 1e-6) {
        throw InputError("state is not normalized (norm^2 = " + std::to_string(psi.norm_squared()) + ")");
    }
    std::vector<double> probs(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k) {
        probs[k] = std::norm(psi[k]);
    }
    return OutcomeDistribution(std::move(probs), 1e-6);
}

Word sample_at(std::span<const double> probs, double u) {
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] <= 0.0) {
            continue;
        }
        last_positive = k;
        cumulative += probs[k];
        if (u < cumulative) {
            return static_cast<Word>(k);
        }
    }
    // u landed in the rounding slack above the final cumulative sum.
    return static_cast<Word>(last_positive);
}

Word sample(const OutcomeDistribution &d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return sample_at(d.probabilities(), rng.uniform());
}

ComplexMatrix gram_matrix(const Ensemble &e) {
    std::vector<StateVector> vecs;
    vecs.reserve(e.size());
    for (const StateLabel &s : e.states()) {
        vecs.push_back(from_label(s));
    }
    ComplexMatrix m{e.size(), std::vector<Amplitude>(e.size() * e.size())};
    for (std::size_t j = 0; j < e.size(); ++j) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            m.entries[j * m.dim + k] = overlap(vecs[j], vecs[k]);
        }
    }
    return m;
}

double identity_deviation(const ComplexMatrix &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim; ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < m.dim; ++c) {
            row += std::abs(m(r, c) - Amplitude(r == c ? 1.0 : 0.0));
        }
        worst = std::max(worst, row);
    }
    return worst;
}

}  // namespace acausal
