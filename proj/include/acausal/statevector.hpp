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

// Dense n-qubit state vectors, only as much as the protocols need: product
// state preparation, layers of Hadamards, overlaps and computational-basis
// measurement.
//
// Amplitude index is the computational-basis word with qubit 0 as the most
// significant bit, matching the party order everywhere else.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "acausal/bits.hpp"
#include "acausal/ensemble.hpp"

namespace acausal {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 12;

class StateVector {
   public:
    /// Unchecked: takes amplitudes as given. Throws InputError only on a size
    /// that is not 2^n or on n outside 1..kMaxQubits.
    StateVector(std::size_t n, std::vector<Amplitude> amps);

    /// Requires |norm^2 - 1| <= tol.
    static StateVector from_amplitudes(std::size_t n, std::vector<Amplitude> amps, double tol = 1e-9);

    /// Rescales to unit norm; throws on the zero vector.
    static StateVector normalized(std::size_t n, std::vector<Amplitude> amps);

    static StateVector basis_state(std::size_t n, Word x);

    std::size_t qubits() const {
        return n_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }

    double norm_squared() const;

   private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

/// Tensor product of the single-qubit states in `label`.
StateVector from_label(const StateLabel &label);

/// H on every qubit whose bit is set in `mask`.
StateVector apply_hadamards(const StateVector &psi, Word mask);

/// <phi|psi>.
Amplitude overlap(const StateVector &phi, const StateVector &psi);

/// Probability per computational-basis outcome.
class OutcomeDistribution {
   public:
    /// Requires non-negative entries summing to 1 within `tol`.
    explicit OutcomeDistribution(std::vector<double> probs, double tol = 1e-9);

    std::size_t size() const {
        return probs_.size();
    }
    double operator[](std::size_t i) const {
        return probs_[i];
    }
    std::span<const double> probabilities() const {
        return probs_;
    }

   private:
    std::vector<double> probs_;
};

/// |amps[x]|^2. Throws InputError when psi's norm is off by more than 1e-6.
OutcomeDistribution computational_distribution(const StateVector &psi);

/// Inverse-CDF draw with SplitMix64(seed).uniform(); entries with zero
/// probability are never returned.
Word sample(const OutcomeDistribution &d, std::uint64_t seed);

/// Inverse-CDF lookup for a given u in [0, 1). Exposed for tests.
Word sample_at(std::span<const double> probs, double u);

/// Dense square matrix, row-major.
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<Amplitude> entries;

    const Amplitude &operator()(std::size_t r, std::size_t c) const {
        return entries[r * dim + c];
    }
};

/// Entry (j, k) = <E_j|E_k>.
ComplexMatrix gram_matrix(const Ensemble &e);

/// max_r sum_c |M(r,c) - delta(r,c)|, the induced infinity norm of M - I.
double identity_deviation(const ComplexMatrix &m);

}  // namespace acausal
