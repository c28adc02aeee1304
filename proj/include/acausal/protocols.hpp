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

// The two protocols linking a process w with the basis S_w = {H^{w(x)}|x>}.
//
// Measurement: every party receives a bit from w, applies H if it is 1,
// measures in the computational basis, feeds the outcome back into w and
// undoes the H. Consistency of the loop forces basis == w(outcome), so the
// protocol is simulated by its fixed-point solution: outcome x occurs with
// probability |<x| H^{w(x)} |psi>|^2 and leaves the state H^{w(x)}|x>.
//
// Channel: the parties encode their bits as |x>, measure in S_w and map each
// returned qubit label through f = {0,1 -> 0; +,- -> 1}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "acausal/boolean_process.hpp"
#include "acausal/ensemble.hpp"
#include "acausal/error.hpp"
#include "acausal/statevector.hpp"

namespace acausal {

/// S_w is not orthonormal, so the measurement protocol does not define a
/// probability distribution.
class NonOrthonormalError : public InputError {
   public:
    using InputError::InputError;
};

struct MeasurementRecord {
    /// Bits received from the process; which qubits got a Hadamard.
    Word basis = 0;
    /// Computational-basis outcome fed back into the process.
    Word outcome = 0;

    StateLabel label(std::size_t n) const {
        return StateLabel::from_bits(n, basis, outcome);
    }
    bool operator==(const MeasurementRecord &) const = default;
};

struct WeightedRecord {
    MeasurementRecord record;
    double probability = 0.0;
};

/// One entry per outcome x in ascending order: record (w(x), x) with weight
/// |<x|H^{w(x)}|psi>|^2. Throws NonOrthonormalError when S_w is not
/// orthonormal unless `force` is set, in which case the raw weights are
/// returned and need not sum to 1.
std::vector<WeightedRecord> measurement_distribution(const ProcessTable &w, const StateVector &psi,
                                                     bool force = false);

/// One record drawn from measurement_distribution with sample(., seed).
MeasurementRecord run_measurement(const ProcessTable &w, const StateVector &psi, std::uint64_t seed);

/// Prepares state `secret` of ensemble_from_process(w), runs the measurement
/// and returns the index of the ensemble state matching the record.
std::size_t discriminate(const ProcessTable &w, std::size_t secret, std::uint64_t seed);

struct DiscriminationTally {
    StateLabel label;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
};

/// `trials` runs of discriminate for every ensemble state. Trial t of state s
/// uses derive_seed(seed, s * trials + t); results do not depend on `jobs`.
std::vector<DiscriminationTally> discrimination_tally(const ProcessTable &w, std::uint64_t trials,
                                                      std::uint64_t seed, std::size_t jobs = 1);

/// f on one label character: 0 for '0' and '1', 1 for '+' and '-'.
bool label_bit(char c);

/// f applied per position.
Word apply_label_map(const StateLabel &label);

/// Output distribution of the channel for the given input bits, indexed by
/// output word.
std::vector<double> channel_distribution(const ProcessTable &w, Word input);

struct ChannelRun {
    Word input = 0;
    StateLabel labels;
    Word output = 0;
};

/// One sampled pass through the channel.
ChannelRun run_channel(const ProcessTable &w, Word input, std::uint64_t seed);

struct ChannelViolation {
    Word input = 0;
    std::vector<double> distribution;
};

struct FaithfulnessReport {
    bool faithful = false;
    std::vector<ChannelViolation> violations;
};

/// Faithful iff every input's output distribution is a point mass at w(input),
/// each probability within `tol` of 0 or 1.
FaithfulnessReport channel_is_faithful(const ProcessTable &w, double tol = 1e-9);

}  // namespace acausal
