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

#include "acausal/protocols.hpp"

#include <cmath>
#include <optional>
#include <thread>

#include "acausal/error.hpp"
#include "acausal/rng.hpp"

namespace acausal {

namespace {

void require_orthonormal(const ProcessTable &w) {
    const Ensemble e = ensemble_from_process(w);
    if (auto pair = first_non_orthogonal_pair(e)) {
        throw NonOrthonormalError("ensemble of the process is not orthonormal: '" + e[pair->first].str() +
                                  "' and '" + e[pair->second].str() + "' overlap");
    }
}

std::vector<double> weights_only(const std::vector<WeightedRecord> &records) {
    std::vector<double> probs(records.size());
    for (std::size_t k = 0; k < records.size(); ++k) {
        probs[k] = records[k].probability;
    }
    return probs;
}

std::vector<WeightedRecord> unchecked_distribution(const ProcessTable &w, const StateVector &psi) {
    // <x|H^m|psi> is entry x of H^m|psi>; one Hadamard layer per distinct basis.
    std::vector<std::optional<StateVector>> rotated(w.size());
    std::vector<WeightedRecord> out(w.size());
    for (Word x = 0; x < w.size(); ++x) {
        const Word basis = w[x];
        if (!rotated[basis]) {
            rotated[basis] = apply_hadamards(psi, basis);
        }
        out[x] = WeightedRecord{{basis, x}, std::norm((*rotated[basis])[x])};
    }
    return out;
}

}  // namespace

std::vector<WeightedRecord> measurement_distribution(const ProcessTable &w, const StateVector &psi, bool force) {
    if (w.parties() != psi.qubits()) {
        throw InputError("process has " + std::to_string(w.parties()) + " parties, state has " +
                         std::to_string(psi.qubits()) + " qubits");
    }
    if (std::abs(psi.norm_squared() - 1.0) > 1e-6) {
        throw InputError("state is not normalized (norm^2 = " + std::to_string(psi.norm_squared()) + ")");
    }
    if (!force) {
        require_orthonormal(w);
    }
    return unchecked_distribution(w, psi);
}

MeasurementRecord run_measurement(const ProcessTable &w, const StateVector &psi, std::uint64_t seed) {
    const std::vector<WeightedRecord> dist = measurement_distribution(w, psi);
    SplitMix64 rng(seed);
    return dist[sample_at(weights_only(dist), rng.uniform())].record;
}

namespace {

std::size_t identify(const ProcessTable &w, const MeasurementRecord &r) {
    // State x of S_w is H^{w(x)}|x>, so the outcome names the index.
    if (w[r.outcome] != r.basis) {
        throw std::logic_error("measurement record inconsistent with the process");
    }
    return r.outcome;
}

StateVector ensemble_state(const ProcessTable &w, std::size_t index) {
    if (index >= w.size()) {
        throw InputError("ensemble index " + std::to_string(index) + " out of range for " +
                         std::to_string(w.size()) + " states");
    }
    const Word x = static_cast<Word>(index);
    return from_label(StateLabel::from_bits(w.parties(), w[x], x));
}

}  // namespace

std::size_t discriminate(const ProcessTable &w, std::size_t secret, std::uint64_t seed) {
    return identify(w, run_measurement(w, ensemble_state(w, secret), seed));
}

std::vector<DiscriminationTally> discrimination_tally(const ProcessTable &w, std::uint64_t trials,
                                                      std::uint64_t seed, std::size_t jobs) {
    require_orthonormal(w);
    const Ensemble e = ensemble_from_process(w);
    std::vector<DiscriminationTally> tallies;
    tallies.reserve(e.size());
    for (const StateLabel &s : e.states()) {
        tallies.push_back({s, trials, 0});
    }

    // The protocol's outcome distribution for a fixed input state does not
    // change between trials; each trial draws from it with its own seed.
    auto run_state = [&](std::size_t secret) {
        const std::vector<WeightedRecord> dist = unchecked_distribution(w, ensemble_state(w, secret));
        const std::vector<double> probs = weights_only(dist);
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            SplitMix64 rng(derive_seed(seed, secret * trials + t));
            hits += identify(w, dist[sample_at(probs, rng.uniform())].record) == secret;
        }
        tallies[secret].successes = hits;
    };

    jobs = std::max<std::size_t>(1, std::min(jobs, e.size()));
    if (jobs == 1) {
        for (std::size_t s = 0; s < e.size(); ++s) {
            run_state(s);
        }
        return tallies;
    }
    std::vector<std::jthread> workers;
    for (std::size_t j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
            for (std::size_t s = j; s < e.size(); s += jobs) {
                run_state(s);
            }
        });
    }
    workers.clear();
    return tallies;
}

bool label_bit(char c) {
    return c == '+' || c == '-';
}

Word apply_label_map(const StateLabel &label) {
    Word out = 0;
    for (char c : label.str()) {
        out = (out << 1) | Word(label_bit(c));
    }
    return out;
}

std::vector<double> channel_distribution(const ProcessTable &w, Word input) {
    const StateVector psi = StateVector::basis_state(w.parties(), input);
    std::vector<double> out(w.size(), 0.0);
    for (const WeightedRecord &wr : measurement_distribution(w, psi)) {
        out[apply_label_map(wr.record.label(w.parties()))] += wr.probability;
    }
    return out;
}

ChannelRun run_channel(const ProcessTable &w, Word input, std::uint64_t seed) {
    const MeasurementRecord r = run_measurement(w, StateVector::basis_state(w.parties(), input), seed);
    StateLabel labels = r.label(w.parties());
    const Word output = apply_label_map(labels);
    return ChannelRun{input, std::move(labels), output};
}

FaithfulnessReport channel_is_faithful(const ProcessTable &w, double tol) {
    FaithfulnessReport report;
    for (Word x = 0; x < w.size(); ++x) {
        std::vector<double> dist = channel_distribution(w, x);
        bool point_mass = true;
        for (Word out = 0; out < dist.size(); ++out) {
            const double target = out == w[x] ? 1.0 : 0.0;
            point_mass = point_mass && std::abs(dist[out] - target) <= tol;
        }
        if (!point_mass) {
            report.violations.push_back({x, std::move(dist)});
        }
    }
    report.faithful = report.violations.empty();
    return report;
}

}  // namespace acausal
