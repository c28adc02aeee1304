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

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace acausal;
using acausal::testing::fixture_process;
using acausal::testing::random_table;

namespace {

StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (Amplitude &a : amps) {
        a = {g(rng), g(rng)};
    }
    return StateVector::normalized(n, std::move(amps));
}

ProcessTable random_classical(std::size_t n, std::mt19937_64 &rng) {
    while (true) {
        ProcessTable w = random_table(n, rng);
        if (is_classical_process(w)) {
            return w;
        }
    }
}

}  // namespace

TEST(Measurement, afbw_on_001) {
    const auto dist = measurement_distribution(afbw(), StateVector::basis_state(3, parse_bits("001")));
    double total = 0.0;
    for (const WeightedRecord &r : dist) {
        const std::string label = r.record.label(3).str();
        if (label == "+01" || label == "-01") {
            EXPECT_NEAR(r.probability, 0.5, 1e-12) << label;
        } else {
            EXPECT_NEAR(r.probability, 0.0, 1e-12) << label;
        }
        total += r.probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Measurement, records_follow_the_process) {
    const ProcessTable w = afbw();
    const auto dist = measurement_distribution(w, StateVector::basis_state(3, 0));
    for (Word x = 0; x < w.size(); ++x) {
        EXPECT_EQ(dist[x].record.outcome, x);
        EXPECT_EQ(dist[x].record.basis, w[x]);
    }
}

TEST(Measurement, agrees_with_born_rule_oracle) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const ProcessTable w = random_classical(n, rng);
        const StateVector psi = random_state(n, rng);
        const Ensemble e = ensemble_from_process(w);
        std::vector<std::string> labels;
        for (const StateLabel &s : e.states()) {
            labels.push_back(s.str());
        }
        const auto ref = oracle::born_distribution(
            labels, std::vector<oracle::Cplx>(psi.amplitudes().begin(), psi.amplitudes().end()));
        const auto dist = measurement_distribution(w, psi);
        double total = 0.0;
        for (std::size_t k = 0; k < dist.size(); ++k) {
            EXPECT_NEAR(dist[k].probability, ref[k], 1e-12);
            total += dist[k].probability;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Measurement, sampled_record_is_consistent) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const ProcessTable w = random_classical(n, rng);
        const MeasurementRecord r = run_measurement(w, random_state(n, rng), trial);
        EXPECT_EQ(w[r.outcome], r.basis);
    }
}

TEST(Measurement, input_checks) {
    EXPECT_THROW(measurement_distribution(afbw(), StateVector::basis_state(2, 0)), InputError);
    EXPECT_THROW(measurement_distribution(afbw(), StateVector(3, std::vector<Amplitude>(8, 1.0))), InputError);
}

TEST(Measurement, non_orthonormal_needs_force) {
    const ProcessTable w(1, {1, 0});  // states "+" and "1"
    const StateVector psi = StateVector::basis_state(1, 0);
    EXPECT_THROW(measurement_distribution(w, psi), NonOrthonormalError);
    const auto forced = measurement_distribution(w, psi, true);
    EXPECT_NEAR(forced[0].probability, 0.5, 1e-12);
    EXPECT_NEAR(forced[1].probability, 0.0, 1e-12);
}

TEST(Discrimination, perfect_on_afbw) {
    for (std::size_t secret = 0; secret < 8; ++secret) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            EXPECT_EQ(discriminate(afbw(), secret, seed), secret);
        }
    }
    EXPECT_THROW(discriminate(afbw(), 8, 0), InputError);
}

TEST(Discrimination, tally_is_perfect_and_independent_of_jobs) {
    const ProcessTable w = fixture_process("ardehali_svetlichny4.ens");
    const auto one = discrimination_tally(w, 200, 5, 1);
    const auto four = discrimination_tally(w, 200, 5, 4);
    ASSERT_EQ(one.size(), 16u);
    for (std::size_t s = 0; s < one.size(); ++s) {
        EXPECT_EQ(one[s].successes, 200u);
        EXPECT_EQ(one[s].label, four[s].label);
        EXPECT_EQ(one[s].successes, four[s].successes);
    }
}

TEST(Discrimination, random_classical_processes) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const ProcessTable w = random_classical(1 + trial % 3, rng);
        for (const DiscriminationTally &t : discrimination_tally(w, 50, trial)) {
            EXPECT_EQ(t.successes, t.trials);
        }
    }
}

TEST(Channel, label_map) {
    EXPECT_FALSE(label_bit('0'));
    EXPECT_FALSE(label_bit('1'));
    EXPECT_TRUE(label_bit('+'));
    EXPECT_TRUE(label_bit('-'));
    EXPECT_EQ(apply_label_map(StateLabel("+1-0")), parse_bits("1010"));
}

TEST(Channel, afbw_is_faithful) {
    const auto d = channel_distribution(afbw(), parse_bits("001"));
    EXPECT_NEAR(d[parse_bits("100")], 1.0, 1e-12);
    const FaithfulnessReport report = channel_is_faithful(afbw());
    EXPECT_TRUE(report.faithful);
    EXPECT_TRUE(report.violations.empty());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ChannelRun run = run_channel(afbw(), parse_bits("001"), seed);
        EXPECT_EQ(run.output, parse_bits("100"));
    }
}

TEST(Channel, four_party_fixtures) {
    EXPECT_FALSE(channel_is_faithful(fixture_process("ardehali_svetlichny4.ens")).faithful);
    EXPECT_TRUE(channel_is_faithful(fixture_process("afbw_generalized4.ens")).faithful);
}

TEST(Channel, distributions_are_normalized) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const ProcessTable w = random_classical(n, rng);
        for (Word x = 0; x < w.size(); ++x) {
            double total = 0.0;
            for (double p : channel_distribution(w, x)) {
                total += p;
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
        }
    }
}
