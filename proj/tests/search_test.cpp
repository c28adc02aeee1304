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

#include "acausal/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "acausal/error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace acausal;
using acausal::testing::fixture_process;
using acausal::testing::random_table;

namespace {

SymmetryElement random_element(std::size_t n, std::mt19937_64 &rng) {
    SymmetryElement g;
    g.permutation.resize(n);
    std::iota(g.permutation.begin(), g.permutation.end(), 0);
    std::shuffle(g.permutation.begin(), g.permutation.end(), rng);
    std::uniform_int_distribution<Word> d(0, full_mask(n));
    g.input_flip = d(rng);
    g.output_flip = d(rng);
    return g;
}

// Shared across tests; the n=3 sweep takes a fraction of a second.
const std::vector<ProcessTable> &three_party_processes() {
    static const std::vector<ProcessTable> all = enumerate_classical_processes(3, 4);
    return all;
}

}  // namespace

TEST(Enumerate, one_party_gives_the_constants) {
    EXPECT_EQ(enumerate_classical_processes(1),
              (std::vector<ProcessTable>{ProcessTable(1, {0, 0}), ProcessTable(1, {1, 1})}));
}

TEST(Enumerate, two_parties_have_a_global_past) {
    const SearchReport r = enumerate_report(2);
    EXPECT_EQ(r.total_candidates, 256u);
    EXPECT_EQ(r.process_count, 12u);
    EXPECT_EQ(r.no_global_past_count, 0u);
    EXPECT_TRUE(r.representatives.empty());
    for (const ProcessTable &w : enumerate_classical_processes(2)) {
        EXPECT_FALSE(has_no_global_past(w));
    }
}

TEST(Enumerate, three_parties_contain_afbw) {
    const auto &all = three_party_processes();
    EXPECT_EQ(all.size(), 744u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_NE(std::find(all.begin(), all.end(), afbw()), all.end());
    const auto ngp = enumerate_no_global_past(3, 2);
    EXPECT_EQ(ngp.size(), 64u);
    EXPECT_NE(std::find(ngp.begin(), ngp.end(), afbw()), ngp.end());
}

TEST(Enumerate, every_result_is_classical) {
    for (const ProcessTable &w : three_party_processes()) {
        ASSERT_TRUE(is_classical_process(w));
    }
}

TEST(Enumerate, independent_of_jobs) {
    EXPECT_EQ(enumerate_classical_processes(2, 1), enumerate_classical_processes(2, 3));
    EXPECT_EQ(enumerate_classical_processes(3, 1), three_party_processes());
    const SearchReport a = enumerate_report(3, 1);
    const SearchReport b = enumerate_report(3, 4);
    EXPECT_EQ(a.process_count, b.process_count);
    EXPECT_EQ(a.no_global_past_count, b.no_global_past_count);
    EXPECT_EQ(a.representatives, b.representatives);
}

TEST(Enumerate, rejects_large_n) {
    EXPECT_THROW(enumerate_classical_processes(4), InputError);
    EXPECT_THROW(enumerate_classical_processes(0), InputError);
}

TEST(Canonicalize, three_party_no_global_past_is_one_class) {
    const SearchReport r = enumerate_report(3);
    EXPECT_EQ(r.canonical_class_count, 1u);
    ASSERT_EQ(r.representatives.size(), 1u);
    EXPECT_EQ(r.representatives[0], canonicalize(afbw()));
}

TEST(Canonicalize, idempotent_and_orbit_invariant) {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const ProcessTable w = random_table(n, rng);
        const ProcessTable c = canonicalize(w);
        EXPECT_EQ(canonicalize(c), c);
        EXPECT_LE(c, w);
        EXPECT_EQ(canonicalize(transform(w, random_element(n, rng))), c);
    }
}

TEST(Transform, identity_element) {
    SymmetryElement id{{0, 1, 2}, 0, 0};
    EXPECT_EQ(transform(afbw(), id), afbw());
    EXPECT_THROW(transform(afbw(), SymmetryElement{{0, 0, 2}, 0, 0}), InputError);
    EXPECT_THROW(transform(afbw(), SymmetryElement{{0, 1}, 0, 0}), InputError);
}

TEST(Transform, cyclic_shift_fixes_afbw) {
    // a=(y+1)z, b=(z+1)x, c=(x+1)y is invariant under relabelling x->y->z->x.
    EXPECT_EQ(transform(afbw(), SymmetryElement{{1, 2, 0}, 0, 0}), afbw());
}

TEST(Transform, preserves_process_properties) {
    std::mt19937_64 rng(83);
    const auto &all = three_party_processes();
    for (int trial = 0; trial < 100; ++trial) {
        const ProcessTable &w = all[rng() % all.size()];
        const ProcessTable g = transform(w, random_element(3, rng));
        EXPECT_TRUE(is_classical_process(g));
        EXPECT_EQ(has_no_global_past(g), has_no_global_past(w));
    }
    const ProcessTable w4 = fixture_process("ardehali_svetlichny4.ens");
    for (int trial = 0; trial < 20; ++trial) {
        const ProcessTable g = transform(w4, random_element(4, rng));
        EXPECT_TRUE(is_classical_process(g));
        EXPECT_TRUE(has_no_global_past(g));
    }
}

TEST(Checker, agrees_with_verifier) {
    std::mt19937_64 rng(89);
    for (std::size_t n = 1; n <= 3; ++n) {
        const ClassicalProcessChecker check(n);
        for (int trial = 0; trial < 3000; ++trial) {
            const ProcessTable w = random_table(n, rng);
            ASSERT_EQ(check(w.rows()), is_classical_process(w));
        }
    }
    for (const ProcessTable &w : three_party_processes()) {
        ASSERT_TRUE(ClassicalProcessChecker(3)(w.rows()));
    }
    EXPECT_TRUE(ClassicalProcessChecker(4)(fixture_process("afbw_generalized4.ens").rows()));
    EXPECT_THROW(ClassicalProcessChecker(7), InputError);
}

TEST(Sample, deterministic_and_independent_of_jobs) {
    const SearchReport a = sample_functions(3, 200000, 42, 10, {}, 1);
    const SearchReport b = sample_functions(3, 200000, 42, 10, {}, 4);
    EXPECT_EQ(a.total_candidates, 200000u);
    EXPECT_EQ(a.process_count, b.process_count);
    EXPECT_EQ(a.no_global_past_count, b.no_global_past_count);
    EXPECT_EQ(a.representatives, b.representatives);
    EXPECT_GT(a.process_count, 0u);
    EXPECT_LE(a.representatives.size(), 10u);
    for (const ProcessTable &w : a.representatives) {
        EXPECT_TRUE(is_classical_process(w));
    }
}

TEST(Sample, zero_count) {
    const SearchReport r = sample_functions(4, 0, 1);
    EXPECT_EQ(r.total_candidates, 0u);
    EXPECT_EQ(r.process_count, 0u);
    EXPECT_TRUE(r.representatives.empty());
}

TEST(Sample, injected_tables_are_examined) {
    const ProcessTable w = fixture_process("ardehali_svetlichny4.ens");
    const std::vector<ProcessTable> injected{w};
    const SearchReport r = sample_functions(4, 1000, 3, 100, injected);
    EXPECT_EQ(r.total_candidates, 1001u);
    EXPECT_GE(r.process_count, 1u);
    EXPECT_GE(r.no_global_past_count, 1u);
    EXPECT_NE(std::find(r.representatives.begin(), r.representatives.end(), w), r.representatives.end());
    EXPECT_THROW(sample_functions(3, 10, 3, 100, injected), InputError);
}
