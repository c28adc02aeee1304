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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "acausal/boolean_process.hpp"

namespace acausal {

inline constexpr std::size_t kMaxEnumerateParties = 3;
inline constexpr std::size_t kMaxCanonicalParties = 6;
inline constexpr std::size_t kMaxSampleParties = 12;

/// Element of the symmetry group acting on processes:
///
///     (g.w)(x) = P(w(P^-1(x) ^ input_flip)) ^ output_flip
///
/// where P moves party i to position permutation[i].
struct SymmetryElement {
    std::vector<std::size_t> permutation;
    Word input_flip = 0;
    Word output_flip = 0;
};

ProcessTable transform(const ProcessTable &w, const SymmetryElement &g);

/// Lexicographically smallest table in the orbit of w. Cost n! * 4^n * 2^n;
/// limited to n <= kMaxCanonicalParties.
ProcessTable canonicalize(const ProcessTable &w);

/// Unique-fixed-point test tuned for exhaustive runs: intervention masks are
/// precomputed (all-constant interventions are skipped, they always have
/// exactly one fixed point) and each count aborts at the second hit. Agrees
/// with is_classical_process on every table.
class ClassicalProcessChecker {
   public:
    explicit ClassicalProcessChecker(std::size_t n);

    bool operator()(std::span<const Word> rows) const;

   private:
    std::size_t n_;
    std::vector<Word> read_masks_;
    std::vector<Word> flip_masks_;
};

struct SearchReport {
    std::size_t n = 0;
    std::uint64_t total_candidates = 0;
    std::uint64_t process_count = 0;
    std::uint64_t no_global_past_count = 0;
    /// Distinct canonical forms among the no-global-past processes.
    std::uint64_t canonical_class_count = 0;
    double elapsed_seconds = 0.0;
    /// Enumeration: canonical no-global-past representatives, ascending.
    /// Sampling: the first `cap` processes found, in sample order.
    std::vector<ProcessTable> representatives;
};

/// Every table passing is_classical_process, in lexicographic table order.
/// Requires n <= kMaxEnumerateParties; n = 3 examines 8^8 tables. Work is
/// split by the first table row and merged in row order, so the result is
/// independent of `jobs`.
std::vector<ProcessTable> enumerate_classical_processes(std::size_t n, std::size_t jobs = 1);

/// The subset of enumerate_classical_processes with no global past.
std::vector<ProcessTable> enumerate_no_global_past(std::size_t n, std::size_t jobs = 1);

/// Exhaustive census: counts and canonical representatives of the
/// no-global-past processes.
SearchReport enumerate_report(std::size_t n, std::size_t jobs = 1);

/// Examines `count` uniformly random tables (table i drawn from
/// SplitMix64(derive_seed(seed, i))) followed by `injected`. Counts processes
/// and no-global-past processes; keeps up to `cap` processes.
SearchReport sample_functions(std::size_t n, std::uint64_t count, std::uint64_t seed, std::size_t cap = 100,
                              std::span<const ProcessTable> injected = {}, std::size_t jobs = 1);

}  // namespace acausal
