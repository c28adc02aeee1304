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
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

#include "acausal/error.hpp"
#include "acausal/rng.hpp"

namespace acausal {

namespace {

/// Word-level permutation: moves the bit of party i to position perm[i].
Word permute_word(Word x, std::size_t n, std::span<const std::size_t> perm) {
    Word out = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out = with_party_bit(out, n, perm[i], party_bit(x, n, i));
    }
    return out;
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
    std::vector<std::size_t> sorted(perm.begin(), perm.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) {
        throw InputError("symmetry element: not a permutation of " + std::to_string(n) + " parties");
    }
}

/// Runs body(j) for j in [0, parts) on up to `jobs` threads; body writes
/// only to its own slot.
template <typename F>
void run_partitioned(std::size_t parts, std::size_t jobs, F &&body) {
    jobs = std::max<std::size_t>(1, std::min(jobs, parts));
    if (jobs == 1) {
        for (std::size_t j = 0; j < parts; ++j) {
            body(j);
        }
        return;
    }
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t j = t; j < parts; j += jobs) {
                body(j);
            }
        });
    }
}

}  // namespace

ProcessTable transform(const ProcessTable &w, const SymmetryElement &g) {
    const std::size_t n = w.parties();
    if (g.permutation.size() != n) {
        throw InputError("symmetry element over " + std::to_string(g.permutation.size()) + " parties, process has " +
                         std::to_string(n));
    }
    check_permutation(g.permutation, n);
    const Word mask = full_mask(n);
    if ((g.input_flip & ~mask) != 0 || (g.output_flip & ~mask) != 0) {
        throw InputError("symmetry element flips exceed " + std::to_string(n) + " bits");
    }
    std::vector<Word> rows(w.size());
    // (g.w)(P(y)) = P(w(y ^ s)) ^ t, filled by iterating y = P^-1(x).
    for (Word y = 0; y < w.size(); ++y) {
        rows[permute_word(y, n, g.permutation)] = permute_word(w[y ^ g.input_flip], n, g.permutation) ^ g.output_flip;
    }
    return ProcessTable(n, std::move(rows));
}

ProcessTable canonicalize(const ProcessTable &w) {
    const std::size_t n = w.parties();
    if (n > kMaxCanonicalParties) {
        throw InputError("canonicalize supports n <= " + std::to_string(kMaxCanonicalParties) + ", got " +
                         std::to_string(n));
    }
    const std::size_t size = w.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<Word> best(w.rows().begin(), w.rows().end());
    std::vector<Word> candidate(size);
    std::vector<Word> pmap(size);
    do {
        for (Word y = 0; y < size; ++y) {
            pmap[y] = permute_word(y, n, perm);
        }
        for (Word s = 0; s < size; ++s) {
            for (Word y = 0; y < size; ++y) {
                candidate[pmap[y]] = pmap[w[y ^ s]];
            }
            // The output flip t only XORs every row; the smallest choice
            // zeroes row 0.
            const Word t = candidate[0];
            bool smaller = false;
            for (Word x = 0; x < size; ++x) {
                const Word v = candidate[x] ^ t;
                if (v != best[x]) {
                    smaller = v < best[x];
                    break;
                }
            }
            if (smaller) {
                for (Word x = 0; x < size; ++x) {
                    best[x] = candidate[x] ^ t;
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ProcessTable(n, std::move(best));
}

ClassicalProcessChecker::ClassicalProcessChecker(std::size_t n) : n_(n) {
    if (n < 1 || n > kMaxCanonicalParties) {
        throw InputError("checker supports 1 <= n <= " + std::to_string(kMaxCanonicalParties));
    }
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t index = 0; index < count; ++index) {
        const Intervention mu = Intervention::from_index(n, index);
        if (!mu.is_constant()) {
            read_masks_.push_back(mu.read_mask());
            flip_masks_.push_back(mu.flip_mask());
        }
    }
}

bool ClassicalProcessChecker::operator()(std::span<const Word> rows) const {
    const Word size = static_cast<Word>(rows.size());
    for (std::size_t m = 0; m < read_masks_.size(); ++m) {
        const Word read = read_masks_[m];
        const Word flip = flip_masks_[m];
        unsigned hits = 0;
        for (Word p = 0; p < size; ++p) {
            hits += rows[(p & read) ^ flip] == p;
            if (hits > 1) {
                return false;
            }
        }
        if (hits == 0) {
            return false;
        }
    }
    return true;
}

namespace {

void check_enumerable(std::size_t n) {
    if (n < 1 || n > kMaxEnumerateParties) {
        throw InputError("exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerateParties) +
                         " (n=4 has 16^16 tables); use sampling for larger n");
    }
}

/// Calls visit(rows) for every classical table whose first row is `first`,
/// in lexicographic order.
template <typename Visit>
void scan_partition(std::size_t n, Word first, const ClassicalProcessChecker &check, Visit &&visit) {
    const std::size_t size = std::size_t{1} << n;
    const Word top = static_cast<Word>(size - 1);
    std::vector<Word> rows(size, 0);
    rows[0] = first;
    while (true) {
        if (check(rows)) {
            visit(std::span<const Word>(rows));
        }
        // Odometer over rows 1..size-1, last row fastest.
        std::size_t r = size - 1;
        while (r >= 1 && rows[r] == top) {
            rows[r] = 0;
            --r;
        }
        if (r == 0) {
            return;
        }
        ++rows[r];
    }
}

}  // namespace

std::vector<ProcessTable> enumerate_classical_processes(std::size_t n, std::size_t jobs) {
    check_enumerable(n);
    const ClassicalProcessChecker check(n);
    const std::size_t parts = std::size_t{1} << n;
    std::vector<std::vector<ProcessTable>> found(parts);
    run_partitioned(parts, jobs, [&](std::size_t j) {
        scan_partition(n, static_cast<Word>(j), check, [&](std::span<const Word> rows) {
            found[j].emplace_back(n, std::vector<Word>(rows.begin(), rows.end()));
        });
    });
    std::vector<ProcessTable> out;
    for (auto &part : found) {
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<ProcessTable> enumerate_no_global_past(std::size_t n, std::size_t jobs) {
    std::vector<ProcessTable> out;
    for (ProcessTable &w : enumerate_classical_processes(n, jobs)) {
        if (has_no_global_past(w)) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

SearchReport enumerate_report(std::size_t n, std::size_t jobs) {
    check_enumerable(n);
    const auto start = std::chrono::steady_clock::now();
    const ClassicalProcessChecker check(n);
    const std::size_t parts = std::size_t{1} << n;

    struct Partial {
        std::uint64_t processes = 0;
        std::uint64_t no_global_past = 0;
        std::set<ProcessTable> classes;
    };
    std::vector<Partial> partials(parts);
    run_partitioned(parts, jobs, [&](std::size_t j) {
        Partial &p = partials[j];
        scan_partition(n, static_cast<Word>(j), check, [&](std::span<const Word> rows) {
            ++p.processes;
            ProcessTable w(n, std::vector<Word>(rows.begin(), rows.end()));
            if (has_no_global_past(w)) {
                ++p.no_global_past;
                p.classes.insert(canonicalize(w));
            }
        });
    });

    SearchReport report;
    report.n = n;
    report.total_candidates = 1;
    for (std::size_t r = 0; r < parts; ++r) {
        report.total_candidates *= parts;
    }
    std::set<ProcessTable> classes;
    for (Partial &p : partials) {
        report.process_count += p.processes;
        report.no_global_past_count += p.no_global_past;
        classes.merge(p.classes);
    }
    report.canonical_class_count = classes.size();
    report.representatives.assign(classes.begin(), classes.end());
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SearchReport sample_functions(std::size_t n, std::uint64_t count, std::uint64_t seed, std::size_t cap,
                              std::span<const ProcessTable> injected, std::size_t jobs) {
    if (n < 1 || n > kMaxSampleParties) {
        throw InputError("sampling supports 1 <= n <= " + std::to_string(kMaxSampleParties));
    }
    for (const ProcessTable &w : injected) {
        if (w.parties() != n) {
            throw InputError("injected table has " + std::to_string(w.parties()) + " parties, expected " +
                             std::to_string(n));
        }
    }
    const auto start = std::chrono::steady_clock::now();
    const bool canonical = n <= kMaxCanonicalParties;
    const std::size_t size = std::size_t{1} << n;
    const Word mask = full_mask(n);

    struct Partial {
        std::uint64_t processes = 0;
        std::uint64_t no_global_past = 0;
        std::set<ProcessTable> classes;
        std::vector<ProcessTable> kept;
    };
    auto examine = [&](Partial &p, ProcessTable w) {
        if (!is_classical_process(w)) {
            return;
        }
        ++p.processes;
        if (has_no_global_past(w)) {
            ++p.no_global_past;
            if (canonical) {
                p.classes.insert(canonicalize(w));
            }
        }
        if (p.kept.size() < cap) {
            p.kept.push_back(std::move(w));
        }
    };

    // Contiguous index blocks keep "first `cap` found" well defined.
    const std::size_t parts = count == 0 ? 0 : static_cast<std::size_t>(std::min<std::uint64_t>(count, 64));
    std::vector<Partial> partials(parts + 1);
    run_partitioned(parts, jobs, [&](std::size_t j) {
        const std::uint64_t begin = count * j / parts;
        const std::uint64_t end = count * (j + 1) / parts;
        std::vector<Word> rows(size);
        for (std::uint64_t i = begin; i < end; ++i) {
            SplitMix64 rng(derive_seed(seed, i));
            for (Word &r : rows) {
                r = static_cast<Word>(rng.next()) & mask;
            }
            examine(partials[j], ProcessTable(n, rows));
        }
    });
    for (const ProcessTable &w : injected) {
        examine(partials[parts], w);
    }

    SearchReport report;
    report.n = n;
    report.total_candidates = count + injected.size();
    std::set<ProcessTable> classes;
    for (Partial &p : partials) {
        report.process_count += p.processes;
        report.no_global_past_count += p.no_global_past;
        classes.merge(p.classes);
        for (ProcessTable &w : p.kept) {
            if (report.representatives.size() < cap) {
                report.representatives.push_back(std::move(w));
            }
        }
    }
    report.canonical_class_count = classes.size();
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace acausal
