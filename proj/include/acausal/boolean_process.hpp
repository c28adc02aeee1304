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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acausal/bits.hpp"

namespace acausal {

/// A Boolean n-party function w: {0,1}^n -> {0,1}^n stored as an explicit
/// lookup table. Input word x holds the bits the parties send into the
/// process; w(x) holds the bits each party receives.
class ProcessTable {
   public:
    /// Throws InputError unless 1 <= n <= kMaxParties, rows.size() == 2^n and
    /// every row fits in n bits.
    ProcessTable(std::size_t n, std::vector<Word> rows);

    template <typename F>
    static ProcessTable from_function(std::size_t n, F &&f) {
        std::vector<Word> rows(std::size_t{1} << n);
        for (Word x = 0; x < rows.size(); ++x) {
            rows[x] = f(x);
        }
        return ProcessTable(n, std::move(rows));
    }

    /// The function that maps every input to `value`.
    static ProcessTable constant(std::size_t n, Word value = 0);

    std::size_t parties() const {
        return n_;
    }
    std::size_t size() const {
        return rows_.size();
    }

    /// w(x), with range checking.
    Word eval(Word x) const;

    /// w(x) without range checking.
    Word operator[](Word x) const {
        return rows_[x];
    }

    std::span<const Word> rows() const {
        return rows_;
    }

    /// Component i of w(x).
    bool output_bit(Word x, std::size_t party) const {
        return party_bit(rows_[x], n_, party);
    }

    bool operator==(const ProcessTable &) const = default;
    std::strong_ordering operator<=>(const ProcessTable &) const = default;

   private:
    std::size_t n_;
    std::vector<Word> rows_;
};

/// The four functions {0,1} -> {0,1}. The numeric codes define the
/// lexicographic order of interventions.
enum class LocalFunction : std::uint8_t { Const0 = 0, Const1 = 1, Identity = 2, Negation = 3 };

std::string_view to_string(LocalFunction f);

/// An n-tuple of local functions, one per party.
///
/// Internally the tuple is stored as two masks: parties whose function reads
/// its argument (Identity, Negation) and parties whose function flips
/// (Const1, Negation). Then mu(p) = (p & reads) ^ flips.
class Intervention {
   public:
    explicit Intervention(std::vector<LocalFunction> funcs);

    /// The index-th intervention in lexicographic order: the base-4 digits
    /// of `index`, party 0 most significant. Requires index < 4^n.
    static Intervention from_index(std::size_t n, std::uint64_t index);

    static Intervention identity(std::size_t n);

    /// Parses comma-separated names as produced by to_string().
    static Intervention parse(std::string_view text);

    std::size_t parties() const {
        return funcs_.size();
    }
    LocalFunction operator[](std::size_t party) const {
        return funcs_[party];
    }
    const std::vector<LocalFunction> &functions() const {
        return funcs_;
    }

    Word read_mask() const {
        return read_mask_;
    }
    Word flip_mask() const {
        return flip_mask_;
    }

    /// mu(p) without range checking.
    Word operator()(Word p) const {
        return (p & read_mask_) ^ flip_mask_;
    }

    /// True when no party reads its argument.
    bool is_constant() const {
        return read_mask_ == 0;
    }

    /// Lexicographic index, inverse of from_index().
    std::uint64_t index() const;

    /// e.g. "ID,NOT,CONST0".
    std::string to_string() const;

    bool operator==(const Intervention &other) const {
        return funcs_ == other.funcs_;
    }

   private:
    std::vector<LocalFunction> funcs_;
    Word read_mask_ = 0;
    Word flip_mask_ = 0;
};

/// Component-wise mu(p). Throws InputError if p is out of range.
Word apply_intervention(const Intervention &mu, Word p);

/// All p with p == w(mu(p)), ascending, found by scanning every candidate.
std::vector<Word> fixed_points(const ProcessTable &w, const Intervention &mu);

struct ProcessVerdict {
    bool classical = false;
    /// First intervention (lexicographic order) without a unique fixed point.
    std::optional<Intervention> violation;
    /// The complete fixed-point set of `violation` (size 0 or >= 2).
    std::vector<Word> violation_fixed_points;
    /// How many interventions were examined before returning.
    std::uint64_t interventions_checked = 0;
};

/// Checks the unique fixed-point condition under all 4^n interventions,
/// stopping at the first violation. Cost is O(4^n * 2^n): instant up to
/// n = 6, minutes around n = 9, hopeless beyond.
ProcessVerdict verify_classical_process(const ProcessTable &w);

bool is_classical_process(const ProcessTable &w);

/// Which outputs depend on which inputs. Entry (i, k) is set iff there is an
/// x with w_i(x) != w_i(x with bit k flipped); the smallest such x is kept.
class SignalingMatrix {
   public:
    explicit SignalingMatrix(std::size_t n);

    std::size_t parties() const {
        return n_;
    }
    bool operator()(std::size_t receiver, std::size_t sender) const {
        return witness_[receiver * n_ + sender].has_value();
    }
    std::optional<Word> witness(std::size_t receiver, std::size_t sender) const {
        return witness_[receiver * n_ + sender];
    }
    void set_witness(std::size_t receiver, std::size_t sender, Word x) {
        witness_[receiver * n_ + sender] = x;
    }

    /// True iff `receiver` depends on some party other than itself (or on any
    /// party, including itself, when allow_self is set).
    bool receives_signal(std::size_t receiver, bool allow_self = false) const;

    /// Row `receiver` as an n-character {0,1} string.
    std::string row_string(std::size_t receiver) const;

   private:
    std::size_t n_;
    std::vector<std::optional<Word>> witness_;
};

SignalingMatrix signaling_relation(const ProcessTable &w);

/// Every party receives a signal from at least one other party. With
/// allow_self, dependence of w_i on x_i also counts.
bool has_no_global_past(const ProcessTable &w, bool allow_self = false);

/// Restricts w to the parties in `keep` (ascending party order in the result)
/// with every other input pinned by `fixed`. Throws InputError when keep is
/// empty, has duplicates or out-of-range entries, or when `fixed` does not
/// cover exactly the complement of keep.
ProcessTable reduce(const ProcessTable &w, std::span<const std::size_t> keep,
                    const std::map<std::size_t, bool> &fixed);

/// Certificate that a non-orthogonal pair (x, y) rules out the process
/// property: an intervention on the reduced process with two fixed points.
struct FixedPointWitness {
    /// Parties where x and y differ, ascending; the reduced process acts on these.
    std::vector<std::size_t> positions;
    ProcessTable reduced;
    /// x and y restricted to `positions`.
    Word reduced_x = 0;
    Word reduced_y = 0;
    /// reduced(reduced_x) and reduced(reduced_y).
    Word a = 0;
    Word b = 0;
    /// w -> reduced_x ^ a ^ w, per party Identity or Negation.
    Intervention alpha;
    std::vector<Word> fixed_points;
    /// alpha on `positions`, the constant x_j elsewhere; an intervention on
    /// the full process with the same number of fixed points.
    Intervention lifted;
    std::vector<Word> lifted_fixed_points;
};

/// Builds the double fixed-point certificate for (x, y). Requires x != y and
/// w_i(x) != w_i(y) at every position i where x and y differ; otherwise the
/// pair is orthogonal and InputError is thrown.
FixedPointWitness double_fixed_point_witness(const ProcessTable &w, Word x, Word y);

/// The three-party process a = (y+1)z, b = (z+1)x, c = (x+1)y over GF(2).
ProcessTable afbw();

}  // namespace acausal
