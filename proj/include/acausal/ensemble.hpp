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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acausal/bits.hpp"
#include "acausal/boolean_process.hpp"

namespace acausal {

/// A product state of n qubits written over {0,1,+,-}, party 0 first.
///
/// Each character is H^basis |x> for one qubit: '0' = (0,0), '1' = (0,1),
/// '+' = (1,0), '-' = (1,1) as (basis bit, x bit).
class StateLabel {
   public:
    /// Throws InputError on an empty string, a length above kMaxParties, or a
    /// character outside {0,1,+,-}.
    explicit StateLabel(std::string_view chars);

    static StateLabel from_bits(std::size_t n, Word basis, Word x);

    std::size_t parties() const {
        return chars_.size();
    }
    const std::string &str() const {
        return chars_;
    }
    Word xbits() const {
        return x_;
    }
    Word basisbits() const {
        return basis_;
    }

    bool operator==(const StateLabel &other) const {
        return chars_ == other.chars_;
    }
    bool operator<(const StateLabel &other) const {
        return chars_ < other.chars_;
    }

   private:
    std::string chars_;
    Word basis_ = 0;
    Word x_ = 0;
};

/// 2^n product-state labels over the same n qubits.
class Ensemble {
   public:
    /// Throws InputError unless there are exactly 2^n states, all of length n.
    Ensemble(std::size_t n, std::vector<StateLabel> states);

    std::size_t parties() const {
        return n_;
    }
    std::size_t size() const {
        return states_.size();
    }
    const StateLabel &operator[](std::size_t i) const {
        return states_[i];
    }
    const std::vector<StateLabel> &states() const {
        return states_;
    }

    /// Copy with states sorted by (xbits, basisbits).
    Ensemble canonical() const;

    /// Same multiset of labels, any order.
    bool same_set(const Ensemble &other) const;

    bool operator==(const Ensemble &other) const {
        return n_ == other.n_ && states_ == other.states_;
    }

   private:
    std::size_t n_;
    std::vector<StateLabel> states_;
};

/// State x is H^{w(x)} |x>, listed in ascending x.
Ensemble ensemble_from_process(const ProcessTable &w);

/// Reads w(x) = basisbits off the state whose xbits are x. Throws InputError
/// naming the colliding states when two states share xbits.
ProcessTable process_from_ensemble(const Ensemble &e);

/// Indices (i < j) of the first non-orthogonal pair in index order, if any.
///
/// Two labels are orthogonal iff at some position they use the same basis
/// and different basis elements; a position with differing bases contributes
/// a factor of magnitude 1/sqrt(2) and can never cancel the product.
std::optional<std::pair<std::size_t, std::size_t>> first_non_orthogonal_pair(const Ensemble &e);

/// Exact orthonormality, integer arithmetic only.
bool is_orthonormal_exact(const Ensemble &e);

/// Entry i is true iff some state has party i in the computational basis and
/// another has it in the Hadamard basis, so party i cannot measure first
/// without disturbing one of them. All-true is necessary for the ensemble to
/// resist local discrimination; it does not decide it.
std::vector<bool> local_obstruction_report(const Ensemble &e);

/// {000, 111, +01, -01, 1+0, 1-0, 01+, 01-} in that order.
Ensemble shift();

}  // namespace acausal
