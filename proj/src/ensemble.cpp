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

#include "acausal/ensemble.hpp"

#include <algorithm>

#include "acausal/error.hpp"

namespace acausal {

StateLabel::StateLabel(std::string_view chars) : chars_(chars) {
    if (chars_.empty() || chars_.size() > kMaxParties) {
        throw InputError("state label '" + chars_ + "' must have 1.." + std::to_string(kMaxParties) + " characters");
    }
    for (char c : chars_) {
        Word b = 0;
        Word x = 0;
        switch (c) {
            case '0':
                break;
            case '1':
                x = 1;
                break;
            case '+':
                b = 1;
                break;
            case '-':
                b = 1;
                x = 1;
                break;
            default:
                throw InputError("state label '" + chars_ + "' contains '" + std::string(1, c) +
                                 "' (expected 0, 1, +, -)");
        }
        basis_ = (basis_ << 1) | b;
        x_ = (x_ << 1) | x;
    }
}

StateLabel StateLabel::from_bits(std::size_t n, Word basis, Word x) {
    static constexpr char kSymbol[2][2] = {{'0', '1'}, {'+', '-'}};
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = kSymbol[party_bit(basis, n, i)][party_bit(x, n, i)];
    }
    return StateLabel(s);
}

Ensemble::Ensemble(std::size_t n, std::vector<StateLabel> states) : n_(n), states_(std::move(states)) {
    if (n_ < 1 || n_ > kMaxParties) {
        throw InputError("ensemble party count " + std::to_string(n_) + " outside 1.." +
                         std::to_string(kMaxParties));
    }
    if (states_.size() != (std::size_t{1} << n_)) {
        throw InputError("ensemble for n=" + std::to_string(n_) + " needs " + std::to_string(std::size_t{1} << n_) +
                         " states, got " + std::to_string(states_.size()));
    }
    for (const StateLabel &s : states_) {
        if (s.parties() != n_) {
            throw InputError("state '" + s.str() + "' has length " + std::to_string(s.parties()) + ", expected " +
                             std::to_string(n_));
        }
    }
}

Ensemble Ensemble::canonical() const {
    std::vector<StateLabel> sorted = states_;
    std::sort(sorted.begin(), sorted.end(), [](const StateLabel &l, const StateLabel &r) {
        return std::pair(l.xbits(), l.basisbits()) < std::pair(r.xbits(), r.basisbits());
    });
    return Ensemble(n_, std::move(sorted));
}

bool Ensemble::same_set(const Ensemble &other) const {
    return canonical() == other.canonical();
}

Ensemble ensemble_from_process(const ProcessTable &w) {
    std::vector<StateLabel> states;
    states.reserve(w.size());
    for (Word x = 0; x < w.size(); ++x) {
        states.push_back(StateLabel::from_bits(w.parties(), w[x], x));
    }
    return Ensemble(w.parties(), std::move(states));
}

ProcessTable process_from_ensemble(const Ensemble &e) {
    constexpr std::size_t kUnset = ~std::size_t{0};
    std::vector<std::size_t> owner(e.size(), kUnset);
    std::vector<Word> rows(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const Word x = e[i].xbits();
        if (owner[x] != kUnset) {
            throw InputError("states '" + e[owner[x]].str() + "' and '" + e[i].str() + "' share xbits " +
                             to_bits(x, e.parties()));
        }
        owner[x] = i;
        rows[x] = e[i].basisbits();
    }
    // 2^n states with distinct xbits cover every pattern.
    return ProcessTable(e.parties(), std::move(rows));
}

std::optional<std::pair<std::size_t, std::size_t>> first_non_orthogonal_pair(const Ensemble &e) {
    const Word mask = full_mask(e.parties());
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const Word same_basis = ~(e[i].basisbits() ^ e[j].basisbits()) & mask;
            const Word differ = e[i].xbits() ^ e[j].xbits();
            if ((same_basis & differ) == 0) {
                return std::pair(i, j);
            }
        }
    }
    return std::nullopt;
}

bool is_orthonormal_exact(const Ensemble &e) {
    return !first_non_orthogonal_pair(e).has_value();
}

std::vector<bool> local_obstruction_report(const Ensemble &e) {
    const std::size_t n = e.parties();
    Word seen_z = 0;
    Word seen_x = 0;
    for (const StateLabel &s : e.states()) {
        seen_x |= s.basisbits();
        seen_z |= ~s.basisbits() & full_mask(n);
    }
    std::vector<bool> report(n);
    for (std::size_t i = 0; i < n; ++i) {
        report[i] = party_bit(seen_x & seen_z, n, i);
    }
    return report;
}

Ensemble shift() {
    std::vector<StateLabel> states;
    for (const char *s : {"000", "111", "+01", "-01", "1+0", "1-0", "01+", "01-"}) {
        states.emplace_back(s);
    }
    return Ensemble(3, std::move(states));
}

}  // namespace acausal
