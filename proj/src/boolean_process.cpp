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

#include "acausal/boolean_process.hpp"

#include <algorithm>
#include <sstream>

#include "acausal/error.hpp"

namespace acausal {

ProcessTable::ProcessTable(std::size_t n, std::vector<Word> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 1 || n_ > kMaxParties) {
        throw InputError("party count " + std::to_string(n_) + " outside 1.." + std::to_string(kMaxParties));
    }
    if (rows_.size() != (std::size_t{1} << n_)) {
        throw InputError("table for n=" + std::to_string(n_) + " needs " + std::to_string(std::size_t{1} << n_) +
                         " rows, got " + std::to_string(rows_.size()));
    }
    const Word mask = full_mask(n_);
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        if ((rows_[x] & ~mask) != 0) {
            throw InputError("row " + std::to_string(x) + " value " + std::to_string(rows_[x]) + " exceeds " +
                             std::to_string(n_) + " bits");
        }
    }
}

ProcessTable ProcessTable::constant(std::size_t n, Word value) {
    if (n < 1 || n > kMaxParties) {
        throw InputError("party count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxParties));
    }
    return ProcessTable(n, std::vector<Word>(std::size_t{1} << n, value));
}

Word ProcessTable::eval(Word x) const {
    if (x >= rows_.size()) {
        throw InputError("input word " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
    }
    return rows_[x];
}

std::string_view to_string(LocalFunction f) {
    switch (f) {
        case LocalFunction::Const0:
            return "CONST0";
        case LocalFunction::Const1:
            return "CONST1";
        case LocalFunction::Identity:
            return "ID";
        case LocalFunction::Negation:
            return "NOT";
    }
    return "?";
}

Intervention::Intervention(std::vector<LocalFunction> funcs) : funcs_(std::move(funcs)) {
    const std::size_t n = funcs_.size();
    if (n < 1 || n > kMaxParties) {
        throw InputError("intervention over " + std::to_string(n) + " parties");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto code = static_cast<std::uint8_t>(funcs_[i]);
        if (code > 3) {
            throw InputError("invalid local function code " + std::to_string(code));
        }
        if (funcs_[i] == LocalFunction::Identity || funcs_[i] == LocalFunction::Negation) {
            read_mask_ |= party_mask(n, i);
        }
        if (funcs_[i] == LocalFunction::Const1 || funcs_[i] == LocalFunction::Negation) {
            flip_mask_ |= party_mask(n, i);
        }
    }
}

Intervention Intervention::from_index(std::size_t n, std::uint64_t index) {
    if (n < 1 || n > kMaxParties || (n < 32 && index >= (std::uint64_t{1} << (2 * n)))) {
        throw InputError("intervention index " + std::to_string(index) + " out of range for n=" + std::to_string(n));
    }
    std::vector<LocalFunction> funcs(n);
    for (std::size_t i = n; i-- > 0;) {
        funcs[i] = static_cast<LocalFunction>(index & 3);
        index >>= 2;
    }
    return Intervention(std::move(funcs));
}

Intervention Intervention::identity(std::size_t n) {
    return Intervention(std::vector<LocalFunction>(n, LocalFunction::Identity));
}

Intervention Intervention::parse(std::string_view text) {
    std::vector<LocalFunction> funcs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view tok = text.substr(start, end - start);
        bool found = false;
        for (std::uint8_t c = 0; c < 4; ++c) {
            if (tok == acausal::to_string(static_cast<LocalFunction>(c))) {
                funcs.push_back(static_cast<LocalFunction>(c));
                found = true;
            }
        }
        if (!found) {
            throw InputError("unknown local function '" + std::string(tok) + "' (expected CONST0, CONST1, ID, NOT)");
        }
        start = end + 1;
    }
    return Intervention(std::move(funcs));
}

std::uint64_t Intervention::index() const {
    std::uint64_t index = 0;
    for (LocalFunction f : funcs_) {
        index = (index << 2) | static_cast<std::uint64_t>(f);
    }
    return index;
}

std::string Intervention::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < funcs_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += acausal::to_string(funcs_[i]);
    }
    return out;
}

Word apply_intervention(const Intervention &mu, Word p) {
    if (p > full_mask(mu.parties())) {
        throw InputError("word " + std::to_string(p) + " out of range for n=" + std::to_string(mu.parties()));
    }
    return mu(p);
}

namespace {

void require_same_parties(const ProcessTable &w, const Intervention &mu) {
    if (w.parties() != mu.parties()) {
        throw InputError("intervention has " + std::to_string(mu.parties()) + " parties, process has " +
                         std::to_string(w.parties()));
    }
}

}  // namespace

std::vector<Word> fixed_points(const ProcessTable &w, const Intervention &mu) {
    require_same_parties(w, mu);
    std::vector<Word> out;
    for (Word p = 0; p < w.size(); ++p) {
        if (w[mu(p)] == p) {
            out.push_back(p);
        }
    }
    return out;
}

ProcessVerdict verify_classical_process(const ProcessTable &w) {
    const std::size_t n = w.parties();
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    ProcessVerdict verdict;
    for (std::uint64_t index = 0; index < count; ++index) {
        const Intervention mu = Intervention::from_index(n, index);
        ++verdict.interventions_checked;
        std::size_t hits = 0;
        for (Word p = 0; p < w.size() && hits < 2; ++p) {
            hits += w[mu(p)] == p;
        }
        if (hits != 1) {
            verdict.violation_fixed_points = fixed_points(w, mu);
            verdict.violation = mu;
            return verdict;
        }
    }
    verdict.classical = true;
    return verdict;
}

bool is_classical_process(const ProcessTable &w) {
    return verify_classical_process(w).classical;
}

SignalingMatrix::SignalingMatrix(std::size_t n) : n_(n), witness_(n * n) {
}

bool SignalingMatrix::receives_signal(std::size_t receiver, bool allow_self) const {
    for (std::size_t k = 0; k < n_; ++k) {
        if ((k != receiver || allow_self) && (*this)(receiver, k)) {
            return true;
        }
    }
    return false;
}

std::string SignalingMatrix::row_string(std::size_t receiver) const {
    std::string out(n_, '0');
    for (std::size_t k = 0; k < n_; ++k) {
        if ((*this)(receiver, k)) {
            out[k] = '1';
        }
    }
    return out;
}

SignalingMatrix signaling_relation(const ProcessTable &w) {
    const std::size_t n = w.parties();
    SignalingMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Word flip = party_mask(n, k);
        for (Word x = 0; x < w.size(); ++x) {
            const Word diff = w[x] ^ w[x ^ flip];
            if (diff == 0) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (party_bit(diff, n, i) && !m(i, k)) {
                    m.set_witness(i, k, x);
                }
            }
        }
    }
    return m;
}

bool has_no_global_past(const ProcessTable &w, bool allow_self) {
    const SignalingMatrix m = signaling_relation(w);
    for (std::size_t i = 0; i < w.parties(); ++i) {
        if (!m.receives_signal(i, allow_self)) {
            return false;
        }
    }
    return true;
}

ProcessTable reduce(const ProcessTable &w, std::span<const std::size_t> keep,
                    const std::map<std::size_t, bool> &fixed) {
    const std::size_t n = w.parties();
    if (keep.empty()) {
        throw InputError("reduce: no parties kept");
    }
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    for (std::size_t j = 0; j < kept.size(); ++j) {
        if (kept[j] >= n) {
            throw InputError("reduce: kept party " + std::to_string(kept[j]) + " out of range for n=" +
                             std::to_string(n));
        }
        if (j > 0 && kept[j] == kept[j - 1]) {
            throw InputError("reduce: party " + std::to_string(kept[j]) + " kept twice");
        }
    }
    Word base = 0;
    for (const auto &[party, value] : fixed) {
        if (party >= n) {
            throw InputError("reduce: fixed party " + std::to_string(party) + " out of range for n=" +
                             std::to_string(n));
        }
        if (std::binary_search(kept.begin(), kept.end(), party)) {
            throw InputError("reduce: party " + std::to_string(party) + " is both kept and fixed");
        }
        base = with_party_bit(base, n, party, value);
    }
    if (kept.size() + fixed.size() != n) {
        throw InputError("reduce: kept and fixed parties do not cover all " + std::to_string(n) + " parties");
    }

    const std::size_t k = kept.size();
    return ProcessTable::from_function(k, [&](Word z) {
        Word x = base;
        for (std::size_t j = 0; j < k; ++j) {
            x = with_party_bit(x, n, kept[j], party_bit(z, k, j));
        }
        const Word out = w[x];
        Word r = 0;
        for (std::size_t j = 0; j < k; ++j) {
            r = with_party_bit(r, k, j, party_bit(out, n, kept[j]));
        }
        return r;
    });
}

FixedPointWitness double_fixed_point_witness(const ProcessTable &w, Word x, Word y) {
    const std::size_t n = w.parties();
    if (x >= w.size() || y >= w.size()) {
        throw InputError("witness: input word out of range for n=" + std::to_string(n));
    }
    if (x == y) {
        throw InputError("witness: x and y must differ");
    }
    const Word differ = x ^ y;
    if (((w[x] ^ w[y]) & differ) != differ) {
        throw InputError("witness: orthogonality holds for the pair (" + to_bits(x, n) + ", " + to_bits(y, n) +
                         "); no double fixed point exists");
    }

    std::vector<std::size_t> positions;
    std::map<std::size_t, bool> fixed;
    for (std::size_t i = 0; i < n; ++i) {
        if (party_bit(differ, n, i)) {
            positions.push_back(i);
        } else {
            fixed[i] = party_bit(x, n, i);
        }
    }
    const std::size_t k = positions.size();
    ProcessTable reduced = reduce(w, positions, fixed);

    Word rx = 0;
    Word ry = 0;
    for (std::size_t j = 0; j < k; ++j) {
        rx = with_party_bit(rx, k, j, party_bit(x, n, positions[j]));
        ry = with_party_bit(ry, k, j, party_bit(y, n, positions[j]));
    }
    const Word a = reduced[rx];
    const Word b = reduced[ry];

    std::vector<LocalFunction> alpha_funcs(k);
    std::vector<LocalFunction> lifted_funcs(n);
    for (std::size_t i = 0; i < n; ++i) {
        lifted_funcs[i] = party_bit(x, n, i) ? LocalFunction::Const1 : LocalFunction::Const0;
    }
    for (std::size_t j = 0; j < k; ++j) {
        const bool flip = party_bit(rx ^ a, k, j);
        alpha_funcs[j] = flip ? LocalFunction::Negation : LocalFunction::Identity;
        lifted_funcs[positions[j]] = alpha_funcs[j];
    }
    Intervention alpha(std::move(alpha_funcs));
    Intervention lifted(std::move(lifted_funcs));
    std::vector<Word> fps = fixed_points(reduced, alpha);
    std::vector<Word> lifted_fps = fixed_points(w, lifted);

    // a is fixed by construction and b because a ^ b == rx ^ ry on every kept party.
    if (fps.size() < 2 || !std::binary_search(fps.begin(), fps.end(), a) ||
        !std::binary_search(fps.begin(), fps.end(), b) || lifted_fps.size() != fps.size()) {
        throw std::logic_error("witness: constructed intervention lacks the expected fixed points");
    }

    return FixedPointWitness{
        .positions = std::move(positions),
        .reduced = std::move(reduced),
        .reduced_x = rx,
        .reduced_y = ry,
        .a = a,
        .b = b,
        .alpha = std::move(alpha),
        .fixed_points = std::move(fps),
        .lifted = std::move(lifted),
        .lifted_fixed_points = std::move(lifted_fps),
    };
}

ProcessTable afbw() {
    return ProcessTable::from_function(3, [](Word in) {
        const Word x = (in >> 2) & 1;
        const Word y = (in >> 1) & 1;
        const Word z = in & 1;
        const Word a = (y ^ 1) & z;
        const Word b = (z ^ 1) & x;
        const Word c = (x ^ 1) & y;
        return (a << 2) | (b << 1) | c;
    });
}

}  // namespace acausal
