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

// Test-only reference implementations. They work on explicit bit vectors and
// per-qubit 2-vectors and share no code with the library's packed-word and
// dense-vector routes.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace acausal::oracle {

using Bits = std::vector<int>;
using Cplx = std::complex<double>;

/// All n-bit vectors in lexicographic order (first entry most significant).
inline std::vector<Bits> all_bit_vectors(std::size_t n) {
    std::vector<Bits> out;
    Bits v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = n;
        while (i > 0 && v[i - 1] == 1) {
            v[--i] = 0;
        }
        if (i == 0) {
            return out;
        }
        v[i - 1] = 1;
    }
}

/// The AF/BW formulas on named bits.
inline Bits afbw_formula(const Bits &in) {
    const int x = in[0], y = in[1], z = in[2];
    return {((y ^ 1) & z), ((z ^ 1) & x), ((x ^ 1) & y)};
}

/// A Boolean function given as a map from bit vectors to bit vectors.
struct BitFunction {
    std::size_t n;
    std::vector<Bits> inputs;   // all_bit_vectors(n)
    std::vector<Bits> outputs;  // outputs[k] = f(inputs[k])

    const Bits &at(const Bits &x) const {
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            if (inputs[k] == x) {
                return outputs[k];
            }
        }
        throw std::out_of_range("input not in table");
    }
};

/// Local function codes: 0 const-0, 1 const-1, 2 identity, 3 negation.
inline int apply_local(int code, int bit) {
    switch (code) {
        case 0:
            return 0;
        case 1:
            return 1;
        case 2:
            return bit;
        default:
            return bit ^ 1;
    }
}

/// Unique fixed point for every tuple of local functions, by nested
/// enumeration over explicit vectors.
inline bool is_classical_reference(const BitFunction &f) {
    const std::size_t n = f.n;
    std::vector<int> codes(n, 0);
    while (true) {
        int count = 0;
        for (const Bits &p : f.inputs) {
            Bits mu(n);
            for (std::size_t i = 0; i < n; ++i) {
                mu[i] = apply_local(codes[i], p[i]);
            }
            count += f.at(mu) == p;
        }
        if (count != 1) {
            return false;
        }
        std::size_t i = n;
        while (i > 0 && codes[i - 1] == 3) {
            codes[--i] = 0;
        }
        if (i == 0) {
            return true;
        }
        ++codes[i - 1];
    }
}

/// Every party's output depends on some other party's input.
inline bool no_global_past_reference(const BitFunction &f) {
    for (std::size_t i = 0; i < f.n; ++i) {
        bool receives = false;
        for (std::size_t k = 0; k < f.n && !receives; ++k) {
            if (k == i) {
                continue;
            }
            for (const Bits &x : f.inputs) {
                Bits flipped = x;
                flipped[k] ^= 1;
                if (f.at(x)[i] != f.at(flipped)[i]) {
                    receives = true;
                    break;
                }
            }
        }
        if (!receives) {
            return false;
        }
    }
    return true;
}

/// Single-qubit state for a label character.
inline std::array<Cplx, 2> qubit(char c) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (c) {
        case '0':
            return {1.0, 0.0};
        case '1':
            return {0.0, 1.0};
        case '+':
            return {h, h};
        default:
            return {h, -h};
    }
}

/// <a|b> for product labels as the product of single-qubit overlaps.
inline Cplx product_overlap(const std::string &a, const std::string &b) {
    Cplx total = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto qa = qubit(a[i]);
        const auto qb = qubit(b[i]);
        total *= std::conj(qa[0]) * qb[0] + std::conj(qa[1]) * qb[1];
    }
    return total;
}

/// Dense product state by repeated Kronecker products, first qubit most
/// significant.
inline std::vector<Cplx> kron_state(const std::string &label) {
    std::vector<Cplx> state{1.0};
    for (char c : label) {
        const auto q = qubit(c);
        std::vector<Cplx> next(state.size() * 2);
        for (std::size_t k = 0; k < state.size(); ++k) {
            next[2 * k] = state[k] * q[0];
            next[2 * k + 1] = state[k] * q[1];
        }
        state = std::move(next);
    }
    return state;
}

/// |<s|psi>|^2 for each label s, psi a dense vector.
inline std::vector<double> born_distribution(const std::vector<std::string> &labels, const std::vector<Cplx> &psi) {
    std::vector<double> out;
    for (const std::string &s : labels) {
        const std::vector<Cplx> phi = kron_state(s);
        Cplx amp = 0.0;
        for (std::size_t k = 0; k < psi.size(); ++k) {
            amp += std::conj(phi[k]) * psi[k];
        }
        out.push_back(std::norm(amp));
    }
    return out;
}

}  // namespace acausal::oracle
