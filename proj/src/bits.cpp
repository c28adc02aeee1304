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

#include "acausal/bits.hpp"

#include "acausal/error.hpp"

namespace acausal {

std::string to_bits(Word w, std::size_t n) {
    std::string out(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if (party_bit(w, n, i)) {
            out[i] = '1';
        }
    }
    return out;
}

Word parse_bits(std::string_view s) {
    if (s.empty() || s.size() > kMaxParties) {
        throw InputError("bit string '" + std::string(s) + "' must have 1.." +
                         std::to_string(kMaxParties) + " characters");
    }
    Word w = 0;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw InputError("bit string '" + std::string(s) + "' contains '" + std::string(1, c) + "'");
        }
        w = (w << 1) | Word(c == '1');
    }
    return w;
}

}  // namespace acausal
