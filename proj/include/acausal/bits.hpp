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
#include <string>
#include <string_view>

namespace acausal {

/// An n-bit word, one bit per party.
///
/// Packing: party 0 (rendered leftmost) is the most significant of the n bits,
/// so numeric order of words coincides with lexicographic order of their
/// string renderings, and `table[x]` rows come out in file order.
using Word = std::uint32_t;

inline constexpr std::size_t kMaxParties = 16;

constexpr Word full_mask(std::size_t n) {
    return n >= 32 ? ~Word{0} : (Word{1} << n) - 1;
}

/// Single-bit mask selecting `party` within an n-party word.
constexpr Word party_mask(std::size_t n, std::size_t party) {
    return Word{1} << (n - 1 - party);
}

constexpr bool party_bit(Word w, std::size_t n, std::size_t party) {
    return (w & party_mask(n, party)) != 0;
}

constexpr Word with_party_bit(Word w, std::size_t n, std::size_t party, bool value) {
    return value ? (w | party_mask(n, party)) : (w & ~party_mask(n, party));
}

/// Renders `w` as an n-character string over {0,1}, party 0 first.
std::string to_bits(Word w, std::size_t n);

/// Parses an n-character {0,1} string (party 0 first). Throws InputError on
/// any other character or on a length above kMaxParties.
Word parse_bits(std::string_view s);

}  // namespace acausal
