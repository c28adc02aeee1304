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

// Text formats for processes (.proc) and ensembles (.ens).
//
// .proc:                         .ens:
//     # comment                      ensemble n=3
//     process n=3                    000
//     000 000                        111
//     001 100                        +01
//     ...                            ...
//
// '#' starts a comment anywhere on a line; surrounding whitespace and blank
// lines are ignored. A .proc file has exactly 2^N rows `<x> <w(x)>` in
// ascending x; a .ens file has exactly 2^N labels over {0,1,+,-}. Party 1 is
// the leftmost character. Any deviation is a ParseError carrying the line.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "acausal/boolean_process.hpp"
#include "acausal/ensemble.hpp"

namespace acausal {

ProcessTable parse_process(std::string_view text);
Ensemble parse_ensemble(std::string_view text);

/// Serialization, without comments. `parse_process(format_process(w)) == w`.
std::string format_process(const ProcessTable &w);
std::string format_ensemble(const Ensemble &e);

/// Reads a file whose header is either `process` or `ensemble`.
std::variant<ProcessTable, Ensemble> parse_any(std::string_view text);

/// Whole-file read; InputError if the file cannot be opened.
std::string read_text_file(const std::filesystem::path &path);

/// 64-bit FNV-1a of format_process(w), as 16 lowercase hex digits.
std::string table_hash(const ProcessTable &w);

}  // namespace acausal
