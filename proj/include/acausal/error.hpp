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
#include <stdexcept>
#include <string>

namespace acausal {

/// Raised for any violated precondition on caller-supplied data: out-of-range
/// words, malformed labels, inconsistent position sets, bad files.
class InputError : public std::runtime_error {
   public:
    explicit InputError(const std::string &what) : std::runtime_error(what) {
    }
};

/// A file could not be parsed. `line()` is 1-based.
class ParseError : public InputError {
   public:
    ParseError(std::size_t line, const std::string &what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace acausal
