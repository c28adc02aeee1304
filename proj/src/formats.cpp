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

#include "acausal/formats.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "acausal/error.hpp"

namespace acausal {

namespace {

struct Line {
    std::size_t number;
    std::string_view content;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) {
            out.push_back({number, line});
        }
        start = end + 1;
    }
    return out;
}

/// Parses `<keyword> n=<N>`.
std::size_t parse_header(const Line &line, std::string_view keyword) {
    const std::string prefix = std::string(keyword) + " n=";
    if (line.content.substr(0, prefix.size()) != prefix) {
        throw ParseError(line.number, "expected header '" + prefix + "<N>', got '" + std::string(line.content) + "'");
    }
    const std::string_view digits = line.content.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(line.number, "malformed party count '" + std::string(digits) + "'");
    }
    if (n < 1 || n > kMaxParties) {
        throw ParseError(line.number, "party count " + std::to_string(n) + " outside 1.." +
                                          std::to_string(kMaxParties));
    }
    return n;
}

const Line &first_line(const std::vector<Line> &lines, std::string_view what) {
    if (lines.empty()) {
        throw ParseError(1, std::string("empty ") + std::string(what) + " file");
    }
    return lines.front();
}

Word parse_word(const Line &line, std::string_view token, std::size_t n) {
    if (token.size() != n) {
        throw ParseError(line.number, "'" + std::string(token) + "' is not " + std::to_string(n) + " bits");
    }
    try {
        return parse_bits(token);
    } catch (const InputError &e) {
        throw ParseError(line.number, e.what());
    }
}

void check_row_count(const std::vector<Line> &lines, std::size_t n, std::string_view what) {
    const std::size_t expected = std::size_t{1} << n;
    const std::size_t got = lines.size() - 1;
    if (got > expected) {
        throw ParseError(lines[expected + 1].number, "too many " + std::string(what) + ": expected " +
                                                         std::to_string(expected) + " for n=" + std::to_string(n));
    }
    if (got < expected) {
        throw ParseError(lines.back().number, "too few " + std::string(what) + ": expected " +
                                                  std::to_string(expected) + ", got " + std::to_string(got));
    }
}

}  // namespace

ProcessTable parse_process(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    const std::size_t n = parse_header(first_line(lines, "process"), "process");
    const std::size_t rows = std::size_t{1} << n;
    std::vector<std::optional<std::size_t>> seen_on(rows);
    std::vector<Word> table(rows);

    for (std::size_t r = 1; r < lines.size(); ++r) {
        const Line &line = lines[r];
        if (r > rows) {
            check_row_count(lines, n, "rows");
        }
        const auto sep = line.content.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw ParseError(line.number, "expected '<xbits> <wbits>', got '" + std::string(line.content) + "'");
        }
        const std::string_view xs = line.content.substr(0, sep);
        const std::string_view ws = trim(line.content.substr(sep));
        if (ws.find_first_of(" \t") != std::string_view::npos) {
            throw ParseError(line.number, "expected two fields, got '" + std::string(line.content) + "'");
        }
        const Word x = parse_word(line, xs, n);
        const Word w = parse_word(line, ws, n);
        if (seen_on[x]) {
            throw ParseError(line.number, "duplicate row for x=" + std::string(xs) + " (first on line " +
                                              std::to_string(*seen_on[x]) + ")");
        }
        if (x != r - 1) {
            throw ParseError(line.number, "row x=" + std::string(xs) + " out of order, expected " +
                                              to_bits(static_cast<Word>(r - 1), n));
        }
        seen_on[x] = line.number;
        table[x] = w;
    }
    check_row_count(lines, n, "rows");
    return ProcessTable(n, std::move(table));
}

Ensemble parse_ensemble(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    const std::size_t n = parse_header(first_line(lines, "ensemble"), "ensemble");
    check_row_count(lines, n, "states");
    std::vector<StateLabel> states;
    states.reserve(lines.size() - 1);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const Line &line = lines[r];
        if (line.content.size() != n) {
            throw ParseError(line.number, "state '" + std::string(line.content) + "' is not " + std::to_string(n) +
                                              " characters");
        }
        try {
            states.emplace_back(line.content);
        } catch (const InputError &e) {
            throw ParseError(line.number, e.what());
        }
    }
    return Ensemble(n, std::move(states));
}

std::string format_process(const ProcessTable &w) {
    std::string out = "process n=" + std::to_string(w.parties()) + "\n";
    for (Word x = 0; x < w.size(); ++x) {
        out += to_bits(x, w.parties());
        out += ' ';
        out += to_bits(w[x], w.parties());
        out += '\n';
    }
    return out;
}

std::string format_ensemble(const Ensemble &e) {
    std::string out = "ensemble n=" + std::to_string(e.parties()) + "\n";
    for (const StateLabel &s : e.states()) {
        out += s.str();
        out += '\n';
    }
    return out;
}

std::variant<ProcessTable, Ensemble> parse_any(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    const Line &head = first_line(lines, "input");
    if (head.content.starts_with("process")) {
        return parse_process(text);
    }
    if (head.content.starts_with("ensemble")) {
        return parse_ensemble(text);
    }
    throw ParseError(head.number, "expected 'process n=<N>' or 'ensemble n=<N>', got '" +
                                      std::string(head.content) + "'");
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string table_hash(const ProcessTable &w) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : format_process(w)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace acausal
