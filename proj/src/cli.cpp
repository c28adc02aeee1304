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

#include "acausal/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "acausal/boolean_process.hpp"
#include "acausal/ensemble.hpp"
#include "acausal/error.hpp"
#include "acausal/formats.hpp"
#include "acausal/protocols.hpp"
#include "acausal/rng.hpp"
#include "acausal/search.hpp"
#include "acausal/statevector.hpp"

namespace acausal::cli {

namespace {

const char *yes_no(bool b) {
    return b ? "true" : "false";
}

std::string format_prob(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", p);
    return buf;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void write_header(std::ostream &os, const CommandConfig &c) {
    os << "# acausal " << c.subcommand << "\n";
    os << "# input:";
    for (const std::string &in : c.inputs) {
        os << ' ' << in;
    }
    if (c.inputs.empty()) {
        os << " -";
    }
    os << "\n";
    os << "# output: " << (c.output.empty() ? "-" : c.output) << "\n";
    os << "# seed: " << c.seed << "\n";
    os << "# samples: " << c.samples << "\n";
    os << "# tolerance: " << format_double(c.tolerance) << "\n";
    os << "# jobs: " << c.jobs << "\n";
    os << "# allow-self-signaling: " << yes_no(c.allow_self_signaling) << "\n";
    os << "# force-nonorthonormal: " << yes_no(c.force_nonorthonormal) << "\n";
    os << "# canonical: " << yes_no(c.canonical) << "\n";
}

/// A process file, or an ensemble file read back into its process.
ProcessTable load_process(const std::string &path) {
    auto parsed = parse_any(read_text_file(path));
    if (auto *w = std::get_if<ProcessTable>(&parsed)) {
        return std::move(*w);
    }
    return process_from_ensemble(std::get<Ensemble>(parsed));
}

Ensemble load_ensemble(const std::string &path) {
    return parse_ensemble(read_text_file(path));
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw InputError("cannot write '" + path + "'");
    }
    os << content;
}

Word parse_word_for(const std::string &text, std::size_t n, const char *what) {
    const Word w = parse_bits(text);
    if (text.size() != n) {
        throw InputError(std::string(what) + " '" + text + "' must have " + std::to_string(n) + " bits");
    }
    return w;
}

std::size_t parse_party(std::string_view text, std::size_t n) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < 1 || v > n) {
        throw InputError("party '" + std::string(text) + "' is not in 1.." + std::to_string(n));
    }
    return v - 1;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        if (end > start) {
            out.push_back(text.substr(start, end - start));
        }
        start = end + 1;
    }
    return out;
}

std::string join_words(const std::vector<Word> &words, std::size_t n) {
    if (words.empty()) {
        return "none";
    }
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        out += (i ? "," : "") + to_bits(words[i], n);
    }
    return out;
}

std::string bool_vector_bits(const std::vector<bool> &v) {
    std::string out;
    for (bool b : v) {
        out += b ? '1' : '0';
    }
    return out;
}

/// Options bound to CLI11, converted to CommandConfig after parsing.
struct Options {
    CommandConfig config;
    std::string input;
    std::string state;
    std::string hadamards;
    std::string input_bits;
    std::string intervention;
    std::string keep;
    std::string fix;
    std::string x_bits;
    std::string y_bits;
    std::string filter = "no-global-past";
    std::size_t parties = 0;
    std::uint64_t trials = 1000;
    std::uint64_t count = 0;
    std::size_t cap = 100;
    std::vector<std::string> inject;
};

int cmd_verify_process(const Options &o, std::ostream &os) {
    const ProcessTable w = load_process(o.input);
    const std::size_t n = w.parties();
    const ProcessVerdict verdict = verify_classical_process(w);
    const SignalingMatrix sig = signaling_relation(w);
    const bool ngp = has_no_global_past(w, o.config.allow_self_signaling);
    os << "n: " << n << "\n";
    os << "classical-process: " << yes_no(verdict.classical) << "\n";
    os << "interventions-checked: " << verdict.interventions_checked << "\n";
    if (verdict.violation) {
        os << "violating-intervention: " << verdict.violation->to_string() << "\n";
        os << "violating-fixed-points: " << join_words(verdict.violation_fixed_points, n) << "\n";
    }
    os << "no-global-past: " << yes_no(ngp) << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << "signaling-" << (i + 1) << ": " << sig.row_string(i) << "\n";
    }
    return verdict.classical && ngp ? kOk : kPropertyFalse;
}

int cmd_build_ensemble(const Options &o, std::ostream &os) {
    const Ensemble e = ensemble_from_process(load_process(o.input));
    if (o.config.output.empty()) {
        os << format_ensemble(e);
    } else {
        write_file(o.config.output, format_ensemble(e));
        os << "written: " << o.config.output << "\n";
    }
    return kOk;
}

int cmd_check_ensemble(const Options &o, std::ostream &os) {
    const Ensemble e = load_ensemble(o.input);
    const auto pair = first_non_orthogonal_pair(e);
    const std::vector<bool> obstruction = local_obstruction_report(e);
    const bool all = std::find(obstruction.begin(), obstruction.end(), false) == obstruction.end();
    os << "n: " << e.parties() << "\n";
    os << "orthonormal: " << yes_no(!pair) << "\n";
    if (pair) {
        os << "non-orthogonal-pair: " << e[pair->first].str() << " " << e[pair->second].str() << "\n";
    }
    os << "local-obstruction: " << bool_vector_bits(obstruction) << "\n";
    os << "local-obstruction-all: " << yes_no(all) << "\n";
    return !pair && all ? kOk : kPropertyFalse;
}

int cmd_invert_ensemble(const Options &o, std::ostream &os) {
    const ProcessTable w = process_from_ensemble(load_ensemble(o.input));
    if (o.config.output.empty()) {
        os << format_process(w);
    } else {
        write_file(o.config.output, format_process(w));
        os << "written: " << o.config.output << "\n";
    }
    return kOk;
}

int cmd_measure(const Options &o, std::ostream &os) {
    const ProcessTable w = load_process(o.input);
    const std::size_t n = w.parties();
    const StateLabel label(o.state);
    if (label.parties() != n) {
        throw InputError("state '" + o.state + "' does not have " + std::to_string(n) + " qubits");
    }
    const StateVector psi = from_label(label);
    os << "n: " << n << "\n";
    os << "state: " << label.str() << "\n";
    if (o.config.samples == 0) {
        const auto dist = measurement_distribution(w, psi, o.config.force_nonorthonormal);
        double total = 0.0;
        for (const WeightedRecord &r : dist) {
            total += r.probability;
            if (r.probability > o.config.tolerance) {
                os << "label=" << r.record.label(n).str() << " basis=" << to_bits(r.record.basis, n)
                   << " outcome=" << to_bits(r.record.outcome, n) << " p=" << format_prob(r.probability) << "\n";
            }
        }
        os << "total-probability: " << format_prob(total) << "\n";
        return kOk;
    }
    std::map<Word, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < o.config.samples; ++i) {
        ++counts[run_measurement(w, psi, derive_seed(o.config.seed, i)).outcome];
    }
    for (const auto &[outcome, count] : counts) {
        os << "label=" << StateLabel::from_bits(n, w[outcome], outcome).str() << " basis=" << to_bits(w[outcome], n)
           << " outcome=" << to_bits(outcome, n) << " count=" << count << "\n";
    }
    return kOk;
}

int cmd_distribution(const Options &o, std::ostream &os) {
    const StateLabel label(o.state);
    const std::size_t n = label.parties();
    StateVector psi = from_label(label);
    if (!o.hadamards.empty()) {
        psi = apply_hadamards(psi, parse_word_for(o.hadamards, n, "hadamard mask"));
    }
    const OutcomeDistribution d = computational_distribution(psi);
    os << "n: " << n << "\n";
    for (Word x = 0; x < d.size(); ++x) {
        if (d[x] > o.config.tolerance) {
            os << to_bits(x, n) << " " << format_prob(d[x]) << "\n";
        }
    }
    if (o.config.samples > 0) {
        std::map<Word, std::uint64_t> counts;
        for (std::uint64_t i = 0; i < o.config.samples; ++i) {
            ++counts[sample(d, derive_seed(o.config.seed, i))];
        }
        for (const auto &[x, count] : counts) {
            os << "sampled=" << to_bits(x, n) << " count=" << count << "\n";
        }
    }
    return kOk;
}

int cmd_channel(const Options &o, std::ostream &os) {
    const ProcessTable w = load_process(o.input);
    const std::size_t n = w.parties();
    os << "n: " << n << "\n";
    std::vector<Word> inputs;
    if (o.input_bits.empty()) {
        for (Word x = 0; x < w.size(); ++x) {
            inputs.push_back(x);
        }
    } else {
        inputs.push_back(parse_word_for(o.input_bits, n, "input"));
    }

    if (o.config.samples > 0) {
        for (Word x : inputs) {
            std::map<Word, std::uint64_t> counts;
            for (std::uint64_t i = 0; i < o.config.samples; ++i) {
                ++counts[run_channel(w, x, derive_seed(o.config.seed, x * o.config.samples + i)).output];
            }
            for (const auto &[out, count] : counts) {
                os << "input=" << to_bits(x, n) << " -> output=" << to_bits(out, n) << " count=" << count << "\n";
            }
        }
        return kOk;
    }

    bool faithful = true;
    for (Word x : inputs) {
        const std::vector<double> dist = channel_distribution(w, x);
        for (Word out = 0; out < dist.size(); ++out) {
            if (dist[out] > o.config.tolerance) {
                os << "input=" << to_bits(x, n) << " -> output=" << to_bits(out, n) << " p=" << format_prob(dist[out])
                   << "\n";
            }
            const double target = out == w[x] ? 1.0 : 0.0;
            faithful = faithful && std::abs(dist[out] - target) <= o.config.tolerance;
        }
    }
    os << "faithful: " << yes_no(faithful) << "\n";
    return faithful ? kOk : kPropertyFalse;
}

int cmd_discriminate(const Options &o, std::ostream &os) {
    const ProcessTable w = load_process(o.input);
    const auto tallies = discrimination_tally(w, o.trials, o.config.seed, o.config.jobs);
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    for (const DiscriminationTally &t : tallies) {
        os << "state=" << t.label.str() << " trials=" << t.trials << " success=" << t.successes << "\n";
        trials += t.trials;
        successes += t.successes;
    }
    os << "total-trials: " << trials << "\n";
    os << "total-success: " << successes << "\n";
    return successes == trials ? kOk : kPropertyFalse;
}

void write_representatives(const std::vector<ProcessTable> &tables, const std::string &dir, std::ostream &os) {
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
    }
    for (const ProcessTable &w : tables) {
        const std::string hash = table_hash(w);
        os << "representative: " << hash << "\n";
        if (!dir.empty()) {
            write_file((std::filesystem::path(dir) / (hash + ".proc")).string(), format_process(w));
        }
    }
}

int cmd_enumerate(const Options &o, std::ostream &os) {
    if (o.filter != "classical" && o.filter != "no-global-past") {
        throw InputError("--filter must be 'classical' or 'no-global-past'");
    }
    const SearchReport report = enumerate_report(o.parties, o.config.jobs);
    std::vector<ProcessTable> selected;
    if (o.filter == "no-global-past") {
        selected = o.config.canonical ? report.representatives : enumerate_no_global_past(o.parties, o.config.jobs);
    } else {
        selected = enumerate_classical_processes(o.parties, o.config.jobs);
        if (o.config.canonical) {
            std::set<ProcessTable> classes;
            for (const ProcessTable &w : selected) {
                classes.insert(canonicalize(w));
            }
            selected.assign(classes.begin(), classes.end());
        }
    }
    os << "n: " << report.n << "\n";
    os << "filter: " << o.filter << "\n";
    os << "total-candidates: " << report.total_candidates << "\n";
    os << "process-count: " << report.process_count << "\n";
    os << "no-global-past-count: " << report.no_global_past_count << "\n";
    os << "canonical-class-count: " << report.canonical_class_count << "\n";
    os << "selected: " << selected.size() << "\n";
    write_representatives(selected, o.config.output, os);
    os << "elapsed-seconds: " << format_double(report.elapsed_seconds) << "\n";
    return kOk;
}

int cmd_sample(const Options &o, std::ostream &os) {
    std::vector<ProcessTable> injected;
    for (const std::string &path : o.inject) {
        injected.push_back(load_process(path));
    }
    const SearchReport report =
        sample_functions(o.parties, o.count, o.config.seed, o.cap, injected, o.config.jobs);
    const double denom = report.total_candidates == 0 ? 1.0 : static_cast<double>(report.total_candidates);
    os << "n: " << report.n << "\n";
    os << "total-candidates: " << report.total_candidates << "\n";
    os << "process-count: " << report.process_count << "\n";
    os << "process-fraction: " << format_prob(report.process_count / denom) << "\n";
    os << "no-global-past-count: " << report.no_global_past_count << "\n";
    os << "no-global-past-fraction: " << format_prob(report.no_global_past_count / denom) << "\n";
    os << "canonical-class-count: " << report.canonical_class_count << "\n";
    os << "selected: " << report.representatives.size() << "\n";
    write_representatives(report.representatives, o.config.output, os);
    os << "elapsed-seconds: " << format_double(report.elapsed_seconds) << "\n";
    return kOk;
}

int cmd_fixed_points(const Options &o, std::ostream &os) {
    const ProcessTable w = load_process(o.input);
    const Intervention mu = Intervention::parse(o.intervention);
    const std::vector<Word> fps = fixed_points(w, mu);
    os << "n: " << w.parties() << "\n";
    os << "intervention: " << mu.to_string() << "\n";
    os << "fixed-points: " << join_words(fps, w.parties()) << "\n";
    os << "unique: " << yes_no(fps.size() == 1) << "\n";
    return fps.size() == 1 ? kOk : kPropertyFalse;
}

int cmd_reduce(const Options &o, std::ostream &os) {
    const ProcessTable w = load_process(o.input);
    const std::size_t n = w.parties();
    std::vector<std::size_t> keep;
    for (std::string_view p : split(o.keep, ',')) {
        keep.push_back(parse_party(p, n));
    }
    std::map<std::size_t, bool> fixed;
    for (std::string_view item : split(o.fix, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || (item.substr(eq + 1) != "0" && item.substr(eq + 1) != "1")) {
            throw InputError("--fix entries look like '3=0', got '" + std::string(item) + "'");
        }
        const std::size_t party = parse_party(item.substr(0, eq), n);
        if (!fixed.emplace(party, item.substr(eq + 1) == "1").second) {
            throw InputError("party " + std::to_string(party + 1) + " fixed twice");
        }
    }
    const ProcessTable r = reduce(w, keep, fixed);
    const std::string text = format_process(r);
    if (o.config.output.empty()) {
        os << text;
    } else {
        write_file(o.config.output, text);
        os << "written: " << o.config.output << "\n";
    }
    return kOk;
}

int cmd_witness(const Options &o, std::ostream &os) {
    const ProcessTable w = load_process(o.input);
    const std::size_t n = w.parties();
    const FixedPointWitness wit =
        double_fixed_point_witness(w, parse_word_for(o.x_bits, n, "x"), parse_word_for(o.y_bits, n, "y"));
    const std::size_t k = wit.positions.size();
    os << "n: " << n << "\n";
    os << "positions:";
    for (std::size_t p : wit.positions) {
        os << ' ' << (p + 1);
    }
    os << "\n";
    os << "a: " << to_bits(wit.a, k) << "\n";
    os << "b: " << to_bits(wit.b, k) << "\n";
    os << "alpha: " << wit.alpha.to_string() << "\n";
    os << "alpha-fixed-points: " << join_words(wit.fixed_points, k) << "\n";
    os << "lifted-intervention: " << wit.lifted.to_string() << "\n";
    os << "lifted-fixed-points: " << join_words(wit.lifted_fixed_points, n) << "\n";
    os << "classical-process: false\n";
    // The witness exists, so the process property fails.
    return kPropertyFalse;
}

int cmd_canonicalize(const Options &o, std::ostream &os) {
    const ProcessTable c = canonicalize(load_process(o.input));
    if (o.config.output.empty()) {
        os << format_process(c);
    } else {
        write_file(o.config.output, format_process(c));
        os << "written: " << o.config.output << "\n";
    }
    os << "# hash: " << table_hash(c) << "\n";
    return kOk;
}

int cmd_gram(const Options &o, std::ostream &os) {
    const Ensemble e = load_ensemble(o.input);
    const ComplexMatrix g = gram_matrix(e);
    const double dev = identity_deviation(g);
    os << "n: " << e.parties() << "\n";
    os << "identity-deviation: " << format_double(dev) << "\n";
    os << "orthonormal-numeric: " << yes_no(dev <= o.config.tolerance) << "\n";
    os << "orthonormal-exact: " << yes_no(is_orthonormal_exact(e)) << "\n";
    return dev <= o.config.tolerance ? kOk : kPropertyFalse;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Classical processes without causal order and the product-state ensembles they induce."};
    app.name(args.empty() ? "acausal" : std::filesystem::path(args[0]).filename().string());
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Options o;
    std::function<int(const Options &, std::ostream &)> handler;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", o.config.seed, "PRNG seed (SplitMix64)")->default_val(0);
        sub->add_option("--tolerance", o.config.tolerance, "Numerical tolerance")->default_val(1e-9);
        sub->add_option("--jobs", o.config.jobs, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
        sub->add_option("--out", o.config.output, "Output file (or directory for enumerate/sample)");
    };
    auto add = [&](const char *name, const char *help, auto fn) {
        CLI::App *sub = app.add_subcommand(name, help);
        common(sub);
        sub->callback([&, name, fn] {
            o.config.subcommand = name;
            handler = fn;
        });
        return sub;
    };
    auto file_arg = [&](CLI::App *sub, const char *what) {
        sub->add_option("file", o.input, what)->required();
    };

    auto *verify = add("verify-process", "Unique fixed points under all interventions; no global past", cmd_verify_process);
    file_arg(verify, ".proc file (or .ens, read back into its process)");
    verify->add_flag("--allow-self-signaling", o.config.allow_self_signaling,
                     "Count dependence of a party's output on its own input");

    file_arg(add("build-ensemble", "Write the ensemble {H^w(x)|x>} of a process", cmd_build_ensemble), ".proc file");
    file_arg(add("check-ensemble", "Exact orthonormality and local obstruction of an ensemble", cmd_check_ensemble),
             ".ens file");
    file_arg(add("invert-ensemble", "Read the process off an ensemble", cmd_invert_ensemble), ".ens file");

    auto *measure = add("measure", "Measure a product state in the process basis via the process", cmd_measure);
    file_arg(measure, ".proc or .ens file");
    measure->add_option("--state", o.state, "Product state label over {0,1,+,-}")->required();
    measure->add_option("--samples", o.config.samples, "Sample this many runs instead of exact probabilities");
    measure->add_flag("--force-nonorthonormal", o.config.force_nonorthonormal,
                      "Report raw weights even if the ensemble is not orthonormal");

    auto *dist = add("distribution", "Computational-basis distribution of a product state", cmd_distribution);
    dist->add_option("--state", o.state, "Product state label over {0,1,+,-}")->required();
    dist->add_option("--hadamards", o.hadamards, "Apply H where this bit string has a 1 first");
    dist->add_option("--samples", o.config.samples, "Also draw this many samples");

    auto *channel = add("channel", "Simulate the process channel from a measurement in its basis", cmd_channel);
    file_arg(channel, ".proc or .ens file");
    channel->add_option("--input", o.input_bits, "Only this input (default: all inputs)");
    channel->add_option("--samples", o.config.samples, "Sample this many runs per input");

    auto *disc = add("discriminate", "Identify every ensemble state through the measurement protocol", cmd_discriminate);
    file_arg(disc, ".proc or .ens file");
    disc->add_option("--trials", o.trials, "Trials per state")->default_val(1000);

    auto *en = add("enumerate", "Exhaustive census of classical processes (n <= 3)", cmd_enumerate);
    en->add_option("--n", o.parties, "Party count")->required();
    en->add_option("--filter", o.filter, "classical | no-global-past")->default_val("no-global-past");
    en->add_flag("--canonical", o.config.canonical, "Keep one canonical table per symmetry class");

    auto *sm = add("sample", "Test uniformly random tables", cmd_sample);
    sm->add_option("--n", o.parties, "Party count")->required();
    sm->add_option("--count", o.count, "Random tables to examine")->required();
    sm->add_option("--cap", o.cap, "Processes to keep")->default_val(100);
    sm->add_option("--inject", o.inject, "Extra .proc/.ens files to examine");

    auto *fp = add("fixed-points", "Fixed points of w o mu", cmd_fixed_points);
    file_arg(fp, ".proc or .ens file");
    fp->add_option("--intervention", o.intervention, "e.g. ID,NOT,CONST0")->required();

    auto *red = add("reduce", "Restrict a process to some parties with the others' inputs fixed", cmd_reduce);
    file_arg(red, ".proc or .ens file");
    red->add_option("--keep", o.keep, "Kept parties, 1-based, e.g. 1,2")->required();
    red->add_option("--fix", o.fix, "Pinned inputs, e.g. 3=0");

    auto *wit = add("witness", "Double fixed point certificate for a non-orthogonal pair", cmd_witness);
    file_arg(wit, ".proc or .ens file");
    wit->add_option("--x", o.x_bits, "First input word")->required();
    wit->add_option("--y", o.y_bits, "Second input word")->required();

    file_arg(add("canonicalize", "Smallest table in the symmetry orbit", cmd_canonicalize), ".proc or .ens file");
    file_arg(add("gram", "Floating-point Gram matrix check of an ensemble", cmd_gram), ".ens file");

    std::vector<const char *> argv{"acausal"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    if (!o.input.empty()) {
        o.config.inputs.push_back(o.input);
    }
    for (const std::string &path : o.inject) {
        o.config.inputs.push_back(path);
    }
    try {
        std::ostringstream report;
        write_header(report, o.config);
        const int code = handler(o, report);
        // Commands that write tables use --out themselves; the rest save the report.
        static const std::set<std::string> kWritesTables{"build-ensemble", "invert-ensemble", "enumerate", "sample"};
        if (!o.config.output.empty() && !kWritesTables.contains(o.config.subcommand)) {
            write_file(o.config.output, report.str());
        }
        out << report.str();
        return code;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace acausal::cli
