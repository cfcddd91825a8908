// Copyright 2026 The selquant Authors
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

#include "selquant/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>

#include "selquant/instances.hpp"
#include "selquant/io.hpp"

namespace selquant {

namespace {

using io::json;

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

struct Config {
    std::string process, chain, circuit, suite, field = "sqrt2", format = "text";
    std::string method = "exact", reduction = "auto", beta, output_path, seed_value;
    long truncate = 16, precision = 32, samples = 0, steps = 64, random = 0;
    std::optional<long> mu, nu;
    std::optional<int> start, target;
    std::uint64_t seed = 1;
    bool diagnostics = false;
};

bool json_out(const Config &c) {
    return c.format == "json";
}

Reduction reduction_of(const std::string &s) {
    if (s == "full") return Reduction::Full;
    if (s == "compressed") return Reduction::Compressed;
    return Reduction::Auto;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

NumberField field_arg(const std::string &s) {
    if (std::filesystem::exists(s)) return io::parse_field(io::load_file(s));
    return NumberField::preset(s);
}

ApproxOptions approx_options(const Config &c) {
    ApproxOptions o;
    o.mu_override = c.mu;
    o.nu_override = c.nu;
    return o;
}

void print_result(std::ostream &out, const Config &c, const DecisionResult &r) {
    if (json_out(c)) return;
    out << "verdict: " << to_string(r.verdict) << " (" << to_string(r.method) << ")";
    if (!r.certified) out << " uncertified";
    out << "\n";
    if (r.witness) out << "limit: " << r.witness->to_string() << "\n";
    if (!c.diagnostics) return;
    if (r.limit) {
        out << "order k: " << r.limit->order << "\n";
        out << "deg det(I - zM): " << r.limit->det_degree << "\n";
        out << "deg minor: " << r.limit->minor_degree << "\n";
    }
    if (r.constants) {
        const auto &k = *r.constants;
        out << "h: " << k.h << "\nentry degree: " << k.entry_degree << "\np: " << k.p << "\nheight_v: " << k.height_v
            << "\nheight_u: " << k.height_u << "\nlog2 delta_b: " << ceil_log2(k.delta_b) << "\nc1: " << k.c1
            << "\nmu: " << k.mu << "\nnu: " << k.nu << "\n";
    }
    if (r.approx) {
        out << "mu used: " << r.approx->mu << "\nnu used: " << r.approx->nu
            << "\nbits(V): " << mpz_sizeinbase(r.approx->v.get_mpz_t(), 2) << "\nsign(F): " << sgn(r.approx->f)
            << "\n";
    }
}

int cmd_validate(std::ostream &out, const Config &c) {
    io::ProcessFile p = io::parse_process(io::load_file(c.process));
    json report = json::object();
    bool ok = true;
    auto check = [&](const char *name, const std::function<void()> &fn) {
        try {
            fn();
            report[name] = "OK";
        } catch (const Error &e) {
            ok = false;
            report[name] = e.what();
        }
    };
    check("completeness", [&] { validate_operation(p.op); });
    check("hermitian", [&] { check_hermitian(p.rho); });
    check("trace", [&] {
        FieldElement t = real_trace(p.rho);
        if (t != FieldElement(1)) throw Error(ErrorKind::TraceViolation, "trace violation: trace is " + t.to_string());
    });
    check("psd", [&] {
        if (!is_psd(p.rho)) throw Error(ErrorKind::PsdViolation, "PSD violation: rho has a negative eigenvalue");
    });
    check("beta", [&] { check_beta(p.beta); });
    if (json_out(c)) {
        report["ok"] = ok;
        out << report.dump(2) << "\n";
    } else {
        for (const char *k : {"completeness", "hermitian", "trace", "psd", "beta"})
            out << k << ": " << report[k].get<std::string>() << "\n";
        out << (ok ? "OK" : "INVALID") << "\n";
    }
    return ok ? kAccept : kError;
}

int cmd_simulate(std::ostream &out, const Config &c) {
    io::ProcessFile p = io::parse_process(io::load_file(c.process));
    validate_operation(p.op);
    DensityMatrix rho = DensityMatrix::create(p.rho);
    json rows = json::array();
    std::vector<int> prefix;
    for (long t = 0; t <= c.truncate; ++t) {
        auto with_one = prefix;
        with_one.push_back(1);
        rows.push_back(io::to_json(prefix_probability(p.op, rho, with_one)));
        prefix.push_back(0);
    }
    FieldElement total = halting_probability_truncated(p.op, rho, c.truncate);
    json report = {{"first_one", rows}, {"halting_truncated", io::to_json(total)}, {"truncate", c.truncate}};
    if (c.samples > 0) {
        TrajectorySampler sampler(p.op, rho);
        std::mt19937_64 rng(c.seed);
        long hits = 0, first = 0;
        for (long s = 0; s < c.samples; ++s) {
            auto traj = sampler.sample(rng, static_cast<int>(c.steps));
            if (!traj.empty() && traj.front() == 1) ++first;
            auto it = std::find_if(traj.begin(), traj.end(), [](int r) { return r != 0; });
            if (it != traj.end() && *it == 1) ++hits;
        }
        const double n = static_cast<double>(c.samples);
        report["samples"] = c.samples;
        report["empirical_first_output_one"] = static_cast<double>(first) / n;
        report["empirical"] = static_cast<double>(hits) / n;
    }
    if (json_out(c)) {
        out << report.dump(2) << "\n";
        return kAccept;
    }
    for (long t = 0; t <= c.truncate; ++t) {
        out << "Pr[0^" << t << " 1] = " << (rows[t].is_string() ? rows[t].get<std::string>() : rows[t].dump()) << "\n";
    }
    out << "sum to T=" << c.truncate << ": " << total.to_string() << "\n";
    if (c.samples > 0) {
        out << "empirical Pr[R_1 = 1]: " << report["empirical_first_output_one"] << "\n";
        out << "empirical Pr[first nonzero output is 1]: " << report["empirical"] << "\n";
    }
    return kAccept;
}

int cmd_decide(std::ostream &out, const Config &c) {
    io::ProcessFile p = io::parse_process(io::load_file(c.process));
    validate_operation(p.op);
    DensityMatrix rho = DensityMatrix::create(p.rho);
    FieldElement beta = c.beta.empty() ? p.beta : io::parse_real(json(c.beta), p.field);
    DecisionInstance inst = process_instance(p.op, rho, beta, reduction_of(c.reduction));
    std::vector<DecisionResult> results;
    if (c.method == "exact" || c.method == "both") results.push_back(decide_exact(inst));
    if (c.method == "approx" || c.method == "both") {
        NumberField f = instance_field(inst);
        BoundConstants k = derive_constants(inst, f);
        results.push_back(decide_approx(inst, f, default_scheme(f), k, approx_options(c)));
    }
    json report = json::array();
    for (const auto &r : results) {
        print_result(out, c, r);
        json j = io::to_json(r);
        j["provenance"] = inst.provenance;
        report.push_back(j);
    }
    if (json_out(c)) out << (results.size() == 1 ? report[0] : report).dump(2) << "\n";
    if (results.size() == 2 && results[0].verdict != results[1].verdict) {
        throw Error(ErrorKind::RouteMismatch, "exact and approximate routes disagree");
    }
    return results.front().verdict == Verdict::Accept ? kAccept : kReject;
}

int cmd_markov(std::ostream &out, const Config &c) {
    MarkovSpec m = io::parse_chain(io::load_file(c.chain));
    int start = c.start ? *c.start - 1 : m.start;
    int target = c.target ? *c.target - 1 : m.accept;
    FieldElement v = markov_absorption(m.matrix, start, target);
    int code = kAccept;
    if (!c.beta.empty()) {
        FieldElement beta = io::parse_real(json(c.beta), m.field);
        check_beta(beta);
        code = fe_sign(v - beta) > 0 ? kAccept : kReject;
    }
    if (json_out(c)) {
        out << json{{"probability", io::to_json(v)}, {"start", start + 1}, {"target", target + 1}}.dump(2) << "\n";
    } else {
        out << "absorption probability: " << v.to_string() << "\n";
    }
    return code;
}

int cmd_approx(std::ostream &out, const Config &c) {
    NumberField f = field_arg(c.field);
    NewtonScheme scheme = default_scheme(f);
    if (!c.seed_value.empty()) {
        Rational s = io::parse_rational(json(c.seed_value));
        scheme = certify_seed(f, s.get_num(), s.get_den());
    }
    auto t0 = std::chrono::steady_clock::now();
    Approximant a = approximant(scheme, c.precision);
    double secs = seconds_since(t0);
    RationalInterval root = f.refine_root(pow2(-(c.precision + 2)));
    Rational v = a.value();
    Rational err = std::max(abs(v - root.lo), abs(v - root.hi));
    bool ok = err < pow2(-c.precision);
    if (json_out(c)) {
        out << json{{"num", a.num.get_str()},  {"den", a.den.get_str()}, {"n", c.precision},
                    {"depth", a.depth},        {"within_bound", ok},     {"seconds", secs}}
                   .dump(2)
            << "\n";
    } else {
        out << "f/g = " << a.num << " / " << a.den << "\ndepth: " << a.depth << "\n|f/g - alpha| < 2^-" << c.precision
            << ": " << (ok ? "yes" : "NO") << "\n";
    }
    return ok ? kAccept : kError;
}

int cmd_bounds(std::ostream &out, const Config &c) {
    io::ProcessFile p = io::parse_process(io::load_file(c.process));
    validate_operation(p.op);
    DensityMatrix rho = DensityMatrix::create(p.rho);
    FieldElement beta = c.beta.empty() ? p.beta : io::parse_real(json(c.beta), p.field);
    DecisionInstance inst = process_instance(p.op, rho, beta, reduction_of(c.reduction));
    BoundConstants k = derive_constants(inst, instance_field(inst));
    json j = io::to_json(k);
    j["provenance"] = inst.provenance;
    if (json_out(c)) {
        out << j.dump(2) << "\n";
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) {
            out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
    }
    return kAccept;
}

int cmd_circuit_compile(std::ostream &out, const Config &c) {
    CircuitSpec spec = io::parse_circuit(io::load_file(c.circuit));
    CompiledProcess cp = circuit_to_process(spec);
    FieldElement beta = c.beta.empty() ? spec.field.zero() : io::parse_real(json(c.beta), spec.field);
    json j = io::process_to_json({spec.field, cp.op, cp.rho.matrix(), beta});
    if (c.output_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream f(c.output_path);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + c.output_path);
        f << j.dump(2) << "\n";
        out << "wrote " << c.output_path << " (dim " << cp.op.dim() << ", " << cp.index_qubits << " index qubits)\n";
    }
    return kAccept;
}

int cmd_circuit_accept(std::ostream &out, const Config &c) {
    CircuitSpec spec = io::parse_circuit(io::load_file(c.circuit));
    FieldElement v = circuit_accept_probability(spec);
    if (json_out(c)) out << json{{"probability", io::to_json(v)}}.dump(2) << "\n";
    else out << "acceptance probability: " << v.to_string() << "\n";
    return kAccept;
}

struct BenchRow {
    std::string name;
    int p = 0;
    long mu = 0, nu = 0;
    std::size_t alpha_bits = 0, v_bits = 0;
    double t_det = 0, t_constants = 0, t_newton = 0, t_approx = 0;
    std::string verdict;
};

int cmd_bench(std::ostream &out, const Config &c) {
    std::vector<std::pair<std::string, io::ProcessFile>> items;
    if (!c.suite.empty()) {
        if (!std::filesystem::is_directory(c.suite)) {
            throw Error(ErrorKind::InvalidArgument, "suite directory " + c.suite + " does not exist");
        }
        std::vector<std::filesystem::path> files;
        for (const auto &e : std::filesystem::directory_iterator(c.suite))
            if (e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto &f : files) items.emplace_back(f.filename().string(), io::parse_process(io::load_file(f)));
    } else {
        SuiteParams sp;
        sp.seed = c.seed;
        sp.count = static_cast<int>(std::max(1L, c.random));
        sp.dims = {2};
        NumberField f = field_arg(c.field);
        for (auto &inst : random_suite(f, sp)) {
            items.emplace_back(inst.name, io::ProcessFile{f, inst.op, inst.rho.matrix(), inst.beta});
        }
    }
    std::vector<BenchRow> rows;
    for (auto &[name, p] : items) {
        BenchRow row;
        row.name = name;
        validate_operation(p.op);
        DensityMatrix rho = DensityMatrix::create(p.rho);
        DecisionInstance inst = process_instance(p.op, rho, p.beta, reduction_of(c.reduction));
        row.p = inst.p();
        auto t0 = std::chrono::steady_clock::now();
        DecisionResult exact = decide_exact(inst);
        row.t_det = seconds_since(t0);
        NumberField f = instance_field(inst);
        t0 = std::chrono::steady_clock::now();
        BoundConstants k = derive_constants(inst, f);
        row.t_constants = seconds_since(t0);
        NewtonScheme scheme = default_scheme(f);
        ApproxOptions o = approx_options(c);
        long nu = o.nu_override.value_or(k.nu);
        t0 = std::chrono::steady_clock::now();
        Approximant a = approximant(scheme, nu + 1);
        row.t_newton = seconds_since(t0);
        row.alpha_bits = mpz_sizeinbase(a.den.get_mpz_t(), 2);
        t0 = std::chrono::steady_clock::now();
        ApproxDetails d = decide_approx_details(inst, scheme, k, o);
        row.t_approx = seconds_since(t0);
        row.mu = d.mu;
        row.nu = d.nu;
        row.v_bits = mpz_sizeinbase(d.v.get_mpz_t(), 2);
        row.verdict = to_string(exact.verdict);
        if (d.verdict != exact.verdict) row.verdict += "/MISMATCH";
        rows.push_back(row);
    }
    if (json_out(c)) {
        json j = json::array();
        for (const auto &r : rows) {
            j.push_back({{"name", r.name},       {"p", r.p},
                         {"mu", r.mu},           {"nu", r.nu},
                         {"alpha_bits", r.alpha_bits}, {"v_bits", r.v_bits},
                         {"verdict", r.verdict}, {"t_det", r.t_det},
                         {"t_constants", r.t_constants}, {"t_newton", r.t_newton},
                         {"t_approx", r.t_approx}});
        }
        out << j.dump(2) << "\n";
    } else {
        out << std::left << std::setw(18) << "name" << std::setw(5) << "p" << std::setw(8) << "mu" << std::setw(9)
            << "nu" << std::setw(12) << "alpha_bits" << std::setw(10) << "V_bits" << std::setw(9) << "verdict"
            << "t_det t_const t_newton t_approx\n";
        out << std::fixed << std::setprecision(4);
        for (const auto &r : rows) {
            out << std::setw(18) << r.name << std::setw(5) << r.p << std::setw(8) << r.mu << std::setw(9) << r.nu
                << std::setw(12) << r.alpha_bits << std::setw(10) << r.v_bits << std::setw(9) << r.verdict
                << r.t_det << " " << r.t_constants << " " << r.t_newton << " " << r.t_approx << "\n";
        }
    }
    return kAccept;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact simulation and cutpoint decisions for selective quantum processes", "selquant"};
    app.require_subcommand(1);
    Config c;
    auto add_format = [&](CLI::App *s) {
        s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_process = [&](CLI::App *s) { s->add_option("--process,-p", c.process, "process JSON file")->required(); };
    auto add_precision = [&](CLI::App *s) {
        s->add_option("--mu", c.mu, "override the z precision (uncertified)")->check(CLI::PositiveNumber);
        s->add_option("--nu", c.nu, "override the alpha precision (uncertified)")->check(CLI::PositiveNumber);
        s->add_option("--reduction", c.reduction, "auto, full or compressed")
            ->check(CLI::IsMember({"auto", "full", "compressed"}));
    };

    auto *validate = app.add_subcommand("validate", "check completeness and density conditions");
    add_process(validate);
    add_format(validate);

    auto *simulate = app.add_subcommand("simulate", "exact prefix probabilities and optional sampling");
    add_process(simulate);
    add_format(simulate);
    simulate->add_option("--truncate,-T", c.truncate, "last step T")->check(CLI::NonNegativeNumber);
    simulate->add_option("--samples", c.samples, "Monte-Carlo trajectories")->check(CLI::NonNegativeNumber);
    simulate->add_option("--steps", c.steps, "steps per trajectory")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", c.seed, "sampler seed");

    auto *decide = app.add_subcommand("decide", "is Pr[halt with 1] > beta?");
    add_process(decide);
    add_format(decide);
    add_precision(decide);
    decide->add_option("--method", c.method, "exact, approx or both")->check(CLI::IsMember({"exact", "approx", "both"}));
    decide->add_option("--beta", c.beta, "cutpoint, overriding the file");
    decide->add_flag("--diagnostics", c.diagnostics, "print orders, degrees and constants");

    auto *markov = app.add_subcommand("markov", "absorption probability of a chain");
    markov->add_option("--chain,-c", c.chain, "chain JSON file")->required();
    markov->add_option("--start", c.start, "1-based start state (default from file)");
    markov->add_option("--target", c.target, "1-based absorbing target (default: accept state)");
    markov->add_option("--beta", c.beta, "exit 0 iff the probability exceeds beta");
    add_format(markov);

    auto *approx = app.add_subcommand("approx", "Newton approximant of the field generator");
    approx->add_option("--field", c.field, "preset name or field JSON file");
    approx->add_option("-n,--precision", c.precision, "target bits")->check(CLI::PositiveNumber);
    approx->add_option("--seed-value", c.seed_value, "Newton seed as a rational, e.g. 3/2");
    add_format(approx);

    auto *bounds = app.add_subcommand("bounds", "instance constants for the approximate route");
    add_process(bounds);
    add_format(bounds);
    bounds->add_option("--beta", c.beta, "cutpoint, overriding the file");
    bounds->add_option("--reduction", c.reduction, "auto, full or compressed")
        ->check(CLI::IsMember({"auto", "full", "compressed"}));

    auto *circuit = app.add_subcommand("circuit", "circuit front end");
    circuit->require_subcommand(1);
    auto *compile = circuit->add_subcommand("compile", "emit the equivalent process JSON");
    compile->add_option("--circuit", c.circuit, "circuit JSON file")->required();
    compile->add_option("--beta", c.beta, "cutpoint stored in the process file");
    compile->add_option("-o,--output", c.output_path, "write to a file instead of stdout");
    auto *accept = circuit->add_subcommand("accept-prob", "exact acceptance probability");
    accept->add_option("--circuit", c.circuit, "circuit JSON file")->required();
    add_format(accept);

    auto *bench = app.add_subcommand("bench", "time the decision phases");
    bench->add_option("--suite", c.suite, "directory of process JSON files");
    bench->add_option("--random", c.random, "generate this many instances instead");
    bench->add_option("--seed", c.seed, "generator seed");
    bench->add_option("--field", c.field, "field for generated instances");
    add_precision(bench);
    add_format(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kAccept;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kAccept;
    } catch (const CLI::ParseError &e) {
        err << "error: usage: " << e.what() << "\n";
        return kError;
    }

    try {
        if (*validate) return cmd_validate(out, c);
        if (*simulate) return cmd_simulate(out, c);
        if (*decide) return cmd_decide(out, c);
        if (*markov) return cmd_markov(out, c);
        if (*approx) return cmd_approx(out, c);
        if (*bounds) return cmd_bounds(out, c);
        if (*compile) return cmd_circuit_compile(out, c);
        if (*accept) return cmd_circuit_accept(out, c);
        if (*bench) return cmd_bench(out, c);
    } catch (const Error &e) {
        if (json_out(c)) {
            err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return kError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace selquant
