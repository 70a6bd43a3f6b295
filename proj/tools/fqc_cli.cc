// Copyright 2026 <project authors>
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

// Command-line front end. Every number written here comes from a library call; this file only parses
// options, routes them and serializes results.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqc/codes/color_code.h"
#include "fqc/codes/decoder.h"
#include "fqc/codes/memory.h"
#include "fqc/codes/stabilizer_code.h"
#include "fqc/gadgets/scaling.h"
#include "fqc/pairing/experiments.h"
#include "fqc/verify/suite.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;
constexpr int kSchemaVersion = 1;
constexpr const char *kOutputEnv = "FQC_OUTPUT_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::string config;
    double tolerance = 1e-10;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

template <class T>
std::vector<T> parse_list(const std::string &text, const char *what) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<T>(v));
            if (static_cast<double>(out.back()) != v) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw UsageError(std::string("invalid value in --") + what + ": " + item);
        }
    }
    if (out.empty()) throw UsageError(std::string("--") + what + " needs at least one value");
    return out;
}

std::filesystem::path output_dir(const Common &c) {
    if (!c.out.empty()) return c.out;
    if (const char *env = std::getenv(kOutputEnv); env && *env) return env;
    return ".";
}

std::filesystem::path write_output(const Common &c, const std::string &stem, const std::string &ext,
                                   const std::string &content) {
    std::filesystem::path dir = output_dir(c);
    std::filesystem::create_directories(dir);
    std::filesystem::path p = dir / (stem + "." + ext);
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << content;
    return p;
}

json header(const std::string &command, const Common &c) {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"seed", c.seed}};
}

// ---- verify ----

struct VerifyArgs {
    std::string corrupt;
};

int cmd_verify(const Common &c, const VerifyArgs &a) {
    fqc::VerifyOptions opt;
    opt.tolerance = c.tolerance;
    opt.seed = c.seed;
    if (!a.corrupt.empty()) {
        auto k = fqc::gate_kind_from_name(a.corrupt);
        if (!k) throw UsageError("unknown gate kind: " + a.corrupt);
        opt.corrupt_kind = *k;
    }
    fqc::VerifyReport r = fqc::run_verify(opt);
    std::filesystem::path p;
    if (c.format == "csv") {
        std::string csv = "group,name,deviation,tolerance,passed\n";
        for (const auto &ch : r.checks) {
            csv += ch.group + "," + ch.name + "," + num(ch.deviation) + "," + num(ch.tolerance) + "," +
                   (ch.passed ? "1" : "0") + "\n";
        }
        p = write_output(c, "verify", "csv", csv);
    } else {
        json j = header("verify", c);
        j["report"] = r.to_json();
        p = write_output(c, "verify", "json", j.dump(2) + "\n");
    }
    size_t passed = r.checks.size() - r.failures().size();
    std::cout << "verify: " << passed << "/" << r.checks.size() << " checks passed -> " << p.string() << "\n";
    for (const auto &f : r.failures()) std::cout << "FAILED " << f << "\n";
    return r.ok() ? 0 : 1;
}

// ---- codes ----

struct CodesArgs {
    std::string family;
    uint32_t n = 0;
    uint32_t d = 0;
    double noise = 0;
    double loss = 0;
    uint64_t shots = 1000;
    uint32_t rounds = 1;
};

int cmd_codes(const Common &c, const CodesArgs &a) {
    fqc::StabilizerCode code;
    if (a.family == "repetition") {
        if (a.n == 0) throw UsageError("repetition needs --n");
        code = fqc::build_repetition(a.n);
    } else if (a.family == "color") {
        if (a.d == 0) throw UsageError("color needs --d");
        code = fqc::build_color_code(a.d);
    } else {
        throw UsageError("unknown code family: " + a.family);
    }
    fqc::MemoryConfig mc;
    mc.rounds = a.rounds;
    mc.shots = a.shots;
    mc.seed = c.seed;
    fqc::MemoryResult mem = fqc::memory_experiment(code, {a.noise, a.loss}, mc);
    fqc::SyndromeTable table = fqc::build_lookup_table(code);

    std::filesystem::path p;
    if (c.format == "csv") {
        write_output(c, "codes_syndromes", "csv", table.to_csv());
        std::string csv = "family,sites,generators,noise,loss,rounds,shots,failures,rate,ci_low,ci_high\n";
        csv += a.family + "," + std::to_string(code.n_sites) + "," + std::to_string(code.generators.size()) + "," +
               num(a.noise) + "," + num(a.loss) + "," + std::to_string(a.rounds) + "," + std::to_string(mem.shots) +
               "," + std::to_string(mem.failures) + "," + num(mem.rate) + "," + num(mem.ci_low) + "," +
               num(mem.ci_high) + "\n";
        p = write_output(c, "codes", "csv", csv);
    } else {
        json j = header("codes", c);
        j["code"] = code.to_json();
        j["noise"] = {{"phase", a.noise}, {"loss", a.loss}};
        j["memory"] = mem.to_json();
        j["syndrome_table"] = table.to_csv();
        j["table_collisions"] = table.collisions;
        p = write_output(c, "codes", "json", j.dump(2) + "\n");
    }
    std::cout << code.name << ": " << code.n_sites << " sites, " << code.generators.size()
              << " generators, logical error rate " << num(mem.rate) << " -> " << p.string() << "\n";
    return 0;
}

// ---- fft ----

struct FftArgs {
    std::string sizes = "2,4,8,16";
    std::string method = "fermion_ffft";
};

int cmd_fft(const Common &c, const FftArgs &a) {
    auto ns = parse_list<uint32_t>(a.sizes, "sizes");
    fqc::ResourceTable t;
    try {
        t = fqc::resource_table(ns);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (a.method != "all") {
        std::vector<fqc::ResourceRow> kept;
        for (const auto &r : t.rows) {
            if (r.method == a.method) kept.push_back(r);
        }
        if (kept.empty()) throw UsageError("unknown method: " + a.method);
        t.rows = kept;
        std::vector<fqc::ScalingFit> fits;
        for (const auto &f : t.fits) {
            if (f.method == a.method) fits.push_back(f);
        }
        t.fits = fits;
    }
    std::filesystem::path p;
    if (c.format == "csv") {
        p = write_output(c, "fft", "csv", t.to_csv());
    } else {
        json j = header("fft", c);
        j["sizes"] = ns;
        j["table"] = t.to_json();
        p = write_output(c, "fft", "json", j.dump(2) + "\n");
    }
    std::cout << "fft: " << t.rows.size() << " rows -> " << p.string() << "\n";
    return 0;
}

// ---- pairing ----

struct PairingArgs {
    std::string experiment;
    std::string n = "0";
    std::string n1;
    std::string n2 = "100";
    std::string source = "fock";
    std::string wiring = "both";
    uint32_t points = 16;
    uint32_t n1_start = 100;
    uint32_t n1_max = 6400;
};

const char *kPairingCsvHeader = "experiment,N1,N2,theta,value,fit_C,fit_D,residual\n";

std::string csv_row(const std::string &exp, const std::string &n1, const std::string &n2, const std::string &theta,
                    double value, const std::string &c = "", const std::string &d = "", const std::string &res = "") {
    return exp + "," + n1 + "," + n2 + "," + theta + "," + num(value) + "," + c + "," + d + "," + res + "\n";
}

// Power law of y against x when every point is usable.
json exponent(const std::vector<double> &x, const std::vector<double> &y) {
    std::vector<double> xs, ys;
    for (size_t k = 0; k < x.size(); k++) {
        if (x[k] > 0 && y[k] > 0) {
            xs.push_back(x[k]);
            ys.push_back(y[k]);
        }
    }
    if (xs.size() < 2) return nullptr;
    return fqc::fit_power_law(xs, ys).to_json();
}

int cmd_pairing(const Common &c, const PairingArgs &a) {
    fqc::MoleculeSource source;
    try {
        source = fqc::parse_source(a.source);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    json j = header("pairing", c);
    j["experiment"] = a.experiment;
    std::string csv = kPairingCsvHeader;
    std::string summary;

    if (a.experiment == "ramsey") {
        auto ns = parse_list<double>(a.n, "n");
        if (a.points < 16) throw UsageError("--points must be at least 16");
        std::vector<fqc::Wiring> wirings;
        if (a.wiring == "both") {
            wirings = {fqc::Wiring::Same, fqc::Wiring::Cross};
        } else {
            try {
                wirings = {fqc::parse_wiring(a.wiring)};
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
        json fringes = json::array();
        json exps = json::object();
        for (fqc::Wiring w : wirings) {
            std::vector<double> miss, off;
            for (double n : ns) {
                fqc::FringeData d = fqc::ramsey({n, source}, fqc::theta_grid(a.points), w);
                fringes.push_back(d.to_json());
                const std::string tag = "ramsey-" + fqc::to_string(w);
                for (size_t k = 0; k < d.theta.size(); k++) {
                    csv += csv_row(tag, num(n), "", num(d.theta[k]), d.p_full[k], num(d.fit.contrast),
                                   num(d.fit.offset), num(d.fit.residual));
                }
                miss.push_back(1 - d.fit.contrast);
                off.push_back(d.fit.offset);
                summary += tag + " N=" + num(n) + " C=" + num(d.fit.contrast) + " D=" + num(d.fit.offset) + "\n";
            }
            exps[fqc::to_string(w)] = {{"one_minus_C", exponent(ns, miss)}, {"D", exponent(ns, off)}};
        }
        j["fringes"] = fringes;
        j["exponents"] = exps;
    } else if (a.experiment == "bell") {
        auto n1s = parse_list<uint32_t>(a.n1.empty() ? "1600" : a.n1, "n1");
        auto n2s = parse_list<uint32_t>(a.n2, "n2");
        json results = json::array();
        json exps = json::object();
        for (uint32_t n1 : n1s) {
            std::vector<double> x, y;
            for (uint32_t n2 : n2s) {
                fqc::BellResult r = fqc::bell_experiment(n1, n2);
                results.push_back(r.to_json());
                csv += csv_row("bell", std::to_string(n1), std::to_string(n2), "", r.infidelity);
                x.push_back(n2);
                y.push_back(r.infidelity);
                summary += "bell N1=" + std::to_string(n1) + " N2=" + std::to_string(n2) +
                           " infidelity=" + num(r.infidelity) + "\n";
            }
            exps[std::to_string(n1)] = exponent(x, y);
        }
        j["results"] = results;
        j["exponents_vs_N2"] = exps;
    } else if (a.experiment == "choi") {
        auto n2s = parse_list<uint32_t>(a.n2, "n2");
        json results = json::array();
        std::vector<double> x, y;
        for (uint32_t n2 : n2s) {
            json entry;
            fqc::ChoiResult r;
            if (a.n1.empty()) {
                fqc::ChoiConvergence conv = fqc::choi_converged(n2, source, a.n1_start, a.n1_max);
                entry = conv.to_json();
                r = conv.result();
            } else {
                r = fqc::choi_experiment(parse_list<uint32_t>(a.n1, "n1").front(), n2, source);
                entry = {{"result", r.to_json()}};
            }
            results.push_back(entry);
            csv += csv_row("choi-" + fqc::to_string(source), std::to_string(r.n1), std::to_string(n2), "",
                           r.average_infidelity);
            x.push_back(n2);
            y.push_back(r.average_infidelity);
            summary += "choi N1=" + std::to_string(r.n1) + " N2=" + std::to_string(n2) +
                       " average infidelity=" + num(r.average_infidelity) +
                       " entanglement infidelity=" + num(r.entanglement_infidelity()) + "\n";
        }
        j["results"] = results;
        j["exponent_vs_N2"] = exponent(x, y);
    } else {
        throw UsageError("unknown experiment: " + a.experiment);
    }

    std::filesystem::path p = c.format == "csv" ? write_output(c, "pairing", "csv", csv)
                                                : write_output(c, "pairing", "json", j.dump(2) + "\n");
    std::cout << summary << "pairing -> " << p.string() << "\n";
    return 0;
}

// ---- configuration file ----

std::string config_value(const std::string &key, const json &v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_unsigned() || v.is_number_integer() || v.is_number_float()) return v.dump();
    if (v.is_array()) {
        std::string s;
        for (const auto &e : v) {
            if (!s.empty()) s += ",";
            s += config_value(key, e);
        }
        return s;
    }
    throw UsageError("config key '" + key + "' has an unsupported value");
}

// Config keys become options placed before the user's own, so explicit flags win.
std::vector<std::string> merge_config(CLI::App &app, const std::vector<std::string> &args) {
    std::string path;
    size_t sub_at = args.size();
    for (size_t k = 1; k < args.size(); k++) {
        if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
        if (args[k].rfind("--config=", 0) == 0) path = args[k].substr(9);
        if (sub_at == args.size() && app.get_subcommand_no_throw(args[k])) sub_at = k;
    }
    if (path.empty() || sub_at == args.size()) return args;
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config " + path);
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::parse_error &e) {
        throw UsageError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!cfg.is_object()) throw UsageError("config must be a JSON object");
    CLI::App *sub = app.get_subcommand(args[sub_at]);
    std::vector<std::string> global, local;
    for (const auto &[key, value] : cfg.items()) {
        const std::string opt = "--" + key;
        if (key == "config") throw UsageError("config files cannot include other configs");
        if (sub->get_option_no_throw(opt)) {
            local.push_back(opt);
            local.push_back(config_value(key, value));
        } else if (app.get_option_no_throw(opt)) {
            global.push_back(opt);
            global.push_back(config_value(key, value));
        } else {
            throw UsageError("unknown config key: " + key);
        }
    }
    std::vector<std::string> out(args.begin(), args.begin() + 1);
    out.insert(out.end(), global.begin(), global.end());
    out.insert(out.end(), args.begin() + 1, args.begin() + static_cast<long>(sub_at) + 1);
    out.insert(out.end(), local.begin(), local.end());
    out.insert(out.end(), args.begin() + static_cast<long>(sub_at) + 1, args.end());
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"fqc: fermionic circuits, codes, FFFT resources and pairing experiments"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Common common;
    app.add_option("--seed", common.seed, "64-bit seed (default 0)");
    app.add_option("--out", common.out, std::string("output directory (default $") + kOutputEnv + " or .)");
    app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--config", common.config, "JSON file with option values");
    app.add_option("--tol", common.tolerance, "numerical tolerance for checks");
    app.fallthrough();

    VerifyArgs va;
    CLI::App *verify = app.add_subcommand("verify", "conjugation rules, braids, detection, logical gates");
    verify->add_option("--corrupt", va.corrupt, "negate the symbolic rule of this gate kind (negative control)");

    CodesArgs ca;
    CLI::App *codes = app.add_subcommand("codes", "code construction and memory experiment");
    codes->add_option("--family", ca.family, "repetition or color")->required();
    codes->add_option("--n", ca.n, "repetition length");
    codes->add_option("--d", ca.d, "colour-code distance");
    codes->add_option("--noise", ca.noise, "phase error rate per site and round");
    codes->add_option("--loss", ca.loss, "loss rate per site and round");
    codes->add_option("--shots", ca.shots, "shots");
    codes->add_option("--rounds", ca.rounds, "rounds");

    FftArgs fa;
    CLI::App *fft = app.add_subcommand("fft", "FFFT and baseline resource table");
    fft->add_option("--sizes", fa.sizes, "comma-separated powers of two");
    fft->add_option("--method", fa.method, "fermion_ffft, qubit_fft, qubit_fft_local, fswap_network or all");

    PairingArgs pa;
    CLI::App *pairing = app.add_subcommand("pairing", "molecule-assisted pairing benchmarks");
    pairing->add_option("--experiment", pa.experiment, "ramsey, bell or choi")->required();
    pairing->add_option("--n", pa.n, "ramsey source molecule numbers, comma-separated");
    pairing->add_option("--n1", pa.n1, "readout mode molecules (choi: omit to converge)");
    pairing->add_option("--n2", pa.n2, "gate mode molecules, comma-separated");
    pairing->add_option("--source", pa.source, "fock or poisson");
    pairing->add_option("--wiring", pa.wiring, "same, cross or both");
    pairing->add_option("--points", pa.points, "theta grid points");
    pairing->add_option("--n1-start", pa.n1_start, "first N1 of the convergence search");
    pairing->add_option("--n1-max", pa.n1_max, "largest N1 of the convergence search");

    try {
        std::vector<std::string> args(argv, argv + argc);
        args = merge_config(app, args);
        std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify) return cmd_verify(common, va);
        if (*codes) return cmd_codes(common, ca);
        if (*fft) return cmd_fft(common, fa);
        if (*pairing) return cmd_pairing(common, pa);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
