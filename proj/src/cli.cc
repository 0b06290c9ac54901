// Copyright 2026 The opmagic Authors
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

#include "opmagic/cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opmagic/dense_oracle.h"
#include "opmagic/haar_stats.h"
#include "opmagic/heisenberg.h"
#include "opmagic/io.h"
#include "opmagic/magic.h"
#include "opmagic/parallel.h"
#include "opmagic/rng.h"
#include "opmagic/xxz.h"

#ifndef OPMAGIC_VERSION
#define OPMAGIC_VERSION "0.0.0"
#endif

namespace opmagic {

namespace {

using nlohmann::json;

struct Record {
    std::string command;
    json config = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

struct Globals {
    uint64_t seed = 1;
    size_t workers = 1;
    std::string format = "csv";
    std::string out_path;
};

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_cell(const json &v) {
    if (v.is_number_float()) {
        return format_double(v.get<double>());
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : s) {
                q += c;
                if (c == '"') {
                    q += '"';
                }
            }
            return q + "\"";
        }
        return s;
    }
    if (v.is_null()) {
        return "nan";
    }
    return v.dump();
}

json alpha_json(double alpha) {
    if (std::isinf(alpha)) {
        return "inf";
    }
    return alpha;
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    for (const auto &s : out) {
        if (s.empty()) {
            throw ParseError("Empty entry in list '" + text + "'.");
        }
    }
    return out;
}

double parse_alpha(const std::string &s) {
    std::string low;
    for (char c : s) {
        low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (low == "inf" || low == "infinity") {
        return ALPHA_INFINITY;
    }
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || std::isnan(v) || v < 0) {
        throw ParseError("Invalid Renyi index '" + s + "'.");
    }
    return v;
}

std::vector<double> parse_alpha_list(const std::string &text) {
    std::vector<double> out;
    for (const auto &s : split_list(text)) {
        out.push_back(parse_alpha(s));
    }
    return out;
}

std::vector<double> parse_angle_list(const std::string &text) {
    std::vector<double> out;
    for (const auto &s : split_list(text)) {
        out.push_back(parse_angle(s));
    }
    return out;
}

size_t parse_count(const std::string &s) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("Invalid count '" + s + "'.");
    }
    return v;
}

/// "1..8", "1,2,5" or a mix such as "1..3,7".
std::vector<size_t> parse_count_list(const std::string &text) {
    std::vector<size_t> out;
    for (const auto &s : split_list(text)) {
        size_t dots = s.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(s));
            continue;
        }
        size_t lo = parse_count(s.substr(0, dots));
        size_t hi = parse_count(s.substr(dots + 2));
        if (hi < lo || hi - lo > 100000) {
            throw ParseError("Invalid range '" + s + "'.");
        }
        for (size_t v = lo; v <= hi; v++) {
            out.push_back(v);
        }
    }
    return out;
}

SparseOperator load_seed_operator(const std::string &spec, const std::string &file, size_t n) {
    if (!file.empty()) {
        json j;
        try {
            j = json::parse(read_text_file(file));
        } catch (const json::parse_error &e) {
            throw ParseError("Invalid operator JSON in '" + file + "': " + e.what());
        }
        SparseOperator op = operator_from_json(j);
        if (op.num_qubits() != n) {
            throw ParseError("Seed operator size does not match the circuit.");
        }
        return op;
    }
    PauliTerm t = parse_pauli_spec(spec, n);
    return SparseOperator::from_pauli(t.pauli, t.coeff);
}

std::vector<std::string> replayable(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    for (size_t k = 0; k < args.size(); k++) {
        const std::string &a = args[k];
        if (a == "--out" || a == "-o") {
            k++;
            continue;
        }
        if (a.rfind("--out=", 0) == 0) {
            continue;
        }
        out.push_back(a);
    }
    return out;
}

void emit(const Record &rec, const Globals &g, const std::vector<std::string> &args, std::ostream &out) {
    json argv = replayable(args);
    if (g.format == "json") {
        json j;
        j["tool"] = "opmagic";
        j["version"] = OPMAGIC_VERSION;
        j["command"] = rec.command;
        j["seed"] = g.seed;
        j["workers"] = g.workers;
        j["config"] = rec.config;
        j["argv"] = argv;
        j["columns"] = rec.columns;
        json rows = json::array();
        for (const auto &r : rec.rows) {
            rows.push_back(r);
        }
        j["rows"] = rows;
        out << j.dump(2) << "\n";
        return;
    }
    out << "# opmagic " << OPMAGIC_VERSION << "\n";
    out << "# command: " << rec.command << "\n";
    out << "# seed: " << g.seed << "\n";
    out << "# workers: " << g.workers << "\n";
    out << "# config: " << rec.config.dump() << "\n";
    out << "# argv: " << argv.dump() << "\n";
    for (size_t k = 0; k < rec.columns.size(); k++) {
        out << (k ? "," : "") << rec.columns[k];
    }
    out << "\n";
    for (const auto &r : rec.rows) {
        for (size_t k = 0; k < r.size(); k++) {
            out << (k ? "," : "") << csv_cell(r[k]);
        }
        out << "\n";
    }
}

// ---------------------------------------------------------------- commands

struct EvolveArgs {
    std::string circuit;
    std::string seed_op = "X0";
    std::string seed_op_file;
    double prune = DEFAULT_PRUNE_TOLERANCE;
};

Record cmd_evolve(const EvolveArgs &a) {
    Circuit c = load_circuit_file(a.circuit);
    SparseOperator seed = load_seed_operator(a.seed_op, a.seed_op_file, c.num_qubits());
    SparseOperator evolved = evolve_heisenberg(seed, c, a.prune);
    Record rec;
    rec.command = "evolve";
    rec.config = {{"circuit", a.circuit},
                  {"seed_op", a.seed_op},
                  {"seed_op_file", a.seed_op_file},
                  {"prune", a.prune},
                  {"n", c.num_qubits()},
                  {"gates", c.size()}};
    rec.columns = {"pauli", "coeff"};
    for (const auto &t : evolved.terms()) {
        rec.rows.push_back({t.pauli.str(), t.coeff});
    }
    return rec;
}

struct OseArgs {
    std::string circuit;
    std::string seed_op = "X0";
    std::string seed_op_file;
    std::string alphas = "0,1,2,3,inf";
    double prune = DEFAULT_PRUNE_TOLERANCE;
};

Record cmd_ose(const OseArgs &a) {
    Circuit c = load_circuit_file(a.circuit);
    SparseOperator seed = load_seed_operator(a.seed_op, a.seed_op_file, c.num_qubits());
    SparseOperator evolved = evolve_heisenberg(seed, c, a.prune);
    Record rec;
    rec.command = "ose";
    rec.config = {{"circuit", a.circuit},
                  {"seed_op", a.seed_op},
                  {"seed_op_file", a.seed_op_file},
                  {"alpha", a.alphas},
                  {"prune", a.prune},
                  {"n", c.num_qubits()},
                  {"t_count", c.t_count()}};
    rec.columns = {"alpha", "purity", "ose", "linear_ose", "rank", "support", "t_count_bound"};
    for (double alpha : parse_alpha_list(a.alphas)) {
        OseReport r = ose(evolved, seed, alpha);
        rec.rows.push_back({alpha_json(alpha), r.purity, r.ose, r.linear_ose, r.rank, r.support_size,
                            t_count_lower_bound(evolved, seed, alpha)});
    }
    return rec;
}

struct XxzArgs {
    std::string J = "pi/8";
    std::string t = "1..8";
    std::string alphas = "2";
    double ax = 1;
    double ay = 0;
    double az = 0;
    size_t max_sim_t = 12;
};

Record cmd_xxz(const XxzArgs &a, const Globals &g) {
    Record rec;
    rec.command = "xxz-scan";
    rec.config = {{"J", a.J}, {"t", a.t}, {"alpha", a.alphas}, {"ax", a.ax},
                  {"ay", a.ay}, {"az", a.az}, {"max_sim_t", a.max_sim_t}};
    rec.columns = {"J", "t", "alpha", "a_x", "a_y", "a_z", "closed", "simulated", "diff"};
    struct Point {
        XxzParams p;
    };
    std::vector<Point> points;
    for (double J : parse_angle_list(a.J)) {
        for (size_t t : parse_count_list(a.t)) {
            for (double alpha : parse_alpha_list(a.alphas)) {
                if (alpha == 0 || std::isinf(alpha)) {
                    throw ParseError("xxz-scan needs finite alpha > 0.");
                }
                points.push_back(Point{XxzParams{J, t, a.ax, a.ay, a.az, alpha}});
            }
        }
    }
    std::vector<std::vector<json>> rows(points.size());
    parallel_for(points.size(), g.workers, [&](size_t i) {
        const XxzParams &p = points[i].p;
        double closed = p.alpha == 1 ? alpha1_ose(p) : closed_form_ose(p);
        double sim = std::numeric_limits<double>::quiet_NaN();
        if (p.t <= a.max_sim_t) {
            sim = simulate_vs_closed(p).simulated;
        }
        rows[i] = {p.J, p.t, p.alpha, p.a_x, p.a_y, p.a_z, closed, sim, std::abs(sim - closed)};
    });
    rec.rows = std::move(rows);
    return rec;
}

struct HaarArgs {
    std::string n = "2";
    std::string alphas = "2";
    size_t samples = 2000;
};

Record cmd_haar(const HaarArgs &a, const Globals &g) {
    Record rec;
    rec.command = "haar-avg";
    rec.config = {{"n", a.n}, {"alpha", a.alphas}, {"samples", a.samples}};
    rec.columns = {"n", "alpha", "samples", "mc_mean", "stderr", "closed_form", "asymptotic"};
    for (size_t n : parse_count_list(a.n)) {
        for (double alpha : parse_alpha_list(a.alphas)) {
            McEstimate est = mc_average_purity(n, alpha, a.samples, g.seed, g.workers);
            double nan = std::numeric_limits<double>::quiet_NaN();
            double closed = nan;
            double asym = nan;
            size_t dim = size_t{1} << n;
            if (alpha == std::floor(alpha) && alpha >= 1) {
                asym = asymptotic_avg_purity(dim, static_cast<int>(alpha));
                if (alpha >= 2 && alpha <= 5) {
                    try {
                        closed = closed_form_avg_purity(dim, static_cast<int>(alpha));
                    } catch (const std::domain_error &) {
                    }
                }
            }
            rec.rows.push_back({n, alpha_json(alpha), a.samples, est.mean, est.std_error, closed, asym});
        }
    }
    return rec;
}

struct DopedArgs {
    size_t n = 10;
    std::string tau = "0..4";
    std::string alphas = "1,2";
    size_t circuits = 100;
    size_t depth = 0;
    std::string seed_op = "X0";
};

Record cmd_doped(const DopedArgs &a, const Globals &g) {
    Record rec;
    rec.command = "doped-scan";
    rec.config = {{"n", a.n}, {"tau", a.tau}, {"alpha", a.alphas}, {"circuits", a.circuits},
                  {"depth", a.depth}, {"seed_op", a.seed_op}};
    rec.columns = {"n", "tau", "alpha", "circuits", "mean_ose", "stderr", "min_ose", "max_ose", "violations"};
    if (a.circuits < 2) {
        throw ParseError("doped-scan needs at least 2 circuits.");
    }
    PauliTerm st = parse_pauli_spec(a.seed_op, a.n);
    SparseOperator seed = SparseOperator::from_pauli(st.pauli, st.coeff);
    auto alphas = parse_alpha_list(a.alphas);
    double m0 = std::log2(static_cast<double>(seed.rank()));
    for (size_t tau : parse_count_list(a.tau)) {
        std::vector<std::vector<double>> values(alphas.size(), std::vector<double>(a.circuits));
        uint64_t tau_seed = derive_seed(g.seed, tau);
        parallel_for(a.circuits, g.workers, [&](size_t i) {
            Circuit c = doped_circuit(a.n, tau, a.depth, derive_seed(tau_seed, i));
            SparseOperator ev = evolve_heisenberg(seed, c);
            for (size_t k = 0; k < alphas.size(); k++) {
                values[k][i] = ose(ev, seed, alphas[k]).ose;
            }
        });
        for (size_t k = 0; k < alphas.size(); k++) {
            McEstimate est = summarize(values[k], tau_seed);
            double lo = *std::min_element(values[k].begin(), values[k].end());
            double hi = *std::max_element(values[k].begin(), values[k].end());
            size_t bad = 0;
            for (double v : values[k]) {
                if (v > static_cast<double>(tau) + m0 + 1e-9) {
                    bad++;
                }
            }
            rec.rows.push_back({a.n, tau, alpha_json(alphas[k]), a.circuits, est.mean, est.std_error, lo, hi, bad});
        }
    }
    return rec;
}

struct TruncateArgs {
    std::string circuit;
    size_t n = 4;
    size_t gates = 12;
    std::string seed_op = "X0";
    size_t states = 20;
};

Record cmd_truncate(const TruncateArgs &a, const Globals &g) {
    Circuit c = a.circuit.empty() ? random_mixed_circuit(a.n, a.gates, g.seed) : load_circuit_file(a.circuit);
    size_t n = c.num_qubits();
    if (n > dense::MAX_DENSE_QUBITS) {
        throw ParseError("truncate-study evaluates expectations densely and needs n <= 6.");
    }
    PauliTerm st = parse_pauli_spec(a.seed_op, n);
    SparseOperator seed = SparseOperator::from_pauli(st.pauli, st.coeff);
    SparseOperator evolved = evolve_heisenberg(seed, c);
    Record rec;
    rec.command = "truncate-study";
    rec.config = {{"circuit", a.circuit}, {"n", n}, {"gates", c.size()}, {"seed_op", a.seed_op}, {"states", a.states}};
    rec.columns = {"chi", "epsilon", "kept_weight", "bound", "max_error_raw", "max_error_normalized"};
    std::vector<dense::Vector> psis;
    std::vector<double> exact;
    for (size_t k = 0; k < a.states; k++) {
        psis.push_back(dense::random_stabilizer_state(n, derive_seed(g.seed, k + 1)));
        exact.push_back(dense::expectation(evolved, psis.back()));
    }
    for (size_t chi = 1; chi <= evolved.rank(); chi++) {
        TruncationResult tr = truncate_top(evolved, chi);
        SparseOperator w = tr.normalized();
        double raw = 0;
        double norm = 0;
        for (size_t k = 0; k < psis.size(); k++) {
            raw = std::max(raw, std::abs(exact[k] - dense::expectation(tr.kept, psis[k])));
            norm = std::max(norm, std::abs(exact[k] - dense::expectation(w, psis[k])));
        }
        rec.rows.push_back({chi, tr.epsilon, tr.kept_weight, expectation_error_bound(tr.epsilon), raw, norm});
    }
    return rec;
}

struct NullityArgs {
    std::string circuit;
    size_t n = 2;
    size_t gates = 8;
    size_t circuits = 20;
    size_t states = 20;
};

Record cmd_nullity(const NullityArgs &a, const Globals &g) {
    std::vector<Circuit> circuits;
    if (!a.circuit.empty()) {
        circuits.push_back(load_circuit_file(a.circuit));
    } else {
        for (size_t i = 0; i < a.circuits; i++) {
            circuits.push_back(random_mixed_circuit(a.n, a.gates, derive_seed(g.seed, i)));
        }
    }
    Record rec;
    rec.command = "nullity";
    rec.config = {{"circuit", a.circuit}, {"n", a.n}, {"gates", a.gates}, {"circuits", a.circuits}, {"states", a.states}};
    rec.columns = {"index", "n", "gates", "t_count", "s_count", "nu", "avg_linear_ose", "nullity_bound",
                   "avg_state_linear_sre", "ratio"};
    std::vector<std::vector<json>> rows(circuits.size());
    parallel_for(circuits.size(), g.workers, [&](size_t i) {
        const Circuit &c = circuits[i];
        size_t n = c.num_qubits();
        if (n > dense::MAX_NULLITY_QUBITS) {
            throw ParseError("nullity needs n <= 4.");
        }
        dense::Matrix u = dense::circuit_unitary(c);
        dense::NullityReport nr = dense::stabilizer_nullity(u);
        auto paulis = enumerate_paulis(n);
        double lin = 0;
        for (size_t k = 1; k < paulis.size(); k++) {
            SparseOperator seed = SparseOperator::from_pauli(paulis[k]);
            lin += ose(evolve_heisenberg(seed, c), seed, 2).linear_ose;
        }
        lin /= static_cast<double>(paulis.size() - 1);
        double st = 0;
        for (size_t k = 0; k < a.states; k++) {
            dense::Vector psi = dense::random_stabilizer_state(n, derive_seed(derive_seed(g.seed, i), k));
            st += dense::state_sre(u, psi, 2).linear_sre;
        }
        st = a.states ? st / static_cast<double>(a.states) : std::numeric_limits<double>::quiet_NaN();
        double ratio = lin > 0 ? st / lin : std::numeric_limits<double>::quiet_NaN();
        rows[i] = {i, n, c.size(), c.t_count(), nr.s_count, nr.nu, lin, 1 - std::exp2(-nr.nu), st, ratio};
    });
    rec.rows = std::move(rows);
    return rec;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Sparse Heisenberg-picture Pauli propagation and operator magic studies.", "opmagic"};
    app.set_version_flag("--version", OPMAGIC_VERSION);
    app.fallthrough();
    app.require_subcommand(1, 1);

    Globals g;
    app.add_option("--seed", g.seed, "Master RNG seed")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out,-o", g.out_path, "Output file (default: stdout)");

    EvolveArgs ev;
    auto *evolve = app.add_subcommand("evolve", "Heisenberg-evolve a Pauli seed and list its terms");
    evolve->add_option("--circuit", ev.circuit, "Circuit file (JSON or gate list)")->required();
    evolve->add_option("--seed-op", ev.seed_op, "Seed Pauli ('X0 X1' or '+XXII')")->capture_default_str();
    evolve->add_option("--seed-op-file", ev.seed_op_file, "Seed operator JSON file");
    evolve->add_option("--prune", ev.prune, "Prune tolerance")->capture_default_str();

    OseArgs os;
    auto *ose_cmd = app.add_subcommand("ose", "Operator stabilizer entropies of an evolved seed");
    ose_cmd->add_option("--circuit", os.circuit, "Circuit file (JSON or gate list)")->required();
    ose_cmd->add_option("--seed-op", os.seed_op, "Seed Pauli")->capture_default_str();
    ose_cmd->add_option("--seed-op-file", os.seed_op_file, "Seed operator JSON file");
    ose_cmd->add_option("--alpha", os.alphas, "Comma-separated Renyi indices (inf allowed)")->capture_default_str();
    ose_cmd->add_option("--prune", os.prune, "Prune tolerance")->capture_default_str();

    XxzArgs xa;
    auto *xxz_cmd = app.add_subcommand("xxz-scan", "Dual-unitary XXZ closed form vs brickwork simulation");
    xxz_cmd->add_option("--J", xa.J, "Comma-separated couplings (pi/8 syntax allowed)")->capture_default_str();
    xxz_cmd->add_option("--t", xa.t, "Layer counts, e.g. 1..8 or 1,2,4")->capture_default_str();
    xxz_cmd->add_option("--alpha", xa.alphas, "Comma-separated Renyi indices")->capture_default_str();
    xxz_cmd->add_option("--ax", xa.ax, "Seed X coefficient")->capture_default_str();
    xxz_cmd->add_option("--ay", xa.ay, "Seed Y coefficient")->capture_default_str();
    xxz_cmd->add_option("--az", xa.az, "Seed Z coefficient")->capture_default_str();
    xxz_cmd->add_option("--max-sim-t", xa.max_sim_t, "Largest t that is also simulated")->capture_default_str();

    HaarArgs ha;
    auto *haar_cmd = app.add_subcommand("haar-avg", "Monte-Carlo Haar average of the Pauli purity");
    haar_cmd->add_option("--n", ha.n, "Qubit counts (1..5)")->capture_default_str();
    haar_cmd->add_option("--alpha", ha.alphas, "Comma-separated Renyi indices")->capture_default_str();
    haar_cmd->add_option("--samples", ha.samples, "Haar samples per row")->capture_default_str();

    DopedArgs da;
    auto *doped_cmd = app.add_subcommand("doped-scan", "OSE statistics of T-doped Clifford circuits");
    doped_cmd->add_option("--n", da.n, "Qubits")->capture_default_str();
    doped_cmd->add_option("--tau", da.tau, "T counts, e.g. 0..4")->capture_default_str();
    doped_cmd->add_option("--alpha", da.alphas, "Comma-separated Renyi indices")->capture_default_str();
    doped_cmd->add_option("--circuits", da.circuits, "Circuits per T count")->capture_default_str();
    doped_cmd->add_option("--depth", da.depth, "Clifford block size (0 = 3 n^2)")->capture_default_str();
    doped_cmd->add_option("--seed-op", da.seed_op, "Seed Pauli")->capture_default_str();

    TruncateArgs ta;
    auto *trunc_cmd = app.add_subcommand("truncate-study", "Pauli truncation error vs expectation-value bound");
    trunc_cmd->add_option("--circuit", ta.circuit, "Circuit file (default: random mixed circuit)");
    trunc_cmd->add_option("--n", ta.n, "Qubits of the random circuit")->capture_default_str();
    trunc_cmd->add_option("--gates", ta.gates, "Gates of the random circuit")->capture_default_str();
    trunc_cmd->add_option("--seed-op", ta.seed_op, "Seed Pauli")->capture_default_str();
    trunc_cmd->add_option("--states", ta.states, "Random stabilizer states")->capture_default_str();

    NullityArgs na;
    auto *null_cmd = app.add_subcommand("nullity", "Stabilizer nullity, averaged linear OSE and state SRE");
    null_cmd->add_option("--circuit", na.circuit, "Circuit file (default: random mixed circuits)");
    null_cmd->add_option("--n", na.n, "Qubits of the random circuits")->capture_default_str();
    null_cmd->add_option("--gates", na.gates, "Gates per random circuit")->capture_default_str();
    null_cmd->add_option("--circuits", na.circuits, "Random circuits")->capture_default_str();
    null_cmd->add_option("--states", na.states, "Random stabilizer states per circuit")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_BAD_INPUT;
    }

    try {
        Record rec;
        if (*evolve) {
            rec = cmd_evolve(ev);
        } else if (*ose_cmd) {
            rec = cmd_ose(os);
        } else if (*xxz_cmd) {
            rec = cmd_xxz(xa, g);
        } else if (*haar_cmd) {
            rec = cmd_haar(ha, g);
        } else if (*doped_cmd) {
            rec = cmd_doped(da, g);
        } else if (*trunc_cmd) {
            rec = cmd_truncate(ta, g);
        } else {
            rec = cmd_nullity(na, g);
        }
        if (g.out_path.empty()) {
            emit(rec, g, args, out);
        } else {
            std::ofstream f(g.out_path);
            if (!f) {
                err << "error: cannot open '" << g.out_path << "' for writing\n";
                return EXIT_BAD_INPUT;
            }
            emit(rec, g, args, f);
            if (!f) {
                err << "error: failed writing '" << g.out_path << "'\n";
                return EXIT_BAD_INPUT;
            }
        }
        return EXIT_OK;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
}

std::vector<std::string> replay_args(std::string_view record) {
    std::string_view body = record;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
        body.remove_prefix(1);
    }
    if (!body.empty() && body.front() == '{') {
        return json::parse(body).at("argv").get<std::vector<std::string>>();
    }
    constexpr std::string_view tag = "# argv: ";
    size_t pos = record.find(tag);
    if (pos == std::string_view::npos) {
        throw ParseError("Record has no embedded argument vector.");
    }
    size_t end = record.find('\n', pos);
    auto line = record.substr(pos + tag.size(), end == std::string_view::npos ? std::string_view::npos : end - pos - tag.size());
    return json::parse(line).get<std::vector<std::string>>();
}

std::string record_rows(std::string_view record) {
    std::string_view body = record;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
        body.remove_prefix(1);
    }
    if (!body.empty() && body.front() == '{') {
        return json::parse(body).at("rows").dump();
    }
    std::string out;
    size_t pos = 0;
    while (pos < record.size()) {
        size_t end = record.find('\n', pos);
        if (end == std::string_view::npos) {
            end = record.size();
        }
        auto line = record.substr(pos, end - pos);
        if (!line.empty() && line.front() != '#') {
            out.append(line);
            out += '\n';
        }
        pos = end + 1;
    }
    return out;
}

}  // namespace opmagic
