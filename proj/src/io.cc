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

#include "opmagic/io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace opmagic {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) {
            k++;
        }
        size_t start = k;
        while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) {
            k++;
        }
        if (k > start) {
            out.push_back(s.substr(start, k - start));
        }
    }
    return out;
}

size_t parse_index(std::string_view s, std::string_view what) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        std::stringstream ss;
        ss << "Invalid " << what << ": '" << s << "'.";
        throw ParseError(ss.str());
    }
    return v;
}

double parse_real(std::string_view s) {
    std::string buf(s);
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(buf, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (buf.empty() || used != buf.size()) {
        std::stringstream ss;
        ss << "Invalid number: '" << s << "'.";
        throw ParseError(ss.str());
    }
    return v;
}

PauliAxis axis_of(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'X':
            return PauliAxis::X;
        case 'Y':
            return PauliAxis::Y;
        case 'Z':
            return PauliAxis::Z;
    }
    std::stringstream ss;
    ss << "Invalid Pauli letter '" << c << "'.";
    throw ParseError(ss.str());
}

const nlohmann::json &field(const nlohmann::json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        std::stringstream ss;
        ss << "Missing JSON field '" << key << "'.";
        throw ParseError(ss.str());
    }
    return j.at(key);
}

}  // namespace

nlohmann::json operator_to_json(const SparseOperator &op) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : op.terms()) {
        terms.push_back(nlohmann::json::array({t.pauli.str(), t.coeff}));
    }
    return nlohmann::json{{"n", op.num_qubits()}, {"terms", terms}};
}

SparseOperator operator_from_json(const nlohmann::json &j) {
    try {
        size_t n = field(j, "n").get<size_t>();
        std::vector<PauliTerm> terms;
        for (const auto &entry : field(j, "terms")) {
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError("Operator terms must be [string, coefficient] pairs.");
            }
            PauliString p = PauliString::from_letters(entry[0].get<std::string>());
            if (p.num_qubits() != n) {
                throw ParseError("Operator term length does not match 'n'.");
            }
            terms.push_back(PauliTerm{p, entry[1].get<double>()});
        }
        return SparseOperator::from_terms(n, std::move(terms), 0);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("Malformed operator JSON: ") + e.what());
    }
}

nlohmann::json circuit_to_json(const Circuit &c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto &g : c.gates()) {
        nlohmann::json e;
        e["kind"] = std::string(gate_name(g.kind));
        if (g.arity() == 2) {
            e["sites"] = {g.q0, g.q1};
        } else {
            e["sites"] = {g.q0};
        }
        if (g.kind == GateKind::RZ || g.kind == GateKind::RZZ) {
            e["theta"] = g.theta;
        }
        gates.push_back(e);
    }
    return nlohmann::json{{"n", c.num_qubits()}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        Circuit c(field(j, "n").get<size_t>());
        for (const auto &e : field(j, "gates")) {
            std::string name = field(e, "kind").get<std::string>();
            auto kind = gate_kind_from_name(name);
            if (!kind) {
                throw ParseError("Unknown gate kind '" + name + "'.");
            }
            const auto &sites = field(e, "sites");
            if (!sites.is_array() || sites.size() != gate_arity(*kind)) {
                throw ParseError("Gate '" + name + "' has the wrong number of sites.");
            }
            Gate g{*kind};
            g.q0 = sites[0].get<uint32_t>();
            if (sites.size() == 2) {
                g.q1 = sites[1].get<uint32_t>();
            }
            if (*kind == GateKind::RZ || *kind == GateKind::RZZ) {
                const auto &theta = field(e, "theta");
                g.theta = theta.is_string() ? parse_angle(theta.get<std::string>()) : theta.get<double>();
            }
            c.append(g);
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("Malformed circuit JSON: ") + e.what());
    }
}

double parse_angle(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        throw ParseError("Empty angle.");
    }
    size_t pi_at = std::string_view::npos;
    for (size_t k = 0; k + 1 < s.size(); k++) {
        if (std::tolower(static_cast<unsigned char>(s[k])) == 'p' &&
            std::tolower(static_cast<unsigned char>(s[k + 1])) == 'i') {
            pi_at = k;
            break;
        }
    }
    if (pi_at == std::string_view::npos) {
        return parse_real(s);
    }
    std::string_view before = s.substr(0, pi_at);
    std::string_view after = s.substr(pi_at + 2);
    if (!before.empty() && before.back() == '*') {
        before.remove_suffix(1);
    }
    double factor = 1;
    if (before == "-") {
        factor = -1;
    } else if (before == "+" || before.empty()) {
        factor = 1;
    } else {
        factor = parse_real(before);
    }
    double divisor = 1;
    if (!after.empty()) {
        if (after.front() != '/') {
            throw ParseError("Invalid angle '" + std::string(text) + "'.");
        }
        divisor = parse_real(after.substr(1));
        if (divisor == 0) {
            throw ParseError("Angle divides by zero.");
        }
    }
    return factor * std::numbers::pi / divisor;
}

PauliTerm parse_signed_pauli(std::string_view text) {
    std::string_view s = trim(text);
    double sign = 1;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
    }
    try {
        return PauliTerm{PauliString::from_letters(s), sign};
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

PauliString parse_site_pauli(std::string_view text, size_t num_qubits) {
    PauliString p(num_qubits);
    uint64_t x = 0;
    uint64_t z = 0;
    for (auto tok : split_ws(text)) {
        if (tok.size() < 2) {
            throw ParseError("Invalid site Pauli token '" + std::string(tok) + "'.");
        }
        PauliAxis a = axis_of(tok[0]);
        size_t site = parse_index(tok.substr(1), "Pauli site");
        if (site >= num_qubits) {
            throw ParseError("Pauli site " + std::to_string(site) + " out of range.");
        }
        uint64_t bit = uint64_t{1} << site;
        if ((x | z) & bit) {
            throw ParseError("Pauli site " + std::to_string(site) + " given twice.");
        }
        if (a != PauliAxis::Z) {
            x |= bit;
        }
        if (a != PauliAxis::X) {
            z |= bit;
        }
    }
    return PauliString(num_qubits, x, z);
}

PauliTerm parse_pauli_spec(std::string_view text, size_t num_qubits) {
    std::string_view s = trim(text);
    bool site_syntax = false;
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            site_syntax = true;
        }
    }
    if (!site_syntax) {
        PauliTerm t = parse_signed_pauli(s);
        if (num_qubits != 0 && t.pauli.num_qubits() != num_qubits) {
            throw ParseError("Pauli string length does not match the qubit count.");
        }
        return t;
    }
    if (num_qubits == 0) {
        throw ParseError("Site-syntax Pauli needs an explicit qubit count.");
    }
    double sign = 1;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
    }
    return PauliTerm{parse_site_pauli(s, num_qubits), sign};
}

Circuit parse_gate_list(std::string_view text, size_t num_qubits) {
    struct Line {
        std::vector<std::string_view> tokens;
        size_t number;
    };
    std::vector<Line> lines;
    size_t declared = 0;
    size_t max_site = 0;
    bool any_site = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        line_no++;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        std::string head(tokens[0]);
        for (auto &ch : head) {
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
        if (head == "qubits") {
            if (tokens.size() != 2) {
                throw ParseError("Line " + std::to_string(line_no) + ": expected 'qubits N'.");
            }
            declared = parse_index(tokens[1], "qubit count");
            continue;
        }
        lines.push_back(Line{tokens, line_no});
    }

    std::vector<Gate> gates;
    for (const auto &ln : lines) {
        auto where = [&]() { return "Line " + std::to_string(ln.number) + ": "; };
        auto kind = gate_kind_from_name(ln.tokens[0]);
        if (!kind) {
            throw ParseError(where() + "unknown gate '" + std::string(ln.tokens[0]) + "'.");
        }
        size_t arity = gate_arity(*kind);
        size_t expected = 1 + arity + ((*kind == GateKind::RZ || *kind == GateKind::RZZ) ? 1 : 0);
        if (ln.tokens.size() != expected) {
            throw ParseError(where() + "expected " + std::to_string(expected - 1) + " arguments.");
        }
        Gate g{*kind};
        g.q0 = static_cast<uint32_t>(parse_index(ln.tokens[1], "site"));
        max_site = std::max<size_t>(max_site, g.q0);
        if (arity == 2) {
            g.q1 = static_cast<uint32_t>(parse_index(ln.tokens[2], "site"));
            max_site = std::max<size_t>(max_site, g.q1);
        }
        if (expected > 1 + arity) {
            g.theta = parse_angle(ln.tokens.back());
        }
        any_site = true;
        gates.push_back(g);
    }
    size_t n = num_qubits != 0 ? num_qubits : declared != 0 ? declared : (any_site ? max_site + 1 : 0);
    if (n == 0) {
        throw ParseError("Cannot infer the qubit count of an empty gate list.");
    }
    Circuit c(n);
    for (const auto &g : gates) {
        c.append(g);
    }
    return c;
}

std::string format_gate_list(const Circuit &c) {
    std::ostringstream out;
    out.precision(17);
    out << "qubits " << c.num_qubits() << "\n";
    for (const auto &g : c.gates()) {
        out << gate_name(g.kind) << " " << g.q0;
        if (g.arity() == 2) {
            out << " " << g.q1;
        }
        if (g.kind == GateKind::RZ || g.kind == GateKind::RZZ) {
            out << " " << g.theta;
        }
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("Cannot open '" + path + "' for reading.");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Circuit load_circuit_file(const std::string &path) {
    std::string text = read_text_file(path);
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError("Invalid circuit JSON in '" + path + "': " + e.what());
        }
        return circuit_from_json(j);
    }
    return parse_gate_list(body);
}

}  // namespace opmagic
