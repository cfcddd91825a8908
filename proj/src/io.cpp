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

#include "selquant/io.hpp"

#include <fstream>

namespace selquant::io {

namespace {

[[noreturn]] void fail(const std::string &msg) {
    throw Error(ErrorKind::ParseError, msg);
}

const json &member(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

long parse_int(const json &j, const char *what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::string str(const Rational &q) {
    return q.get_str();
}

}  // namespace

json load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        fail(path + ": " + e.what());
    }
}

Rational parse_rational(const json &j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail("expected an exact number string, got " + j.dump());
    const std::string s = j.get<std::string>();
    Rational q;
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    mpz_class n, d;
    if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
        fail("malformed number '" + s + "'");
    }
    if (sgn(d) == 0) fail("zero denominator in '" + s + "'");
    q = Rational(n, d);
    q.canonicalize();
    return q;
}

NumberField parse_field(const json &j) {
    if (j.is_null()) return NumberField::rationals();
    if (j.is_string()) return NumberField::preset(j.get<std::string>());
    const json &mp = member(j, "minpoly");
    const json &iso = member(j, "isolating");
    if (!mp.is_array() || !iso.is_array() || iso.size() != 2) fail("malformed field");
    std::vector<Integer> coeffs;
    for (const auto &c : mp) {
        Rational q = parse_rational(c);
        if (q.get_den() != 1) fail("minimal polynomial coefficients must be integers");
        coeffs.push_back(q.get_num());
    }
    FieldOptions opts;
    if (j.contains("check_irreducible")) opts.check_irreducible = j.at("check_irreducible").get<bool>();
    Rational lo = parse_rational(iso[0]), hi = parse_rational(iso[1]);
    if (lo > hi) fail("isolating interval has lo > hi");
    return NumberField::create(IntPolynomial(std::move(coeffs)), RationalInterval(lo, hi), opts);
}

json field_to_json(const NumberField &field) {
    for (const char *name : {"rational", "sqrt2", "golden", "cbrt2"})
        if (NumberField::preset(name) == field) return name;
    json mp = json::array();
    for (const auto &c : field.minpoly().coeffs()) mp.push_back(c.get_str());
    return {{"minpoly", mp}, {"isolating", {str(field.isolating().lo), str(field.isolating().hi)}}};
}

FieldElement parse_real(const json &j, const NumberField &field) {
    if (j.is_object()) {
        const json &cs = member(j, "coeffs");
        if (!cs.is_array()) fail("coeffs must be an array");
        std::vector<Rational> coeffs;
        for (const auto &c : cs) coeffs.push_back(parse_rational(c));
        if (static_cast<int>(coeffs.size()) > field.degree()) {
            fail("more coefficients than the field degree " + std::to_string(field.degree()));
        }
        return field.element(std::move(coeffs));
    }
    return field.constant(parse_rational(j));
}

ComplexFieldElement parse_complex(const json &j, const NumberField &field) {
    if (j.is_array()) {
        if (j.empty() || j.size() > 2) fail("complex entry must be [re] or [re, im]");
        FieldElement re = parse_real(j[0], field);
        return j.size() == 2 ? ComplexFieldElement(re, parse_real(j[1], field)) : ComplexFieldElement(re);
    }
    return ComplexFieldElement(parse_real(j, field));
}

json to_json(const FieldElement &x) {
    if (x.is_rational()) return str(x.rational_value());
    json cs = json::array();
    for (const auto &c : x.coeffs()) cs.push_back(str(c));
    return {{"coeffs", cs}};
}

json to_json(const ComplexFieldElement &x) {
    if (x.is_real()) return to_json(x.re());
    return json::array({to_json(x.re()), to_json(x.im())});
}

namespace {

template <typename S, typename F>
Matrix<S> parse_matrix(const json &j, F &&entry) {
    long rows = parse_int(member(j, "rows"), "rows");
    long cols = parse_int(member(j, "cols"), "cols");
    const json &es = member(j, "entries");
    if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096) fail("bad matrix size");
    if (!es.is_array() || static_cast<long>(es.size()) != rows) fail("entries must hold one array per row");
    Matrix<S> m(rows, cols);
    for (long r = 0; r < rows; ++r) {
        if (!es[r].is_array() || static_cast<long>(es[r].size()) != cols) {
            fail("row " + std::to_string(r + 1) + " does not have " + std::to_string(cols) + " entries");
        }
        for (long c = 0; c < cols; ++c) m(r, c) = entry(es[r][c]);
    }
    return m;
}

template <typename S>
json matrix_json(const Matrix<S> &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace

ComplexMatrix parse_complex_matrix(const json &j, const NumberField &field) {
    return parse_matrix<ComplexFieldElement>(j, [&](const json &e) { return parse_complex(e, field); });
}

FieldMatrix parse_real_matrix(const json &j, const NumberField &field) {
    return parse_matrix<FieldElement>(j, [&](const json &e) { return parse_real(e, field); });
}

json to_json(const ComplexMatrix &m) {
    return matrix_json(m);
}

json to_json(const FieldMatrix &m) {
    return matrix_json(m);
}

ProcessFile parse_process(const json &j) {
    ProcessFile p;
    p.field = parse_field(j.value("field", json()));
    long dim = parse_int(member(j, "dim"), "dim");
    long outputs = parse_int(member(j, "outputs"), "outputs");
    if (dim < 1 || outputs < 2) fail("need dim >= 1 and outputs >= 2");
    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> kraus;
    const json &ks = member(j, "kraus");
    if (!ks.is_array()) fail("kraus must be an array");
    for (const auto &k : ks) {
        long i = parse_int(member(k, "i"), "i");
        long b = parse_int(member(k, "j"), "j");
        if (i < 0 || i >= outputs) fail("output label " + std::to_string(i) + " out of range");
        if (b < 1) fail("branch index j is 1-based");
        ComplexMatrix m = parse_complex_matrix(member(k, "matrix"), p.field);
        if (!kraus.emplace(SelectiveQuantumOperation::Key{i, b - 1}, std::move(m)).second) {
            fail("duplicate matrix for (i, j) = (" + std::to_string(i) + ", " + std::to_string(b) + ")");
        }
    }
    p.op = SelectiveQuantumOperation(dim, outputs, std::move(kraus));
    p.rho = parse_complex_matrix(member(j, "rho"), p.field);
    if (p.rho.rows() != dim || p.rho.cols() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "rho is not dim x dim");
    }
    p.beta = j.contains("beta") ? parse_real(j.at("beta"), p.field) : p.field.zero();
    return p;
}

json process_to_json(const ProcessFile &p) {
    json ks = json::array();
    for (const auto &[key, m] : p.op.entries()) {
        ks.push_back({{"i", key.first}, {"j", key.second + 1}, {"matrix", to_json(m)}});
    }
    return {{"field", field_to_json(p.field)}, {"dim", p.op.dim()}, {"outputs", p.op.outputs()},
            {"kraus", ks}, {"rho", to_json(p.rho)}, {"beta", to_json(p.beta)}};
}

CircuitSpec parse_circuit(const json &j) {
    CircuitSpec c;
    c.field = parse_field(j.value("field", json()));
    c.width = static_cast<int>(parse_int(member(j, "width"), "width"));
    c.output = static_cast<int>(parse_int(member(j, "output"), "output"));
    const json &gs = member(j, "gates");
    if (!gs.is_array()) fail("gates must be an array");
    for (const auto &g : gs) {
        CircuitGate cg;
        if (g.contains("kraus")) {
            std::vector<ComplexMatrix> ks;
            for (const auto &m : g.at("kraus")) ks.push_back(parse_complex_matrix(m, c.field));
            cg.gate = make_gate(g.value("name", std::string("custom")), std::move(ks));
        } else {
            const json &name = member(g, "name");
            if (!name.is_string()) fail("gate name must be a string");
            cg.gate = gate_preset(name.get<std::string>(), c.field);
        }
        const json &ts = member(g, "targets");
        if (!ts.is_array()) fail("targets must be an array");
        for (const auto &t : ts) cg.targets.push_back(static_cast<int>(parse_int(t, "target")));
        c.gates.push_back(std::move(cg));
    }
    validate_circuit(c);
    return c;
}

json circuit_to_json(const CircuitSpec &c) {
    json gs = json::array();
    for (const auto &g : c.gates) {
        json e = {{"name", g.gate.name}, {"targets", g.targets}};
        bool preset = false;
        try {
            GateSpec ref = gate_preset(g.gate.name, c.field);
            preset = ref.kraus.size() == g.gate.kraus.size();
            for (std::size_t k = 0; preset && k < ref.kraus.size(); ++k) preset = equal(ref.kraus[k], g.gate.kraus[k]);
        } catch (const Error &) {
            preset = false;
        }
        if (!preset) {
            json ks = json::array();
            for (const auto &m : g.gate.kraus) ks.push_back(to_json(m));
            e["kraus"] = ks;
        }
        gs.push_back(e);
    }
    return {{"field", field_to_json(c.field)}, {"width", c.width}, {"gates", gs}, {"output", c.output}};
}

MarkovSpec parse_chain(const json &j) {
    MarkovSpec m;
    m.field = parse_field(j.value("field", json()));
    m.matrix = parse_real_matrix(member(j, "matrix"), m.field);
    m.start = static_cast<int>(parse_int(member(j, "start"), "start")) - 1;
    m.accept = static_cast<int>(parse_int(member(j, "accept"), "accept")) - 1;
    if (j.contains("reject") && !j.at("reject").is_null()) {
        m.reject = static_cast<int>(parse_int(j.at("reject"), "reject")) - 1;
    }
    return m;
}

json chain_to_json(const MarkovSpec &c) {
    json out = {{"field", field_to_json(c.field)},
                {"matrix", to_json(c.matrix)},
                {"start", c.start + 1},
                {"accept", c.accept + 1}};
    if (c.reject) out["reject"] = *c.reject + 1;
    return out;
}

json to_json(const BoundConstants &c) {
    return {{"h", c.h.get_str()},
            {"entry_degree", c.entry_degree},
            {"p", c.p},
            {"degree_y", c.degree_y},
            {"height_v", c.height_v.get_str()},
            {"height_u", c.height_u.get_str()},
            {"alpha_upper", str(c.alpha_upper)},
            {"log2_delta_b", ceil_log2(c.delta_b)},
            {"log2_delta_a", ceil_log2(c.delta_a)},
            {"c1", c.c1},
            {"separation", "2^" + std::to_string(1 - c.c1)},
            {"mu", c.mu},
            {"nu", c.nu}};
}

json to_json(const DecisionResult &r) {
    json out = {{"verdict", to_string(r.verdict)}, {"method", to_string(r.method)}, {"certified", r.certified}};
    if (r.witness) out["limit"] = to_json(*r.witness);
    if (r.limit) {
        out["order"] = r.limit->order;
        out["det_degree"] = r.limit->det_degree;
        out["minor_degree"] = r.limit->minor_degree;
    }
    if (r.constants) out["constants"] = to_json(*r.constants);
    if (r.approx) {
        out["mu"] = r.approx->mu;
        out["nu"] = r.approx->nu;
        out["v_bits"] = mpz_sizeinbase(r.approx->v.get_mpz_t(), 2);
        out["f_sign"] = sgn(r.approx->f);
    }
    return out;
}

}  // namespace selquant::io
