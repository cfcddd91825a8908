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

#include "selquant/frontends.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "selquant/decide.hpp"

namespace selquant {

namespace {

using C = ComplexFieldElement;

int ilog2_ceil(int r) {
    int q = 0;
    while ((1 << q) < r) ++q;
    return q;
}

ComplexMatrix unit(int dim, int a, int b) {
    ComplexMatrix m = zeros<C>(dim, dim);
    m(a, b) = C(1);
    return m;
}

ComplexMatrix from_real(const std::vector<std::vector<FieldElement>> &rows) {
    ComplexMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = C(rows[i][j]);
    return m;
}

ComplexMatrix channel(const std::vector<ComplexMatrix> &kraus, const ComplexMatrix &rho) {
    ComplexMatrix out = zeros<C>(rho.rows(), rho.cols());
    for (const auto &a : kraus) out = add(out, mul(mul(a, rho), dagger(a)));
    return out;
}

}  // namespace

GateSpec make_gate(std::string name, std::vector<ComplexMatrix> kraus) {
    if (kraus.empty()) {
        throw Error(ErrorKind::InvalidArgument, "gate " + name + " has no matrices");
    }
    const Eigen::Index dim = kraus.front().rows();
    int arity = 0;
    while ((Eigen::Index(1) << arity) < dim) ++arity;
    if (arity == 0 || (Eigen::Index(1) << arity) != dim) {
        throw Error(ErrorKind::DimensionMismatch, "gate " + name + " size is not a power of two");
    }
    ComplexMatrix sum = zeros<C>(dim, dim);
    for (const auto &a : kraus) {
        if (a.rows() != dim || a.cols() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "gate " + name + " matrices differ in size");
        }
        sum = add(sum, mul(dagger(a), a));
    }
    if (!equal(sum, identity<C>(dim))) {
        throw Error(ErrorKind::CompletenessViolation, "gate " + name + " violates sum A^dagger A = I");
    }
    return {std::move(name), arity, std::move(kraus)};
}

GateSpec gate_preset(const std::string &raw, const NumberField &field) {
    std::string name = raw;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    const FieldElement z = field.zero();
    const FieldElement o = field.one();
    if (name == "I") return make_gate(name, {identity<C>(2)});
    if (name == "H") {
        auto s = field_sqrt(field.constant(Rational(1, 2)));
        if (!s) {
            throw Error(ErrorKind::RootNotInField, "H needs sqrt(1/2) in " + field.describe());
        }
        return make_gate(name, {from_real({{*s, *s}, {*s, -*s}})});
    }
    if (name == "X") return make_gate(name, {from_real({{z, o}, {o, z}})});
    if (name == "Z") return make_gate(name, {from_real({{o, z}, {z, -o}})});
    if (name == "S") {
        ComplexMatrix s = identity<C>(2);
        s(1, 1) = C(z, o);
        return make_gate(name, {s});
    }
    if (name == "CNOT") {
        ComplexMatrix m = zeros<C>(4, 4);
        m(0, 0) = C(o);
        m(1, 1) = C(o);
        m(3, 2) = C(o);
        m(2, 3) = C(o);
        return make_gate(name, {m});
    }
    if (name == "MEASURE") return make_gate(name, {unit(2, 0, 0), unit(2, 1, 1)});
    throw Error(ErrorKind::InvalidArgument, "unknown gate " + raw);
}

void validate_circuit(const CircuitSpec &circuit) {
    if (circuit.width < 1 || circuit.width > 12) {
        throw Error(ErrorKind::InvalidArgument, "circuit width must lie in 1..12");
    }
    if (circuit.output < 1 || circuit.output > circuit.width) {
        throw Error(ErrorKind::BadTargets, "output qubit out of range");
    }
    for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
        const auto &cg = circuit.gates[g];
        const auto &t = cg.targets;
        std::string where = "gate " + std::to_string(g + 1) + " (" + cg.gate.name + ")";
        if (static_cast<int>(t.size()) != cg.gate.arity) {
            throw Error(ErrorKind::BadTargets, where + " expects " + std::to_string(cg.gate.arity) + " targets");
        }
        for (std::size_t a = 0; a < t.size(); ++a) {
            if (t[a] < 1 || t[a] > circuit.width) throw Error(ErrorKind::BadTargets, where + " target out of range");
            for (std::size_t b = 0; b < a; ++b)
                if (t[a] == t[b]) throw Error(ErrorKind::BadTargets, where + " repeats a target");
        }
    }
}

std::vector<ComplexMatrix> expand_gate(const GateSpec &gate, const std::vector<int> &targets, int n) {
    const int k = gate.arity;
    if (static_cast<int>(targets.size()) != k) {
        throw Error(ErrorKind::BadTargets, "target count does not match the gate's arity");
    }
    for (int a = 0; a < k; ++a) {
        if (targets[a] < 1 || targets[a] > n) throw Error(ErrorKind::BadTargets, "target out of range");
        for (int b = 0; b < a; ++b)
            if (targets[a] == targets[b]) throw Error(ErrorKind::BadTargets, "repeated target");
    }
    const int dim = 1 << n;
    // shift[a]: bit position of the a-th target; target 0 is the gate's MSB.
    std::vector<int> shift(k);
    int mask = 0;
    for (int a = 0; a < k; ++a) {
        shift[a] = n - targets[a];
        mask |= 1 << shift[a];
    }
    auto gather = [&](int x) {
        int local = 0;
        for (int a = 0; a < k; ++a) local = (local << 1) | ((x >> shift[a]) & 1);
        return local;
    };
    auto scatter = [&](int local) {
        int x = 0;
        for (int a = 0; a < k; ++a)
            if ((local >> (k - 1 - a)) & 1) x |= 1 << shift[a];
        return x;
    };
    std::vector<ComplexMatrix> out;
    for (const auto &g : gate.kraus) {
        ComplexMatrix m = zeros<C>(dim, dim);
        for (int in = 0; in < dim; ++in) {
            const int li = gather(in);
            const int rest = in & ~mask;
            for (int lo = 0; lo < (1 << k); ++lo)
                if (!g(lo, li).is_zero()) m(rest | scatter(lo), in) = g(lo, li);
        }
        out.push_back(std::move(m));
    }
    return out;
}

FieldElement circuit_accept_probability(const CircuitSpec &circuit) {
    validate_circuit(circuit);
    const int dim = 1 << circuit.width;
    ComplexMatrix rho = unit(dim, 0, 0);
    for (const auto &cg : circuit.gates) rho = channel(expand_gate(cg.gate, cg.targets, circuit.width), rho);
    const int bit = circuit.width - circuit.output;
    FieldElement p = circuit.field.zero();
    for (int x = 0; x < dim; ++x)
        if ((x >> bit) & 1) p += rho(x, x).re();
    return p;
}

CompiledProcess circuit_to_process(const CircuitSpec &circuit) {
    validate_circuit(circuit);
    std::vector<CircuitGate> gates = circuit.gates;
    if (gates.empty()) gates.push_back({gate_preset("I", circuit.field), {1}});
    const int r = static_cast<int>(gates.size());
    const int q = ilog2_ceil(r);
    const int s = circuit.width;
    const int data_dim = 1 << s;
    const int idx_dim = 1 << q;
    const int bit = s - circuit.output;
    std::array<ComplexMatrix, 2> proj{zeros<C>(data_dim, data_dim), zeros<C>(data_dim, data_dim)};
    for (int x = 0; x < data_dim; ++x) proj[(x >> bit) & 1](x, x) = C(1);

    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> kraus;
    std::array<int, 3> branch{0, 0, 0};
    auto put = [&](int output, ComplexMatrix m) {
        if (!is_zero_matrix(m)) kraus[{output, branch[output]++}] = std::move(m);
    };
    for (int idx = 0; idx < r; ++idx) {
        for (const auto &a : expand_gate(gates[idx].gate, gates[idx].targets, s)) {
            if (idx + 1 < r) {
                put(0, kron(a, unit(idx_dim, idx + 1, idx)));
            } else {
                put(1, kron(mul(proj[1], a), unit(idx_dim, 0, idx)));
                put(2, kron(mul(proj[0], a), unit(idx_dim, 0, idx)));
            }
        }
    }
    for (int idx = r; idx < idx_dim; ++idx) put(0, kron(identity<C>(data_dim), unit(idx_dim, idx, idx)));
    const int dim = data_dim * idx_dim;
    return {SelectiveQuantumOperation(dim, 3, std::move(kraus)), DensityMatrix::trusted(unit(dim, 0, 0)), q};
}

std::vector<Integer> four_squares(const Integer &n) {
    if (sgn(n) < 0) throw Error(ErrorKind::InvalidArgument, "negative argument to four_squares");
    if (sgn(n) == 0) return {};
    auto isqrt = [](const Integer &x) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
        return r;
    };
    auto two = [&](const Integer &m) -> std::optional<std::pair<Integer, Integer>> {
        if (sgn(m) == 0) return std::make_pair(Integer(0), Integer(0));
        for (Integer z = isqrt(m); 2 * z * z >= m; --z) {
            Integer rest = m - z * z;
            Integer w = isqrt(rest);
            if (w * w == rest) return std::make_pair(z, w);
        }
        return std::nullopt;
    };
    // Legendre: m is a sum of three squares unless m = 4^a (8b + 7).
    auto three_ok = [](Integer m) {
        if (sgn(m) == 0) return true;
        while (mpz_divisible_ui_p(m.get_mpz_t(), 4)) m /= 4;
        return mpz_fdiv_ui(m.get_mpz_t(), 8) != 7;
    };
    std::vector<Integer> out;
    for (Integer x = isqrt(n); sgn(x) >= 0; --x) {
        Integer rem = n - x * x;
        if (!three_ok(rem)) continue;
        for (Integer y = isqrt(rem); sgn(y) >= 0; --y) {
            if (auto zw = two(rem - y * y)) {
                for (const Integer &v : {x, y, zw->first, zw->second})
                    if (sgn(v) != 0) out.push_back(v);
                return out;
            }
        }
    }
    throw Error(ErrorKind::InvalidArgument, "four_squares found no decomposition");
}

CompiledProcess markov_to_process(const MarkovSpec &chain, const MarkovEncodingOptions &options) {
    check_stochastic(chain.matrix);
    const int n = static_cast<int>(chain.matrix.rows());
    auto in_range = [n](int s) { return s >= 0 && s < n; };
    if (!in_range(chain.start) || !in_range(chain.accept) || (chain.reject && !in_range(*chain.reject))) {
        throw Error(ErrorKind::IndexOutOfRange, "chain state out of range");
    }
    if (chain.reject && *chain.reject == chain.accept) {
        throw Error(ErrorKind::InvalidArgument, "accept and reject states coincide");
    }
    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> kraus;
    std::array<int, 3> branch{0, 0, 0};
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            FieldElement p = chain.matrix(i, j);
            if (p.is_zero()) continue;
            if (!p.field_data()) p = chain.field.constant(p.rational_value());
            const int output = i == chain.accept ? 1 : (chain.reject && i == *chain.reject ? 2 : 0);
            std::vector<FieldElement> amps;
            if (auto s = field_sqrt(p)) {
                amps.push_back(*s);
            } else if (options.allow_fallback && p.is_rational()) {
                const Rational &v = p.rational_value();
                if (mpz_sizeinbase(Integer(v.get_num() * v.get_den()).get_mpz_t(), 2) > 64) {
                    throw Error(ErrorKind::RootNotInField, "entry " + v.get_str() + " is too large to split into squares");
                }
                for (const auto &t : four_squares(v.get_num() * v.get_den())) {
                    Rational a(t, v.get_den());
                    a.canonicalize();
                    amps.push_back(chain.field.constant(a));
                }
            } else {
                throw Error(ErrorKind::RootNotInField, "no square root of " + p.to_string() + " in the field");
            }
            for (const auto &a : amps) {
                ComplexMatrix m = zeros<C>(n, n);
                m(i, j) = C(a);
                kraus[{output, branch[output]++}] = std::move(m);
            }
        }
    }
    ComplexMatrix rho = zeros<C>(n, n);
    rho(chain.start, chain.start) = C(chain.field.one());
    return {SelectiveQuantumOperation(n, 3, std::move(kraus)), DensityMatrix::trusted(rho), 0};
}

}  // namespace selquant
